#include "weightvar/schubert.hpp"

#include <array>
#include <mutex>
#include <stdexcept>

#include "weightvar/divided_difference.hpp"
#include "weightvar/errors.hpp"

namespace weightvar {

int SchubertClass::algebraic_degree() const {
  const int n = w.size();
  return n * (n - 1) / 2 - length(tau.inverse() * w);
}

SchubertCalculator::SchubertCalculator(int n) : n_(n), delta_(determinant_polynomial(n)) {
  if (n < 1 || n > kMaxBlock) throw std::out_of_range("SchubertCalculator: n out of range");
  derivatives_.emplace(lex_rank(Permutation::identity(n)), delta_);
}

const Poly* SchubertCalculator::find(std::size_t rank) const {
  std::shared_lock lock(mutex_);
  auto it = derivatives_.find(rank);
  return it == derivatives_.end() ? nullptr : &it->second;
}

const Poly& SchubertCalculator::publish(std::size_t rank, Poly value) {
  std::unique_lock lock(mutex_);
  return derivatives_.try_emplace(rank, std::move(value)).first->second;
}

const Poly& SchubertCalculator::derivative(const Permutation& v) {
  if (v.size() != n_) throw SizeMismatch("derivative: permutation of S_" + std::to_string(v.size()) +
                                         " used with S_" + std::to_string(n_));
  const std::size_t rank = lex_rank(v);
  if (const Poly* hit = find(rank)) return *hit;
  // ∂_v = ∂_{i1} ∂_{s_{i1} v} where i1 is the first letter of a reduced word.
  const int i1 = reduced_word(v).front();
  const Poly& parent = derivative(Permutation::simple(n_, i1) * v);
  return publish(rank, divided_difference(i1, parent));
}

Poly SchubertCalculator::kernel_class(const Permutation& v, const Permutation& tau) {
  if (tau.size() != n_) throw SizeMismatch("kernel_class: tau has wrong size");
  return substitute_u(derivative(v), tau);
}

SchubertClass SchubertCalculator::schubert_class(const Permutation& w, const Permutation& tau) {
  if (w.size() != n_ || tau.size() != n_) throw SizeMismatch("schubert_class: permutation size mismatch");
  const auto key = std::make_pair(lex_rank(w), lex_rank(tau));
  {
    std::shared_lock lock(mutex_);
    auto it = classes_.find(key);
    if (it != classes_.end()) return SchubertClass{w, tau, it->second};
  }
  Poly p = kernel_class(w.inverse() * tau, tau);
  std::unique_lock lock(mutex_);
  const Poly& stored = classes_.try_emplace(key, std::move(p)).first->second;
  return SchubertClass{w, tau, stored};
}

void SchubertCalculator::precompute(Exec exec) {
  const auto perms = all_permutations(n_);
  std::vector<std::vector<const Permutation*>> levels(static_cast<std::size_t>(n_ * (n_ - 1) / 2 + 1));
  for (const auto& p : perms) levels[static_cast<std::size_t>(p.length())].push_back(&p);

  for (const auto& level : levels) {
    const long count = static_cast<long>(level.size());
    if (exec == Exec::Serial) {
      for (long i = 0; i < count; ++i) derivative(*level[static_cast<std::size_t>(i)]);
      continue;
    }
    // Parents live one level up and are already published, so each task
    // performs exactly one divided difference.
    ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) slot.run([&] { derivative(*level[static_cast<std::size_t>(i)]); });
    slot.rethrow();
  }
}

std::size_t SchubertCalculator::cached_derivatives() const {
  std::shared_lock lock(mutex_);
  return derivatives_.size();
}

SchubertCalculator& shared_schubert(int n) {
  if (n < 1 || n > kMaxBlock) throw std::out_of_range("shared_schubert: n out of range");
  static std::array<std::once_flag, kMaxBlock + 1> flags;
  static std::array<std::unique_ptr<SchubertCalculator>, kMaxBlock + 1> calculators;
  const auto idx = static_cast<std::size_t>(n);
  std::call_once(flags[idx], [&] { calculators[idx] = std::make_unique<SchubertCalculator>(n); });
  return *calculators[idx];
}

SchubertClass schubert_class(const Permutation& w, const Permutation& tau) {
  return shared_schubert(w.size()).schubert_class(w, tau);
}

Poly kernel_class(const Permutation& v, const Permutation& tau) {
  return shared_schubert(v.size()).kernel_class(v, tau);
}

}  // namespace weightvar
