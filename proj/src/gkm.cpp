#include "weightvar/gkm.hpp"

#include <algorithm>

#include "weightvar/errors.hpp"
#include "weightvar/schubert.hpp"

namespace weightvar {

Poly restrict_at(const Poly& f, const Permutation& w) {
  const int n = f.block_size();
  if (w.size() != n) throw SizeMismatch("restrict_at: permutation size does not match the ring");
  std::vector<int> slot_map(static_cast<std::size_t>(2 * n));
  for (int i = 1; i <= n; ++i) {
    slot_map[static_cast<std::size_t>(i - 1)] = n + w(i) - 1;
    slot_map[static_cast<std::size_t>(n + i - 1)] = n + i - 1;
  }
  return rename_vars(f, slot_map);
}

namespace {

std::vector<Poly> restrict_all(const Poly& f, const std::vector<Permutation>& points, Exec exec) {
  std::vector<Poly> values(points.size());
  const long count = static_cast<long>(points.size());
  if (exec == Exec::Serial) {
    for (long i = 0; i < count; ++i) values[static_cast<std::size_t>(i)] = restrict_at(f, points[static_cast<std::size_t>(i)]);
    return values;
  }
  ExceptionSlot slot;
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i)
    slot.run([&] { values[static_cast<std::size_t>(i)] = restrict_at(f, points[static_cast<std::size_t>(i)]); });
  slot.rethrow();
  return values;
}

}  // namespace

RestrictionTuple restriction_tuple(const Poly& f, Exec exec) {
  const auto points = all_permutations(f.block_size());
  auto values = restrict_all(f, points, exec);
  RestrictionTuple out;
  for (std::size_t i = 0; i < points.size(); ++i) out.emplace_hint(out.end(), points[i], std::move(values[i]));
  return out;
}

std::vector<Permutation> support(const Poly& f, Exec exec) {
  const auto points = all_permutations(f.block_size());
  const auto values = restrict_all(f, points, exec);
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!values[i].is_zero()) out.push_back(points[i]);
  return out;
}

bool same_class(const Poly& f, const Poly& g, Exec exec) {
  if (f.block_size() != g.block_size()) throw SizeMismatch("same_class: different rings");
  return support(f - g, exec).empty();
}

std::map<Permutation, Poly> basis_expand(const Poly& f, const Permutation& tau) {
  const int n = f.block_size();
  if (tau.size() != n) throw SizeMismatch("basis_expand: tau has wrong size");
  const Permutation tau_inv = tau.inverse();
  auto order = all_permutations(n);
  // Longer τ⁻¹w first: a linear extension of ≥_τ.
  std::stable_sort(order.begin(), order.end(), [&](const Permutation& a, const Permutation& b) {
    return length(tau_inv * a) > length(tau_inv * b);
  });

  std::map<Permutation, Poly> coeffs;
  std::vector<std::pair<Permutation, Poly>> solved;  // nonzero a_w with their classes
  for (const auto& z : order) {
    Poly value = restrict_at(f, z);
    for (const auto& [w, weighted] : solved)
      if (bruhat_leq_tau(z, w, tau)) value -= restrict_at(weighted, z);
    const Poly diagonal = restrict_at(schubert_class(z, tau).poly, z);
    if (diagonal.is_zero()) throw ArithmeticError("basis_expand: vanishing diagonal restriction");
    Poly a = divide_exact(value, diagonal);
    if (!a.is_u_only()) throw ArithmeticError("basis_expand: coefficient is not u-only");
    if (!a.is_zero()) solved.emplace_back(z, a * schubert_class(z, tau).poly);
    coeffs.emplace(z, std::move(a));
  }
  return coeffs;
}

Poly combine(const std::map<Permutation, Poly>& coefficients, const Permutation& tau) {
  Poly sum(tau.size());
  for (const auto& [w, a] : coefficients)
    if (!a.is_zero()) sum += a * schubert_class(w, tau).poly;
  return sum;
}

}  // namespace weightvar
