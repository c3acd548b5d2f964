#include "weightvar/symmetric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "weightvar/divided_difference.hpp"

namespace weightvar {

Poly elementary_symmetric(int n, std::span<const int> slots, int i) {
  if (i < 0) throw std::invalid_argument("elementary_symmetric: negative index");
  if (i > static_cast<int>(slots.size())) return Poly(n);
  std::vector<Poly> e(static_cast<std::size_t>(i) + 1, Poly(n));
  e[0] = Poly::constant(n, 1);
  for (int s : slots) {
    const Poly v = Poly::variable(n, s);
    for (int j = i; j >= 1; --j) e[static_cast<std::size_t>(j)] += v * e[static_cast<std::size_t>(j - 1)];
  }
  return e[static_cast<std::size_t>(i)];
}

namespace {

std::vector<int> slot_range(int from, int to) {
  std::vector<int> s(static_cast<std::size_t>(to - from));
  std::iota(s.begin(), s.end(), from);
  return s;
}

}  // namespace

Poly elementary_symmetric_x(int n, int i) { return elementary_symmetric(n, slot_range(0, n), i); }
Poly elementary_symmetric_u(int n, int i) { return elementary_symmetric(n, slot_range(n, 2 * n), i); }

bool is_block_symmetric(const Poly& f, int k) {
  const int n = f.block_size();
  if (k < 1 || k >= n) throw std::invalid_argument("is_block_symmetric requires 1 <= k <= n-1");
  for (int i = 1; i < n; ++i) {
    if (i == k) continue;
    if (swap_x(f, i) != f) return false;
  }
  return true;
}

namespace {

// Memoised powers e_i(block)^p in the flag ring.
class EspPowers {
 public:
  EspPowers(int n, int k) : n_(n), a_(slot_range(0, k)), b_(slot_range(k, n)) {}

  const Poly& a(int i, int p) { return get(cache_a_, a_, i, p); }
  const Poly& b(int j, int p) { return get(cache_b_, b_, j, p); }

 private:
  const Poly& get(std::map<std::pair<int, int>, Poly>& cache, const std::vector<int>& slots, int i, int p) {
    auto it = cache.find({i, p});
    if (it != cache.end()) return it->second;
    Poly v = p == 0 ? Poly::constant(n_, 1) : pow(elementary_symmetric(n_, slots, i), p);
    return cache.emplace(std::make_pair(i, p), std::move(v)).first->second;
  }

  int n_;
  std::vector<int> a_, b_;
  std::map<std::pair<int, int>, Poly> cache_a_, cache_b_;
};

}  // namespace

Poly rewrite_in_block_esp(const Poly& f, int k) {
  if (!is_block_symmetric(f, k)) throw std::invalid_argument("rewrite_in_block_esp: input is not block-symmetric");
  const int n = f.block_size();
  EspPowers powers(n, k);
  std::vector<Term> out;
  Poly r = f;
  while (!r.is_zero()) {
    const auto lead_it = std::max_element(r.terms().begin(), r.terms().end(),
                                          [](const Term& s, const Term& t) { return s.mono < t.mono; });
    const Term lead = *lead_it;

    Monomial u_part;
    for (int s = n; s < 2 * n; ++s) u_part.exp[static_cast<std::size_t>(s)] = lead.mono.exp[static_cast<std::size_t>(s)];
    Monomial target = u_part;  // exponents in the a/b/u ring
    Poly product = Poly::monomial(n, u_part, lead.coeff);

    auto block = [&](int from, int to, bool is_a) {
      for (int s = from; s < to; ++s) {
        const int here = lead.mono.exp[static_cast<std::size_t>(s)];
        const int after = s + 1 < to ? lead.mono.exp[static_cast<std::size_t>(s + 1)] : 0;
        if (here < after) throw std::logic_error("rewrite_in_block_esp: leading exponents not a partition");
        const int p = here - after;
        const int idx = s - from + 1;
        target.exp[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(p);
        if (p > 0) product *= is_a ? powers.a(idx, p) : powers.b(idx, p);
      }
    };
    block(0, k, true);
    block(k, n, false);

    r -= product;
    out.push_back(Term{target, lead.coeff});
  }
  return Poly::from_terms(n, std::move(out));
}

Poly expand_block_esp(const Poly& g, int k) {
  const int n = g.block_size();
  EspPowers powers(n, k);
  Poly out(n);
  for (const auto& t : g.terms()) {
    Monomial u_part;
    for (int s = n; s < 2 * n; ++s) u_part.exp[static_cast<std::size_t>(s)] = t.mono.exp[static_cast<std::size_t>(s)];
    Poly term = Poly::monomial(n, u_part, t.coeff);
    for (int s = 0; s < n; ++s) {
      const int p = t.mono.exp[static_cast<std::size_t>(s)];
      if (p == 0) continue;
      term *= s < k ? powers.a(s + 1, p) : powers.b(s - k + 1, p);
    }
    out += term;
  }
  return out;
}

}  // namespace weightvar
