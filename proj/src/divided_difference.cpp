#include "weightvar/divided_difference.hpp"

#include <map>
#include <numeric>

#include "weightvar/errors.hpp"

namespace weightvar {

Poly determinant_polynomial(int n) {
  Poly delta = Poly::constant(n, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) delta *= Poly::x(n, i) - Poly::u(n, j);
  return delta;
}

namespace {

void check_index(int i, const Poly& f) {
  if (i < 1 || i >= f.block_size())
    throw std::out_of_range("divided difference index " + std::to_string(i) + " out of range for n=" +
                            std::to_string(f.block_size()));
}

}  // namespace

Poly swap_x(const Poly& f, int i) {
  check_index(i, f);
  std::vector<int> map(static_cast<std::size_t>(f.num_vars()));
  std::iota(map.begin(), map.end(), 0);
  std::swap(map[static_cast<std::size_t>(i - 1)], map[static_cast<std::size_t>(i)]);
  return rename_vars(f, map);
}

Poly divided_difference(int i, const Poly& f) {
  check_index(i, f);
  const int n = f.block_size();
  const auto xi = static_cast<std::size_t>(i - 1);
  const Poly g = f - swap_x(f, i);
  if (g.is_zero()) return Poly(n);

  // g = Σ_e C_e x_i^e with C_e free of x_i.
  std::map<int, std::vector<Term>> by_power;
  for (const auto& t : g.terms()) {
    Monomial m = t.mono;
    const int e = m.exp[xi];
    m.exp[xi] = 0;
    by_power[e].push_back(Term{m, t.coeff});
  }
  const int top = by_power.rbegin()->first;
  auto coeff = [&](int e) {
    auto it = by_power.find(e);
    return it == by_power.end() ? Poly(n) : Poly::from_terms(n, it->second);
  };

  // Synthetic division by (x_i − x_{i+1}).
  const Poly next = Poly::x(n, i + 1);
  Poly quotient(n);
  Poly carry(n);
  for (int e = top; e >= 1; --e) {
    carry = coeff(e) + next * carry;  // coefficient of x_i^{e-1} in the quotient
    Monomial shift;
    shift.exp[xi] = static_cast<std::uint8_t>(e - 1);
    quotient += carry * Poly::monomial(n, shift);
  }
  const Poly remainder = coeff(0) + next * carry;
  if (!remainder.is_zero())
    throw ArithmeticError("divided_difference: nonzero remainder dividing by x" + std::to_string(i) + " - x" +
                          std::to_string(i + 1));
  return quotient;
}

Poly divided_difference_word(std::span<const int> word, const Poly& f) {
  Poly r = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (r.is_zero()) break;
    r = divided_difference(*it, r);
  }
  return r;
}

Poly substitute_u(const Poly& f, const Permutation& tau) {
  const int n = f.block_size();
  if (tau.size() != n) throw SizeMismatch("substitute_u: permutation size differs from ring");
  std::vector<int> map(static_cast<std::size_t>(2 * n));
  std::iota(map.begin(), map.end(), 0);
  for (int j = 1; j <= n; ++j) map[static_cast<std::size_t>(n + j - 1)] = n + tau(j) - 1;
  return rename_vars(f, map);
}

}  // namespace weightvar
