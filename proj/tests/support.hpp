#pragma once

// Seeded generators shared by the property tests.

#include <random>
#include <vector>

#include "oracle/oracle.hpp"
#include "weightvar/permutation.hpp"
#include "weightvar/poly.hpp"

namespace testsupport {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline weightvar::Permutation random_permutation(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(v.begin(), v.end(), rng());
  return weightvar::Permutation(v);
}

/// Random polynomial in x_1..x_n, u_1..u_n with small integer coefficients.
inline weightvar::Poly random_poly(int n, int terms, int max_exp) {
  std::vector<weightvar::Term> t;
  for (int i = 0; i < terms; ++i) {
    weightvar::Monomial m;
    for (int s = 0; s < 2 * n; ++s) m.exp[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(uniform(0, max_exp));
    t.push_back(weightvar::Term{m, weightvar::Rational(uniform(-5, 5), uniform(1, 3))});
  }
  return weightvar::Poly::from_terms(n, std::move(t));
}

inline oracle::Poly to_oracle(const weightvar::Poly& f) {
  oracle::Poly r;
  for (const auto& t : f.terms()) {
    std::vector<int> e(static_cast<std::size_t>(f.num_vars()));
    for (int s = 0; s < f.num_vars(); ++s) e[static_cast<std::size_t>(s)] = t.mono.exp[static_cast<std::size_t>(s)];
    r[e] = t.coeff;
  }
  return r;
}

}  // namespace testsupport
