#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library: permutations are plain vectors, polynomials are ordered maps
// from exponent vectors to GMP rationals, and inequalities use a separate
// long-long fraction type.

#include <gmpxx.h>

#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;                       // one-line, 1-based values
using Poly = std::map<std::vector<int>, mpq_class>;  // exponents: x_1..x_n, u_1..u_n

struct Frac {
  long long num = 0, den = 1;
};
Frac frac(long long num, long long den = 1);
Frac operator+(Frac a, Frac b);
bool operator<(Frac a, Frac b);

std::vector<Perm> permutations(int n);
Perm compose(const Perm& p, const Perm& q);  // p(q(i))
Perm inverse(const Perm& p);
int inversions(const Perm& p);

Poly add(const Poly& f, const Poly& g);
Poly mul(const Poly& f, const Poly& g);
Poly linear_x_minus_u(int n, int i, int j);  // x_i − u_j

/// ∏_{i<j} (x_i − u_j).
Poly delta(int n);
/// Per-monomial closed form of (f − s_i f)/(x_i − x_{i+1}).
Poly divided(int n, int i, const Poly& f);
/// ∂_v along a word built from right descents.
Poly d_perm(int n, const Perm& v, const Poly& f);
/// u_j ↦ u_{τ(j)}.
Poly permute_u(int n, const Perm& tau, const Poly& f);
/// x_i ↦ u_{w(i)}.
Poly restrict_at(int n, const Perm& w, const Poly& f);

/// Bruhat order through the subword property: some reduced word of w
/// contains a subword whose product is v.
bool bruhat_by_subword(const Perm& v, const Perm& w);

struct KernelOracle {
  std::set<std::tuple<Perm, Perm, int>> pairs;  // (v, τ, smallest k)
  std::set<Poly> polys;
};

/// Every (v, τ, k) with Σ_{i>k} λ_{v(i)} < Σ_{i>k} μ_{τ(i)} and the distinct
/// ∂_vΔ(x, u_τ).
KernelOracle kernel(const std::vector<Frac>& lambda, const std::vector<Frac>& mu);

/// Number of monomials of each weighted degree 0..max_degree not divisible
/// by any of `leading`.
std::vector<long long> standard_monomials(const std::vector<std::vector<int>>& leading,
                                          const std::vector<int>& weights, int max_degree);

}  // namespace oracle
