#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weightvar/parallel.hpp"
#include "weightvar/permutation.hpp"
#include "weightvar/poly.hpp"
#include "weightvar/rational.hpp"

namespace weightvar {

/// Reduction data: a spectrum (λ, or ν written out with multiplicity) and a
/// reduction point μ.
struct ReductionInput {
  enum class Kind { Generic, Grassmannian };

  Kind kind = Kind::Generic;
  std::vector<Rational> spectrum;
  std::vector<Rational> mu;
  int k = 0;  // Grassmannian block size
  Rational nu1, nu2;

  static ReductionInput generic(std::vector<Rational> lambda, std::vector<Rational> mu);
  /// Spectrum (ν₁ repeated k times, ν₂ repeated n−k times).
  static ReductionInput grassmannian(int n, int k, Rational nu1, Rational nu2, std::vector<Rational> mu);

  int n() const noexcept { return static_cast<int>(spectrum.size()); }
  bool is_grassmannian() const noexcept { return kind == Kind::Grassmannian; }
};

/// Shape, ordering and sum conditions only.
std::vector<std::string> structural_issues(const ReductionInput& input);

struct ValidationOptions {
  bool skip_regularity = false;
};

/// Every violated condition, each naming the offending indices. Empty when
/// the input is usable.
std::vector<std::string> validation_issues(const ReductionInput& input, const ValidationOptions& opts = {});

/// Throws ValidationError listing validation_issues().
void validate(const ReductionInput& input, const ValidationOptions& opts = {});

/// μ lies in the permutohedron of λ: sorted μ is majorized by λ.
bool in_polytope(std::span<const Rational> mu, std::span<const Rational> lambda);

/// A pair of equal-size index sets whose μ- and λ-sums agree.
struct WallCoincidence {
  std::vector<int> mu_indices;  // 1-based
  std::vector<int> lambda_indices;
  Rational value;
};

/// All coincidences Σ_{S} μ = Σ_{R} λ with |S| = |R| in 1..n−1. Sorted by
/// size, then index sets.
std::vector<WallCoincidence> wall_coincidences(std::span<const Rational> mu, std::span<const Rational> lambda);

/// No wall coincidences. Sufficient, not necessary, for regularity.
bool is_regular(std::span<const Rational> mu, std::span<const Rational> lambda);

/// η_k^τ(p) = Σ_{i=k+1..n} p[τ(i)].
Rational eta(int k, const Permutation& tau, std::span<const Rational> p);

/// A passing pair: Σ_{i>k} λ_{v(i)} < Σ_{i>k} μ_{τ(i)} with k the smallest
/// such index.
struct KernelPair {
  Permutation v;
  Permutation tau;
  int k_witness = 0;
  friend bool operator==(const KernelPair&, const KernelPair&) = default;
};

struct KernelCertificate {
  Permutation v;
  Permutation tau;
  int k_witness = 0;
  Poly poly;  // ∂_v Δ(x, u_τ)
};

/// All passing (v, τ) with their smallest witness, ordered lexicographically
/// by (v, τ). The parallel and serial kernels return identical vectors.
std::vector<KernelPair> enumerate_pairs(std::span<const Rational> spectrum, std::span<const Rational> mu,
                                        Exec exec = Exec::Parallel);

struct KernelOptions {
  /// Keep, for each τ, only the pairs whose v is Bruhat-maximal among the
  /// passing v (equivalently τv⁻¹ is ≤_τ-maximal).
  bool prune = false;
  Exec exec = Exec::Parallel;
};

struct KernelSet {
  /// Every passing certificate, ordered by (v, τ).
  std::vector<KernelCertificate> certificates;
  /// Indices into `certificates`, one per distinct polynomial (its first
  /// certificate), ordered by algebraic degree then certificate order.
  std::vector<std::size_t> generators;

  std::vector<Poly> generator_polys() const;
  /// Distinct generator polynomials of algebraic degree d.
  std::vector<Poly> generators_of_degree(int d) const;
  int min_degree() const;
};

/// Kernel generators for a generic spectrum. Expects validated input.
KernelSet kernel_pairs(const ReductionInput& input, const KernelOptions& opts = {});

/// kernel_pairs on the ν-spectrum restricted to classes symmetric in
/// x_1..x_k and in x_{k+1}..x_n.
KernelSet grassmannian_kernel(const ReductionInput& input, const KernelOptions& opts = {});

/// Rechecks the certificate inequality for k_witness and the minimality of
/// the witness.
bool certificate_holds(const KernelPair& pair, std::span<const Rational> spectrum, std::span<const Rational> mu);

}  // namespace weightvar
