#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <shared_mutex>
#include <unordered_map>

#include "weightvar/parallel.hpp"
#include "weightvar/permutation.hpp"
#include "weightvar/poly.hpp"

namespace weightvar {

/// A permuted double Schubert polynomial 𝔗_w^τ = ∂_{w⁻¹τ} Δ(x, u_τ).
struct SchubertClass {
  Permutation w;
  Permutation tau;
  Poly poly;

  /// n(n−1)/2 − ℓ(τ⁻¹w).
  int algebraic_degree() const;
  int cohomological_degree() const { return 2 * algebraic_degree(); }
};

/// Builds every ∂_vΔ top-down from Δ, one ∂_i step at a time along the
/// lexicographically smallest reduced word, and memoises each prefix.
///
/// Thread-safe: concurrent lookups share a reader lock; a missing entry is
/// computed outside the lock and published insert-if-absent. Published
/// polynomials are never modified, so returned references stay valid for
/// the calculator's lifetime.
class SchubertCalculator {
 public:
  explicit SchubertCalculator(int n);

  int n() const noexcept { return n_; }
  const Poly& delta() const noexcept { return delta_; }

  /// ∂_v Δ(x,u).
  const Poly& derivative(const Permutation& v);
  /// ∂_v Δ(x, u_τ) = 𝔗^τ_{τv⁻¹}.
  Poly kernel_class(const Permutation& v, const Permutation& tau);
  SchubertClass schubert_class(const Permutation& w, const Permutation& tau);

  /// Fills the ∂_vΔ table for all of S_n, one length level at a time.
  void precompute(Exec exec = Exec::Parallel);
  std::size_t cached_derivatives() const;

 private:
  const Poly* find(std::size_t rank) const;
  const Poly& publish(std::size_t rank, Poly value);

  int n_;
  Poly delta_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::size_t, Poly> derivatives_;
  std::map<std::pair<std::size_t, std::size_t>, Poly> classes_;
};

/// Process-wide calculator for S_n (created on first use, thread-safe).
SchubertCalculator& shared_schubert(int n);

SchubertClass schubert_class(const Permutation& w, const Permutation& tau);
Poly kernel_class(const Permutation& v, const Permutation& tau);

}  // namespace weightvar
