#pragma once

#include <map>
#include <vector>

#include "weightvar/parallel.hpp"
#include "weightvar/permutation.hpp"
#include "weightvar/poly.hpp"

namespace weightvar {

/// Restriction of an equivariant class to the torus-fixed points, one
/// u-only polynomial per permutation. Iteration is lexicographic in w.
using RestrictionTuple = std::map<Permutation, Poly>;

/// r_w: x_i ↦ u_{w(i)}, u_j fixed.
Poly restrict_at(const Poly& f, const Permutation& w);

RestrictionTuple restriction_tuple(const Poly& f, Exec exec = Exec::Parallel);

/// Fixed points where the restriction is nonzero, lexicographic.
std::vector<Permutation> support(const Poly& f, Exec exec = Exec::Parallel);

/// Two polynomials define the same class iff their restriction tuples agree.
bool same_class(const Poly& f, const Poly& g, Exec exec = Exec::Parallel);

/// Coefficients a_w (u-only) with f ≡ Σ_w a_w 𝔗_w^τ as classes. Every w in
/// S_n appears as a key; most coefficients are usually zero.
///
/// The triangular system is solved from the ≤_τ-maximal fixed points down:
/// at z only the classes 𝔗_w^τ with z ≤_τ w are nonzero, and 𝔗_z^τ|_z is a
/// product of nonzero linear forms.
std::map<Permutation, Poly> basis_expand(const Poly& f, const Permutation& tau);

/// Σ_w a_w 𝔗_w^τ.
Poly combine(const std::map<Permutation, Poly>& coefficients, const Permutation& tau);

}  // namespace weightvar
