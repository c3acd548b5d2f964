#pragma once

#include <span>

#include "weightvar/permutation.hpp"
#include "weightvar/poly.hpp"

namespace weightvar {

/// Δ(x,u) = ∏_{i<j} (x_i − u_j), of algebraic degree n(n−1)/2.
Poly determinant_polynomial(int n);

/// s_i acting on the x-block: swaps x_i and x_{i+1}.
Poly swap_x(const Poly& f, int i);

/// ∂_i f = (f − s_i f) / (x_i − x_{i+1}). The u-variables are scalars.
///
/// The quotient is taken by synthetic division in x_i; a nonzero remainder
/// throws ArithmeticError.
Poly divided_difference(int i, const Poly& f);

/// ∂_{i1} ∂_{i2} ... ∂_{il} f: the last index acts first.
Poly divided_difference_word(std::span<const int> word, const Poly& f);

/// Replaces u_j by u_{τ(j)}. This is the convention under which the support
/// of ∂_{w⁻¹τ}Δ(x,u_τ) is {z : z ≤_τ w}.
Poly substitute_u(const Poly& f, const Permutation& tau);

}  // namespace weightvar
