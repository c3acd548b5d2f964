#pragma once

#include <span>
#include <string>
#include <vector>

#include "weightvar/groebner.hpp"
#include "weightvar/poly.hpp"
#include "weightvar/rational.hpp"

namespace weightvar {

/// Numerator K(t) of the Hilbert series K(t) / ∏(1 − t^{w_s}) of k[x]/(gens)
/// for a monomial ideal, by pivot recursion I ↦ (I + p, I : p).
/// Coefficient i is the coefficient of t^i.
std::vector<Integer> hilbert_numerator(std::vector<Monomial> gens, std::span<const int> weights);

/// Dimension of the quotient in each weighted (algebraic) degree, from the
/// leading monomials. Throws NotArtinian when the quotient is infinite.
std::vector<Integer> hilbert_series(std::span<const Monomial> leading, std::span<const int> weights);
std::vector<Integer> hilbert_series(const GroebnerBasis& gb);

/// `1 + 6t^2 + 6t^4 + t^6`: entry d is the coefficient of t^{2d}.
std::string format_poincare(std::span<const Integer> coeffs);

}  // namespace weightvar
