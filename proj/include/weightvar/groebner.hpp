#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "weightvar/poly.hpp"

namespace weightvar {

/// Weighted graded reverse lexicographic (slot 0 is the largest variable)
/// or pure lexicographic.
enum class MonomialOrder { Grevlex, Lex };

MonomialOrder parse_order(std::string_view name);
std::string_view order_name(MonomialOrder order);

/// Strict "a > b" under `order` with the ring's weights.
bool order_greater(const Monomial& a, const Monomial& b, const Ring& ring, MonomialOrder order);
Monomial leading_monomial(const Poly& f, const Ring& ring, MonomialOrder order);

/// Generators homogeneous for the ring's weighted grading.
struct GradedIdeal {
  Ring ring;
  std::vector<Poly> generators;
  MonomialOrder order = MonomialOrder::Grevlex;
};

struct GroebnerOptions {
  /// Maximum number of polynomial reductions (S-polynomials plus input
  /// generators) before BudgetExceeded.
  std::size_t budget = 0;  // 0 selects default_budget()
};

/// WEIGHTVAR_BUDGET from the environment, else 200000.
std::size_t default_budget();

/// Reduced, monic Gröbner basis sorted by increasing leading monomial.
struct GroebnerBasis {
  Ring ring;
  MonomialOrder order = MonomialOrder::Grevlex;
  std::vector<Poly> elements;
  std::vector<Monomial> leading;
  std::size_t reductions = 0;
};

/// Degree-by-degree Buchberger with the Gebauer–Möller criteria. Stops early
/// once every monomial in `max weight` consecutive degrees is a leading-term
/// multiple, since all higher S-polynomials then reduce to zero.
GroebnerBasis groebner(const GradedIdeal& ideal, const GroebnerOptions& opts = {});

/// Fully reduced remainder of f modulo the basis.
Poly normal_form(const Poly& f, const GroebnerBasis& gb);

}  // namespace weightvar
