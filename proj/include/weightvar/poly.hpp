#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weightvar/rational.hpp"

namespace weightvar {

/// Largest supported n. Polynomials live in 2n variables.
inline constexpr int kMaxBlock = 8;
inline constexpr int kMaxVars = 2 * kMaxBlock;

/// Dense exponent vector over the 2n slots. Slots [0, n) are the x-block
/// (or the a/b blocks after a block rewrite), slots [n, 2n) the u-block.
/// Unused slots stay zero.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};

  int degree() const noexcept {
    int d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  int weighted_degree(std::span<const int> weights) const noexcept {
    int d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) d += weights[i] * exp[i];
    return d;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Plain lexicographic comparison of exponent vectors.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

bool divides(const Monomial& a, const Monomial& b) noexcept;
Monomial operator*(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
/// b / a; requires divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a) noexcept;
bool coprime(const Monomial& a, const Monomial& b) noexcept;

/// Canonical storage order: higher total degree first, then lexicographically
/// larger exponent vector first (x1 > x2 > ... > u1 > ... > un).
inline bool canonical_greater(const Monomial& a, const Monomial& b) noexcept {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a > b;
}

struct Term {
  Monomial mono;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with exact rational coefficients in 2n variables.
/// Terms are kept in canonical order without zero coefficients, so equality
/// is structural.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int n);

  static Poly constant(int n, const Rational& c);
  /// The polynomial consisting of the single variable in `slot` (0-based).
  static Poly variable(int n, int slot);
  static Poly x(int n, int i) { return variable(n, i - 1); }
  static Poly u(int n, int j) { return variable(n, n + j - 1); }
  static Poly monomial(int n, const Monomial& m, const Rational& c = 1);
  /// Sorts, merges equal monomials and drops zeros.
  static Poly from_terms(int n, std::vector<Term> terms);

  int block_size() const noexcept { return n_; }
  int num_vars() const noexcept { return 2 * n_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Total algebraic degree; -1 for the zero polynomial.
  int degree() const noexcept;
  int weighted_degree(std::span<const int> weights) const noexcept;
  bool is_homogeneous() const noexcept;
  bool is_homogeneous(std::span<const int> weights) const noexcept;
  Poly homogeneous_component(int d) const;
  Rational coefficient(const Monomial& m) const;
  /// True when every x-block exponent is zero.
  bool is_u_only() const noexcept;

  Poly& operator+=(const Poly& g);
  Poly& operator-=(const Poly& g);
  Poly& operator*=(const Poly& g);
  friend Poly operator+(Poly f, const Poly& g) { return f += g; }
  friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
  friend Poly operator*(const Poly& f, const Poly& g);
  friend Poly operator-(const Poly& f);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void check_same_ring(const Poly& g, const char* op) const;

  int n_ = 0;
  std::vector<Term> terms_;
};

Poly scale(const Rational& c, const Poly& f);
Poly pow(const Poly& f, int e);
/// Moves the exponent of slot s to slot slot_map[s]; exponents landing on the
/// same slot add.
Poly rename_vars(const Poly& f, std::span<const int> slot_map);
/// Multivariate exact division. Throws ArithmeticError on a nonzero remainder.
Poly divide_exact(const Poly& f, const Poly& g);

/// Variable roster of a polynomial ring: names and grading weights.
///
/// Flag rings name the slots x1..xn, u1..un. Block rings (the Grassmannian
/// presentation) name them a1..ak, b1..b(n-k), u1..un with weights i, j, 1.
struct Ring {
  enum class Scheme { Flag, Block };

  int n = 0;
  Scheme scheme = Scheme::Flag;
  int k = 0;

  static Ring flag(int n);
  static Ring block(int n, int k);

  int num_vars() const noexcept { return 2 * n; }
  std::string var_name(int slot) const;
  int weight(int slot) const noexcept;
  std::vector<int> weights() const;

  friend bool operator==(const Ring&, const Ring&) = default;
};

/// Canonical expanded form, e.g. `x1^2 - x1*u2 - x1*u3 + u2*u3`.
std::string format(const Poly& f, const Ring& ring);
inline std::string format(const Poly& f) { return format(f, Ring::flag(f.block_size())); }

/// Accepts `+ - * ^`, parentheses, integer and `p/q` literals and the ring's
/// variable names. Throws ParseError.
Poly parse_poly(std::string_view text, const Ring& ring);

}  // namespace weightvar

namespace weightvar {

/// A strict total order on polynomials (term count, then terms), used to
/// deduplicate generator sets deterministically.
bool structural_less(const Poly& f, const Poly& g);

}  // namespace weightvar
