#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace weightvar {

/// Malformed textual input (rationals, permutations, polynomials).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands live in rings / symmetric groups of different sizes.
class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact division left a remainder, or another algebraic identity that
/// must hold by construction failed. Always a bug, never bad user input.
class ArithmeticError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Reduction data violates one or more constraints. `issues()` lists each
/// violated condition separately.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> issues);
  const std::vector<std::string>& issues() const noexcept { return issues_; }

 private:
  std::vector<std::string> issues_;
};

/// The Groebner basis computation ran out of its pair-reduction budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Hilbert series of a quotient does not terminate.
class NotArtinian : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace weightvar
