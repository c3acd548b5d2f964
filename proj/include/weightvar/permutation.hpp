#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weightvar/rational.hpp"

namespace weightvar {

/// An element of S_n in one-line notation: entry i (1-based) is w(i).
///
/// One-line notation is the only stored form. Reduced words are derived on
/// demand. Values are immutable once constructed.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `one_line` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  /// The simple transposition s_i swapping i and i+1 (1 <= i < n).
  static Permutation simple(int n, int i);
  /// The longest element w0 = [n, n-1, ..., 1].
  static Permutation longest(int n);
  /// s_{i1} s_{i2} ... s_{il} as a composition of functions.
  static Permutation from_word(int n, std::span<const int> word);
  /// `[2134]` for single-digit entries or `[10,2,...]` comma form.
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(one_line_.size()); }
  int operator()(int i) const { return one_line_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const noexcept { return one_line_; }

  Permutation inverse() const;
  /// Number of inversions.
  int length() const;
  bool is_identity() const;
  std::string to_string() const;

  /// Lexicographic order on one-line notation.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

/// (p ∘ q)(i) = p(q(i)). Throws SizeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

inline int length(const Permutation& p) { return p.length(); }

/// The lexicographically smallest reduced word (i1, ..., il) with
/// p = s_{i1} ... s_{il}.
std::vector<int> reduced_word(const Permutation& p);

/// Every reduced word of p, sorted lexicographically. Refuses n > max_n
/// (std::length_error); the count grows super-exponentially.
std::vector<std::vector<int>> all_reduced_words(const Permutation& p, int max_n = 6);

/// Bruhat order via the tableau criterion: for every k the sorted prefix
/// {v(1..k)} is dominated entrywise by the sorted prefix {w(1..k)}.
bool bruhat_leq(const Permutation& v, const Permutation& w);

/// v ≤_τ w  iff  τ⁻¹v ≤ τ⁻¹w.
bool bruhat_leq_tau(const Permutation& v, const Permutation& w, const Permutation& tau);

/// λ_w: entry i is lam[w⁻¹(i)].
std::vector<Rational> act_on_point(const Permutation& w, std::span<const Rational> lam);

/// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

/// Position of p in all_permutations(p.size()).
std::size_t lex_rank(const Permutation& p);

std::size_t factorial(int n);

}  // namespace weightvar
