#include <doctest.h>

#include "support.hpp"
#include "weightvar/divided_difference.hpp"
#include "weightvar/errors.hpp"

using namespace weightvar;

TEST_CASE("determinant polynomial") {
  CHECK(format(determinant_polynomial(2)) == "x1 - u2");
  const Poly d3 = determinant_polynomial(3);
  CHECK(d3 == (Poly::x(3, 1) - Poly::u(3, 2)) * (Poly::x(3, 1) - Poly::u(3, 3)) * (Poly::x(3, 2) - Poly::u(3, 3)));
  CHECK(determinant_polynomial(4).degree() == 6);
}

TEST_CASE("simple divided differences") {
  CHECK(divided_difference(1, Poly::x(2, 1)) == Poly::constant(2, 1));
  CHECK(divided_difference(1, Poly::x(2, 2)) == Poly::constant(2, -1));
  CHECK(divided_difference(1, Poly::u(2, 1)).is_zero());
  const Poly x1 = Poly::x(3, 1), x2 = Poly::x(3, 2);
  CHECK(divided_difference(1, x1 * x1) == x1 + x2);
  CHECK_THROWS(divided_difference(3, x1));
}

TEST_CASE("agrees with the per-monomial closed form") {
  for (int t = 0; t < 100; ++t) {
    const Poly f = testsupport::random_poly(4, 6, 4);
    const int i = testsupport::uniform(1, 3);
    CHECK(testsupport::to_oracle(divided_difference(i, f)) == oracle::divided(4, i, testsupport::to_oracle(f)));
  }
}

TEST_CASE("nil-Coxeter relations on random polynomials") {
  for (int t = 0; t < 100; ++t) {
    const Poly f = testsupport::random_poly(4, 6, 3);
    for (int i = 1; i <= 3; ++i) {
      CHECK(divided_difference(i, divided_difference(i, f)).is_zero());
      // Leibniz rule ∂_i(fg) = ∂_i(f) g + (s_i f) ∂_i(g) with g = x_i
      const Poly g = Poly::x(4, i);
      CHECK(divided_difference(i, f * g) == divided_difference(i, f) * g + swap_x(f, i) * divided_difference(i, g));
    }
    for (int i = 1; i <= 2; ++i) {
      const std::vector<int> a{i, i + 1, i}, b{i + 1, i, i + 1};
      CHECK(divided_difference_word(a, f) == divided_difference_word(b, f));
    }
    const std::vector<int> c{1, 3}, d{3, 1};
    CHECK(divided_difference_word(c, f) == divided_difference_word(d, f));
  }
}

TEST_CASE("d_w does not depend on the reduced word") {
  for (int n = 2; n <= 4; ++n) {
    const Poly delta = determinant_polynomial(n);
    const Poly probe = testsupport::random_poly(n, 5, 3);
    for (const auto& w : all_permutations(n)) {
      const auto words = all_reduced_words(w);
      const Poly ref = divided_difference_word(words.front(), delta);
      const Poly ref_probe = divided_difference_word(words.front(), probe);
      for (const auto& word : words) {
        CHECK(divided_difference_word(word, delta) == ref);
        CHECK(divided_difference_word(word, probe) == ref_probe);
      }
    }
  }
}

TEST_CASE("u substitution") {
  const auto tau = Permutation::parse("[231]");
  CHECK(substitute_u(Poly::u(3, 1), tau) == Poly::u(3, 2));
  CHECK(substitute_u(Poly::x(3, 1) * Poly::u(3, 3), tau) == Poly::x(3, 1) * Poly::u(3, 1));
  CHECK_THROWS_AS(substitute_u(Poly::u(3, 1), Permutation::identity(2)), SizeMismatch);
}
