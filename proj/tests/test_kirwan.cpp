#include <doctest.h>

#include <algorithm>
#include <set>

#include "golden.hpp"
#include "support.hpp"
#include "weightvar/errors.hpp"
#include "weightvar/gkm.hpp"
#include "weightvar/kirwan.hpp"
#include "weightvar/schubert.hpp"
#include "weightvar/symmetric.hpp"

using namespace weightvar;
using P = Permutation;

namespace {

std::vector<Rational> q(std::initializer_list<Rational> v) { return v; }

bool proportional(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  return scale(g.terms().front().coeff, f) == scale(f.terms().front().coeff, g);
}

// Random strictly decreasing integers summing to zero, scaled by n so that
// the mean can be subtracted exactly.
std::vector<long long> random_spectrum(int n) {
  std::set<long long> s;
  while (static_cast<int>(s.size()) < n) s.insert(testsupport::uniform(-9, 9));
  std::vector<long long> v(s.rbegin(), s.rend());
  long long sum = 0;
  for (auto x : v) sum += x;
  for (auto& x : v) x = n * x - sum;
  return v;
}

}  // namespace

TEST_CASE("validation names the problem") {
  CHECK(validation_issues(ReductionInput::generic(q({3, 2, -1, -4}), q({0, 0, 0, 0}))).empty());
  const auto wall = validation_issues(ReductionInput::generic(q({2, 1, -1, -2}), q({0, 0, 0, 0})));
  REQUIRE_FALSE(wall.empty());
  CHECK(wall.front().find("{1,4}") != std::string::npos);
  CHECK(validation_issues(ReductionInput::generic(q({2, 1, -1, -2}), q({0, 0, 0, 0})), {true}).empty());
  CHECK_FALSE(structural_issues(ReductionInput::generic(q({1, 2, -3}), q({0, 0, 0}))).empty());
  CHECK_FALSE(structural_issues(ReductionInput::generic(q({2, 1, -2}), q({0, 0, 0}))).empty());
  CHECK_FALSE(structural_issues(ReductionInput::generic(q({2, 1, -3}), q({0, 0}))).empty());
  CHECK_FALSE(validation_issues(ReductionInput::generic(q({2, 1, -3}), q({5, -2, -3}))).empty());
  CHECK_THROWS_AS(validate(ReductionInput::generic(q({2, 1, -1, -2}), q({0, 0, 0, 0}))), ValidationError);
  CHECK_FALSE(structural_issues(ReductionInput::grassmannian(4, 2, -1, 1, q({0, 0, 0, 0}))).empty());
  CHECK_FALSE(structural_issues(ReductionInput::grassmannian(4, 4, 1, -1, q({0, 0, 0, 0}))).empty());
  CHECK(validation_issues(ReductionInput::grassmannian(
                              4, 2, 1, -1, q({Rational(3, 8), Rational(2, 8), Rational(1, 8), Rational(-6, 8)})))
            .empty());
}

TEST_CASE("polytope membership and regularity") {
  const auto lam = q({3, 2, -1, -4});
  CHECK(in_polytope(q({0, 0, 0, 0}), lam));
  CHECK(in_polytope(q({-4, -1, 2, 3}), lam));
  CHECK_FALSE(in_polytope(q({4, 0, 0, -4}), lam));
  CHECK(is_regular(q({0, 0, 0, 0}), lam));
  CHECK_FALSE(is_regular(q({0, 0, 0, 0}), q({2, 1, -1, -2})));
  const auto w = wall_coincidences(q({0, 0, 0, 0}), q({2, 1, -1, -2}));
  REQUIRE_FALSE(w.empty());
  CHECK(w.front().mu_indices.size() == 2);
  CHECK(w.front().value == 0);
}

TEST_CASE("eta sums the tail of a permuted point") {
  const auto p = q({5, 7, 11});
  CHECK(eta(1, P::parse("[231]"), p) == 11 + 5);
  CHECK(eta(2, P::identity(3), p) == 11);
}

TEST_CASE("the two-point case") {
  const auto set = kernel_pairs(ReductionInput::generic(q({1, -1}), q({0, 0})));
  REQUIRE(set.certificates.size() == 2);
  for (const auto& c : set.certificates) {
    CHECK(c.v.is_identity());
    CHECK(c.k_witness == 1);
  }
  const Ring r = Ring::flag(2);
  CHECK(set.generator_polys() == std::vector<Poly>{parse_poly("x1 - u2", r), parse_poly("x1 - u1", r)});
}

TEST_CASE("witness of a single SU(4) certificate") {
  const auto lam = q({3, 2, -1, -4}), mu = q({0, 0, 0, 0});
  const auto pairs = enumerate_pairs(lam, mu);
  const KernelPair expected{P::parse("[4213]"), P::identity(4), 3};
  CHECK(std::find(pairs.begin(), pairs.end(), expected) != pairs.end());
  CHECK(certificate_holds(expected, lam, mu));
  CHECK_FALSE(certificate_holds(KernelPair{expected.v, expected.tau, 2}, lam, mu));
  CHECK(kernel_class(expected.v, expected.tau) == parse_poly(golden::t3241, Ring::flag(4)));
}

TEST_CASE("SU(4) minimal generators are the fourteen published classes") {
  const auto set = kernel_pairs(ReductionInput::generic(q({3, 2, -1, -4}), q({0, 0, 0, 0})));
  CHECK(set.min_degree() == 2);
  const auto gens = set.generators_of_degree(2);
  CHECK(gens.size() == golden::su4_alpha.size());
  for (const auto& text : golden::su4_alpha) {
    const Poly a = parse_poly(text, Ring::flag(4));
    CHECK_MESSAGE(std::any_of(gens.begin(), gens.end(), [&](const Poly& g) { return proportional(a, g); }), text);
  }
}

TEST_CASE("every certificate's class vanishes where the inequality fails") {
  for (int t = 0; t < 6; ++t) {
    const int n = 3 + t % 2;
    std::vector<Rational> lam;
    for (auto x : random_spectrum(n)) lam.emplace_back(static_cast<long>(x));
    const std::vector<Rational> mu(static_cast<std::size_t>(n), Rational(0));
    if (!is_regular(mu, lam)) continue;
    const auto set = kernel_pairs(ReductionInput::generic(lam, mu));
    for (const auto& c : set.certificates) {
      const Rational bound = eta(c.k_witness, c.tau, mu);
      for (const auto& w : support(c.poly)) CHECK(eta(c.k_witness, c.tau, act_on_point(w, lam)) < bound);
    }
  }
}

TEST_CASE("kernel pairs agree with the brute-force oracle for n = 2, 3") {
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + t % 2;
    const auto spec = random_spectrum(n);
    // μ: a random zero-sum point, denominators up to 3n
    std::vector<long long> num(static_cast<std::size_t>(n));
    long long sum = 0;
    for (auto& x : num) sum += (x = testsupport::uniform(-3 * n, 3 * n));
    num.back() -= sum;
    std::vector<Rational> lam, mu;
    std::vector<oracle::Frac> olam, omu;
    for (int i = 0; i < n; ++i) {
      lam.emplace_back(static_cast<long>(spec[static_cast<std::size_t>(i)]));
      olam.push_back(oracle::frac(spec[static_cast<std::size_t>(i)]));
      mu.emplace_back(static_cast<long>(num[static_cast<std::size_t>(i)]), 3L);
      omu.push_back(oracle::frac(num[static_cast<std::size_t>(i)], 3));
    }
    const ReductionInput in = ReductionInput::generic(lam, mu);
    if (!validation_issues(in).empty()) continue;
    ++checked;
    const auto set = kernel_pairs(in);
    const auto expected = oracle::kernel(olam, omu);
    std::set<std::tuple<oracle::Perm, oracle::Perm, int>> got;
    std::set<oracle::Poly> polys;
    for (const auto& c : set.certificates) {
      got.emplace(c.v.one_line(), c.tau.one_line(), c.k_witness);
      polys.insert(testsupport::to_oracle(c.poly));
    }
    CHECK(got == expected.pairs);
    CHECK(polys == expected.polys);
    std::set<oracle::Poly> gens;
    for (const auto& g : set.generator_polys()) gens.insert(testsupport::to_oracle(g));
    CHECK(gens == expected.polys);
  }
  CHECK(checked >= 10);
}

TEST_CASE("kernel pairs are constant inside a chamber") {
  const auto lam = q({3, 2, -1, -4});
  const auto base = enumerate_pairs(lam, q({0, 0, 0, 0}));
  for (int t = 0; t < 20; ++t) {
    // |perturbation of any tail sum| < 1, the smallest nonzero gap at μ = 0
    std::vector<Rational> mu;
    Rational sum = 0;
    for (int i = 0; i < 3; ++i) {
      mu.emplace_back(testsupport::uniform(-10, 10), 1000);
      sum += mu.back();
    }
    mu.push_back(-sum);
    REQUIRE(is_regular(mu, lam));
    CHECK(enumerate_pairs(lam, mu) == base);
  }
}

TEST_CASE("pruning keeps the Bruhat-maximal classes for each tau") {
  const auto in = ReductionInput::generic(q({3, 2, -1, -4}), q({0, 0, 0, 0}));
  const auto full = kernel_pairs(in);
  const auto pruned = kernel_pairs(in, {true, Exec::Parallel});
  CHECK(pruned.certificates.size() < full.certificates.size());
  const auto all = full.generator_polys();
  for (const auto& g : pruned.generator_polys()) CHECK(std::find(all.begin(), all.end(), g) != all.end());
  for (const auto& c : pruned.certificates)
    for (const auto& d : full.certificates)
      if (d.tau == c.tau && d.v != c.v) CHECK_FALSE(bruhat_leq(c.v, d.v));
}

TEST_CASE("Grassmannian kernel keeps only block-symmetric classes") {
  const auto in = ReductionInput::grassmannian(4, 2, 1, -1,
                                               q({Rational(3, 8), Rational(2, 8), Rational(1, 8), Rational(-6, 8)}));
  const auto set = grassmannian_kernel(in);
  CHECK_FALSE(set.certificates.empty());
  for (const auto& g : set.generator_polys()) CHECK(is_block_symmetric(g, 2));
  const auto deg4 = set.generators_of_degree(2);
  CHECK(deg4.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    const Poly a = parse_poly(golden::su4_alpha[i], Ring::flag(4));
    CHECK(std::any_of(deg4.begin(), deg4.end(), [&](const Poly& g) { return proportional(a, g); }));
  }
}
