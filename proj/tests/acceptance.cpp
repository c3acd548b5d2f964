// One line per acceptance criterion; exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "golden.hpp"
#include "support.hpp"
#include "weightvar/divided_difference.hpp"
#include "weightvar/gkm.hpp"
#include "weightvar/presentation.hpp"
#include "weightvar/schubert.hpp"
#include "weightvar/symmetric.hpp"

using namespace weightvar;
using P = Permutation;

namespace {

std::vector<Rational> q(std::initializer_list<Rational> v) { return v; }

struct Result {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    note += (note.empty() ? "" : "; ") + what;
  }
};

bool proportional(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  return scale(g.terms().front().coeff, f) == scale(f.terms().front().coeff, g);
}

bool same_up_to_scalar(const std::vector<Poly>& got, const std::vector<Poly>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want)
    if (std::none_of(got.begin(), got.end(), [&](const Poly& g) { return proportional(g, w); })) return false;
  return true;
}

std::vector<Poly> parse_all(const std::vector<std::string>& texts, std::size_t count) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(parse_poly(texts[i], Ring::flag(4)));
  return out;
}

ReductionInput su4() { return ReductionInput::generic(q({3, 2, -1, -4}), q({0, 0, 0, 0})); }
ReductionInput su3() { return ReductionInput::generic(q({2, 1, -3}), q({0, 0, 0})); }
ReductionInput gr24() {
  return ReductionInput::grassmannian(4, 2, 1, -1, q({Rational(3, 8), Rational(2, 8), Rational(1, 8), Rational(-6, 8)}));
}

QuotientPresentation build(const ReductionInput& in, MonomialOrder order = MonomialOrder::Grevlex) {
  PresentationOptions opts;
  opts.order = order;
  return in.is_grassmannian() ? grassmannian_quotient(in, opts) : flag_quotient(in, opts);
}

Result su4_orbit() {
  Result r;
  const auto pres = build(su4());
  r.require(pres.kernel.min_degree() == 2, "minimal kernel degree is not 4");
  r.require(same_up_to_scalar(pres.kernel.generators_of_degree(2), parse_all(golden::su4_alpha, 14)),
            "degree-4 generators differ from alpha_1..alpha_14");
  r.require(pres.poincare == std::vector<Integer>{1, 6, 6, 1}, "Poincare is " + format_poincare(pres.poincare));
  return r;
}

Result grassmannian() {
  Result r;
  const auto pres = build(gr24());
  const auto deg2 = pres.kernel.generators_of_degree(1);
  for (std::size_t i = 0; i < golden::gr24_beta.size(); ++i) {
    const Poly beta = parse_poly(golden::gr24_beta[i], Ring::flag(4));
    if (std::any_of(deg2.begin(), deg2.end(), [&](const Poly& g) { return proportional(g, beta); })) continue;
    std::string emitted;
    for (const auto& g : deg2) emitted += (emitted.empty() ? "" : ", ") + format(g);
    std::ostringstream os;
    os << "beta_" << i + 1 << " = " << golden::gr24_beta[i] << " is not emitted (degree-2 classes: " << emitted
       << "); its normal form in the quotient is " << format(normal_form(rewrite_in_block_esp(beta, 2), pres), pres.ring())
       << ", so it is not in the kernel";
    r.require(false, os.str());
  }
  r.require(same_up_to_scalar(pres.kernel.generators_of_degree(2), parse_all(golden::su4_alpha, 8)),
            "degree-4 generators differ from alpha_1..alpha_8");
  r.require(pres.poincare == std::vector<Integer>{1, 1}, "Poincare is " + format_poincare(pres.poincare));
  return r;
}

Result sphere() {
  Result r;
  const auto pres = build(su3());
  r.require(pres.poincare == std::vector<Integer>{1, 1}, "Poincare is " + format_poincare(pres.poincare));
  return r;
}

Result restrictions() {
  Result r;
  const Ring ring = Ring::flag(3);
  const Poly alpha = parse_poly("(x1-u1)*(x1-u3)", ring);
  for (const auto& [w, value] : golden::restriction_example)
    r.require(restrict_at(alpha, P::parse(w)) == parse_poly(value, ring), std::string("restriction at ") + w);
  return r;
}

Result schubert_values() {
  Result r;
  const Ring ring = Ring::flag(4);
  r.require(schubert_class(P::parse("[231]"), P::parse("[213]")).poly == parse_poly("(x1-u1)*(x1-u3)", Ring::flag(3)),
            "T_[231]^[213]");
  r.require(schubert_class(P::parse("[3241]"), P::identity(4)).poly == parse_poly(golden::t3241, ring), "T_[3241]");
  r.require(schubert_class(P::parse("[4132]"), P::identity(4)).poly == parse_poly(golden::t4132, ring), "T_[4132]");
  r.require(schubert_class(P::parse("[4213]"), P::identity(4)).poly == parse_poly(golden::t4213, ring), "T_[4213]");
  return r;
}

Result properties() {
  Result r;
  // (a) ∂_w is independent of the reduced word
  for (int n = 2; n <= 4; ++n) {
    const Poly delta = determinant_polynomial(n);
    for (const auto& w : all_permutations(n)) {
      const auto words = all_reduced_words(w);
      const Poly ref = divided_difference_word(words.front(), delta);
      for (const auto& word : words)
        r.require(divided_difference_word(word, delta) == ref, "d_w depends on the word for " + w.to_string());
    }
  }
  // (b) nil-Coxeter relations
  for (int t = 0; t < 100; ++t) {
    const Poly f = testsupport::random_poly(4, 6, 3);
    for (int i = 1; i <= 3; ++i)
      r.require(divided_difference(i, divided_difference(i, f)).is_zero(), "d_i^2 != 0");
    for (int i = 1; i <= 2; ++i) {
      const std::vector<int> a{i, i + 1, i}, b{i + 1, i, i + 1};
      r.require(divided_difference_word(a, f) == divided_difference_word(b, f), "braid relation");
    }
    const std::vector<int> c{1, 3}, d{3, 1};
    r.require(divided_difference_word(c, f) == divided_difference_word(d, f), "commutation relation");
  }
  // (c) support of T_v^tau
  for (const auto& tau : all_permutations(4))
    for (const auto& v : all_permutations(4)) {
      std::vector<P> expected;
      for (const auto& w : all_permutations(4))
        if (bruhat_leq_tau(w, v, tau)) expected.push_back(w);
      r.require(support(schubert_class(v, tau).poly) == expected, "support of T_" + v.to_string() + "^" + tau.to_string());
    }
  // (d) ξ = Σ b_i e_{τ(i)} with b increasing is minimised at λ_τ and grows along ≤_τ
  const auto s4 = all_permutations(4);
  for (int t = 0; t < 100; ++t) {
    std::vector<Rational> b(4), lam(4);
    int acc = testsupport::uniform(-5, 5);
    for (auto& x : b) x = acc += testsupport::uniform(0, 3);
    acc = testsupport::uniform(-5, 5);
    for (auto& x : lam) x = acc -= testsupport::uniform(1, 4);
    const P tau = testsupport::random_permutation(4);
    auto xi = [&](const P& w) {
      const auto p = act_on_point(w, lam);
      Rational sum = 0;
      for (int i = 1; i <= 4; ++i) sum += b[static_cast<std::size_t>(i - 1)] * p[static_cast<std::size_t>(tau(i) - 1)];
      return sum;
    };
    for (const auto& v : s4)
      for (const auto& w : s4)
        if (bruhat_leq_tau(v, w, tau)) r.require(xi(v) <= xi(w), "order lemma");
  }
  // (e) basis expansion round trip
  for (int t = 0; t < 50; ++t) {
    const int n = testsupport::uniform(2, 4);
    const P tau = testsupport::random_permutation(n);
    const Poly f = schubert_class(testsupport::random_permutation(n), testsupport::random_permutation(n)).poly +
                   Poly::u(n, 1) * schubert_class(testsupport::random_permutation(n), tau).poly;
    r.require(same_class(combine(basis_expand(f, tau), tau), f), "basis_expand round trip");
  }
  // (f), (g) on the three worked examples
  const std::vector<std::pair<ReductionInput, std::size_t>> cases{{su4(), 3}, {gr24(), 1}, {su3(), 1}};
  for (const auto& [in, top] : cases) {
    const auto grevlex = build(in).poincare;
    auto reversed = grevlex;
    std::reverse(reversed.begin(), reversed.end());
    r.require(grevlex == reversed, "not palindromic");
    r.require(grevlex.size() == top + 1, "top degree differs from the real dimension");
    r.require(build(in, MonomialOrder::Lex).poincare == grevlex, "Poincare depends on the monomial order");
  }
  return r;
}

Result oracle_equivalence() {
  Result r;
  const std::vector<std::pair<std::vector<long long>, std::vector<std::pair<long long, long long>>>> cases{
      {{1, -1}, {{0, 1}, {0, 1}}},
      {{3, -3}, {{1, 2}, {-1, 2}}},
      {{2, 1, -3}, {{0, 1}, {0, 1}, {0, 1}}},
      {{5, 1, -6}, {{1, 2}, {1, 3}, {-5, 6}}},
      {{4, -1, -3}, {{-1, 2}, {2, 1}, {-3, 2}}},
      {{6, 0, -6}, {{-2, 1}, {-1, 3}, {7, 3}}},
  };
  for (const auto& [lam_int, mu_frac] : cases) {
    std::vector<Rational> lam, mu;
    std::vector<oracle::Frac> olam, omu;
    for (auto x : lam_int) lam.emplace_back(static_cast<long>(x)), olam.push_back(oracle::frac(x));
    for (auto [a, b] : mu_frac) mu.emplace_back(static_cast<long>(a), static_cast<long>(b)), omu.push_back(oracle::frac(a, b));
    const auto in = ReductionInput::generic(lam, mu);
    if (!validation_issues(in).empty()) {
      r.require(false, "test case is not regular for n = " + std::to_string(lam.size()));
      continue;
    }
    const auto set = kernel_pairs(in);
    const auto expected = oracle::kernel(olam, omu);
    std::set<std::tuple<oracle::Perm, oracle::Perm, int>> pairs;
    std::set<oracle::Poly> polys;
    for (const auto& c : set.certificates) {
      pairs.emplace(c.v.one_line(), c.tau.one_line(), c.k_witness);
      polys.insert(testsupport::to_oracle(c.poly));
    }
    r.require(pairs == expected.pairs && polys == expected.polys, "mismatch for n = " + std::to_string(lam.size()));
  }
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"1 SU(4) weight variety: 14 minimal generators, Poincare 1+6t^2+6t^4+t^6", su4_orbit},
      {"2 Gr(2,4) polygon space: beta_1..3, alpha_1..8, Poincare 1+t^2", grassmannian},
      {"3 SU(3) sphere: Poincare 1+t^2", sphere},
      {"4 restriction golden values", restrictions},
      {"5 Schubert golden values", schubert_values},
      {"6 property suites", properties},
      {"7 oracle equivalence n=2,3", oracle_equivalence},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = check();
    } catch (const std::exception& e) {
      r.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (r.pass ? "PASS " : "FAIL ") << name << " (" << secs << "s)";
    if (!r.pass) std::cout << ": " << r.note;
    std::cout << "\n";
    failed += !r.pass;
  }
  return failed == 0 ? 0 : 1;
}
