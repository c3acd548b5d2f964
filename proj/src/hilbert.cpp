#include "weightvar/hilbert.hpp"

#include <algorithm>

#include "weightvar/errors.hpp"

namespace weightvar {

namespace {

using Series = std::vector<Integer>;

void add_into(Series& a, const Series& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

Series multiply(const Series& a, const Series& b) {
  Series out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Drops generators divisible by another one; sorted and deduplicated.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return divides(h, g); })) out.push_back(g);
  return out;
}

int wdeg(const Monomial& m, std::span<const int> weights) { return m.weighted_degree(weights); }

Series numerator(std::vector<Monomial> gens, std::span<const int> weights) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};

  // Choose the variable occurring in the most generators.
  const int nv = static_cast<int>(weights.size());
  int best = -1, best_count = 1;
  for (int s = 0; s < nv; ++s) {
    int c = 0;
    for (const auto& g : gens) c += g.exp[static_cast<std::size_t>(s)] > 0;
    if (c > best_count) {
      best = s;
      best_count = c;
    }
  }
  if (best < 0) {
    // Pairwise coprime: ∏ (1 − t^{deg g}).
    Series out{1};
    for (const auto& g : gens) {
      Series f(static_cast<std::size_t>(wdeg(g, weights)) + 1, 0);
      f[0] = 1;
      f.back() -= 1;
      out = multiply(out, f);
    }
    return out;
  }

  const auto s = static_cast<std::size_t>(best);
  int e = 255;
  for (const auto& g : gens)
    if (g.exp[s] > 0) e = std::min<int>(e, g.exp[s]);
  Monomial pivot;
  pivot.exp[s] = static_cast<std::uint8_t>(e);

  std::vector<Monomial> sum = gens;
  sum.push_back(pivot);
  std::vector<Monomial> colon;
  for (auto g : gens) {
    g.exp[s] = static_cast<std::uint8_t>(std::max(0, g.exp[s] - e));
    colon.push_back(g);
  }
  Series out = numerator(std::move(sum), weights);
  add_into(out, numerator(std::move(colon), weights), static_cast<std::size_t>(wdeg(pivot, weights)));
  return out;
}

}  // namespace

std::vector<Integer> hilbert_numerator(std::vector<Monomial> gens, std::span<const int> weights) {
  Series out = numerator(std::move(gens), weights);
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::vector<Integer> hilbert_series(std::span<const Monomial> leading, std::span<const int> weights) {
  Series h = hilbert_numerator(std::vector<Monomial>(leading.begin(), leading.end()), weights);
  while (!h.empty() && h.back() == 0) h.pop_back();
  if (h.empty()) return {Integer(0)};  // the unit ideal
  // Divide by (1 − t^w) for each variable; the quotient is finite exactly
  // when every division is exact.
  for (int w : weights) {
    const auto ws = static_cast<std::size_t>(w);
    if (h.size() <= ws) throw NotArtinian("quotient ring is infinite-dimensional");
    Series q(h.size() - ws, 0);
    Series r = h;
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] = r[i];
      r[i] = 0;
      r[i + ws] += q[i];
    }
    for (const auto& c : r)
      if (c != 0) throw NotArtinian("quotient ring is infinite-dimensional");
    h = std::move(q);
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  for (const auto& c : h)
    if (c < 0) throw ArithmeticError("hilbert_series: negative dimension");
  return h;
}

std::vector<Integer> hilbert_series(const GroebnerBasis& gb) {
  const auto weights = gb.ring.weights();
  return hilbert_series(gb.leading, weights);
}

std::string format_poincare(std::span<const Integer> coeffs) {
  std::string out;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    const Integer& c = coeffs[d];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (d == 0) {
      out += c.get_str();
      continue;
    }
    if (c != 1) out += c.get_str();
    out += "t^" + std::to_string(2 * d);
  }
  return out.empty() ? "0" : out;
}

}  // namespace weightvar
