#include "weightvar/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

#include "weightvar/errors.hpp"

namespace weightvar {

MonomialOrder parse_order(std::string_view name) {
  if (name == "grevlex") return MonomialOrder::Grevlex;
  if (name == "lex") return MonomialOrder::Lex;
  throw ParseError("unknown monomial order '" + std::string(name) + "' (expected grevlex or lex)");
}

std::string_view order_name(MonomialOrder order) { return order == MonomialOrder::Lex ? "lex" : "grevlex"; }

std::size_t default_budget() {
  if (const char* env = std::getenv("WEIGHTVAR_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 200000;
}

namespace {

struct Ord {
  MonomialOrder order;
  int nvars;
  std::array<int, kMaxVars> w{};

  Ord(const Ring& ring, MonomialOrder o) : order(o), nvars(ring.num_vars()) {
    for (int s = 0; s < nvars; ++s) w[static_cast<std::size_t>(s)] = ring.weight(s);
  }

  int wdeg(const Monomial& m) const {
    int d = 0;
    for (int s = 0; s < nvars; ++s) d += w[static_cast<std::size_t>(s)] * m.exp[static_cast<std::size_t>(s)];
    return d;
  }

  bool gt(const Monomial& a, const Monomial& b) const {
    if (order == MonomialOrder::Lex) {
      for (int s = 0; s < nvars; ++s)
        if (a.exp[static_cast<std::size_t>(s)] != b.exp[static_cast<std::size_t>(s)])
          return a.exp[static_cast<std::size_t>(s)] > b.exp[static_cast<std::size_t>(s)];
      return false;
    }
    const int da = wdeg(a), db = wdeg(b);
    if (da != db) return da > db;
    for (int s = nvars - 1; s >= 0; --s)
      if (a.exp[static_cast<std::size_t>(s)] != b.exp[static_cast<std::size_t>(s)])
        return a.exp[static_cast<std::size_t>(s)] < b.exp[static_cast<std::size_t>(s)];
    return false;
  }
};

struct Desc {
  const Ord* ord;
  bool operator()(const Monomial& a, const Monomial& b) const { return ord->gt(a, b); }
};

using Accumulator = std::map<Monomial, Rational, Desc>;

// Terms sorted by decreasing monomial; monic once in a basis.
struct GPoly {
  std::vector<Term> terms;
  const Monomial& lm() const { return terms.front().mono; }
};

GPoly sorted(const Poly& f, const Ord& ord) {
  GPoly g{f.terms()};
  std::sort(g.terms.begin(), g.terms.end(), [&](const Term& a, const Term& b) { return ord.gt(a.mono, b.mono); });
  return g;
}

void make_monic(GPoly& g) {
  const Rational c = g.terms.front().coeff;
  if (c == 1) return;
  for (auto& t : g.terms) t.coeff /= c;
}

void add_scaled(Accumulator& acc, const GPoly& g, const Monomial& shift, const Rational& c, std::size_t skip) {
  for (std::size_t i = skip; i < g.terms.size(); ++i) {
    auto [it, inserted] = acc.try_emplace(g.terms[i].mono * shift, 0);
    it->second += c * g.terms[i].coeff;
    if (it->second == 0) acc.erase(it);
  }
}

// Full reduction of `acc` by the monic polynomials `basis` (optionally
// skipping one index).
GPoly reduce(Accumulator acc, const std::vector<GPoly>& basis, std::size_t skip = static_cast<std::size_t>(-1)) {
  GPoly out;
  while (!acc.empty()) {
    auto it = acc.begin();
    const GPoly* divisor = nullptr;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (j != skip && divides(basis[j].lm(), it->first)) {
        divisor = &basis[j];
        break;
      }
    if (!divisor) {
      out.terms.push_back(Term{it->first, it->second});
      acc.erase(it);
      continue;
    }
    const Monomial shift = quotient(it->first, divisor->lm());
    const Rational c = -it->second;
    acc.erase(it);
    add_scaled(acc, *divisor, shift, c, 1);
  }
  return out;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int deg;
};

class Buchberger {
 public:
  Buchberger(const GradedIdeal& ideal, std::size_t budget)
      : ring_(ideal.ring), ord_(ideal.ring, ideal.order), budget_(budget) {
    const auto weights = ring_.weights();
    for (const auto& f : ideal.generators) {
      if (f.block_size() != ring_.n) throw SizeMismatch("groebner: generator lives in a different ring");
      if (f.is_zero()) continue;
      if (!f.is_homogeneous(weights)) throw std::invalid_argument("groebner: generator is not weighted-homogeneous: " + format(f, ring_));
      pending_.emplace(f.weighted_degree(weights), sorted(f, ord_));
    }
    for (int s = 0; s < ring_.num_vars(); ++s) max_weight_ = std::max(max_weight_, ring_.weight(s));
  }

  GroebnerBasis run() {
    if (pending_.empty()) return finish();
    int d = pending_.begin()->first;
    int covered_run = 0;
    while (!pairs_.empty() || pending_.lower_bound(d) != pending_.end()) {
      process_degree(d);
      covered_run = all_covered(d) ? covered_run + 1 : 0;
      if (covered_run >= max_weight_) break;
      ++d;
    }
    return finish();
  }

 private:
  void count_reduction(int d) {
    if (++reductions_ > budget_)
      throw BudgetExceeded("Groebner basis computation exceeded its budget of " + std::to_string(budget_) +
                           " reductions (reached degree " + std::to_string(d) + ")");
  }

  void process_degree(int d) {
    for (;;) {
      std::vector<GPoly> work;
      auto [lo, hi] = pending_.equal_range(d);
      for (auto it = lo; it != hi; ++it) work.push_back(std::move(it->second));
      pending_.erase(lo, hi);

      std::vector<Pair> now;
      std::vector<Pair> later;
      for (auto& p : pairs_) (p.deg == d ? now : later).push_back(p);
      pairs_ = std::move(later);
      if (work.empty() && now.empty()) return;
      std::sort(now.begin(), now.end(), [&](const Pair& a, const Pair& b) {
        if (a.lcm != b.lcm) return ord_.gt(b.lcm, a.lcm);
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });

      for (auto& g : work) {
        count_reduction(d);
        Accumulator acc(Desc{&ord_});
        add_scaled(acc, g, Monomial{}, 1, 0);
        insert(reduce(std::move(acc), basis_));
      }
      for (const auto& p : now) {
        count_reduction(d);
        Accumulator acc(Desc{&ord_});
        const GPoly& a = basis_[p.i];
        const GPoly& b = basis_[p.j];
        add_scaled(acc, a, quotient(p.lcm, a.lm()), 1, 1);
        add_scaled(acc, b, quotient(p.lcm, b.lm()), -1, 1);
        insert(reduce(std::move(acc), basis_));
      }
    }
  }

  // Gebauer–Möller update followed by appending h.
  void insert(GPoly h) {
    if (h.terms.empty()) return;
    make_monic(h);
    const std::size_t t = basis_.size();
    const Monomial& lt = h.lm();

    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < t; ++i)
      if (active_[i]) {
        const Monomial l = lcm(basis_[i].lm(), lt);
        fresh.push_back(Pair{i, t, l, ord_.wdeg(l)});
      }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Pair& p = fresh[a];
      if (coprime(basis_[p.i].lm(), lt)) {
        kept.push_back(p);
        continue;
      }
      bool redundant = false;
      for (std::size_t b = a + 1; b < fresh.size() && !redundant; ++b) redundant = divides(fresh[b].lcm, p.lcm);
      for (std::size_t b = 0; b < kept.size() && !redundant; ++b) redundant = divides(kept[b].lcm, p.lcm);
      if (!redundant) kept.push_back(p);
    }
    std::vector<Pair> next;
    for (const auto& p : pairs_) {
      const bool chain = divides(lt, p.lcm) && lcm(basis_[p.i].lm(), lt) != p.lcm && lcm(basis_[p.j].lm(), lt) != p.lcm;
      if (!chain) next.push_back(p);
    }
    for (const auto& p : kept)
      if (!coprime(basis_[p.i].lm(), lt)) next.push_back(p);
    pairs_ = std::move(next);

    for (std::size_t i = 0; i < t; ++i)
      if (active_[i] && divides(lt, basis_[i].lm())) active_[i] = false;
    basis_.push_back(std::move(h));
    active_.push_back(true);
  }

  bool covered(const Monomial& m) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i] && divides(basis_[i].lm(), m)) return true;
    return false;
  }

  // Every monomial of weighted degree d is a multiple of a leading monomial.
  bool all_covered(int d) const {
    const int nv = ring_.num_vars();
    for (int s = 0; s < nv; ++s) {
      bool pure = false;
      for (std::size_t i = 0; i < basis_.size() && !pure; ++i) {
        if (!active_[i]) continue;
        const Monomial& m = basis_[i].lm();
        pure = m.exp[static_cast<std::size_t>(s)] > 0 && m.degree() == m.exp[static_cast<std::size_t>(s)];
      }
      if (!pure) return false;
    }
    Monomial m;
    return cover_search(m, 0, d);
  }

  bool cover_search(Monomial& m, int slot, int remaining) const {
    if (covered(m)) return true;
    if (remaining == 0) return false;
    if (slot == ring_.num_vars()) return true;  // no monomial of degree d on this branch
    const int w = ring_.weight(slot);
    const auto s = static_cast<std::size_t>(slot);
    const std::uint8_t saved = m.exp[s];
    bool ok = true;
    for (int e = 0; e * w <= remaining && ok; ++e) {
      m.exp[s] = static_cast<std::uint8_t>(saved + e);
      ok = cover_search(m, slot + 1, remaining - e * w);
    }
    m.exp[s] = saved;
    return ok;
  }

  GroebnerBasis finish() {
    std::vector<GPoly> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i]) minimal.push_back(basis_[i]);
    std::sort(minimal.begin(), minimal.end(), [&](const GPoly& a, const GPoly& b) { return ord_.gt(b.lm(), a.lm()); });

    GroebnerBasis gb;
    gb.ring = ring_;
    gb.order = ord_.order;
    gb.reductions = reductions_;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      Accumulator acc(Desc{&ord_});
      add_scaled(acc, minimal[i], Monomial{}, 1, 1);
      GPoly tail = reduce(std::move(acc), minimal, i);
      std::vector<Term> terms{minimal[i].terms.front()};
      terms.insert(terms.end(), tail.terms.begin(), tail.terms.end());
      gb.leading.push_back(minimal[i].lm());
      gb.elements.push_back(Poly::from_terms(ring_.n, std::move(terms)));
    }
    return gb;
  }

  Ring ring_;
  Ord ord_;
  std::size_t budget_;
  std::size_t reductions_ = 0;
  int max_weight_ = 1;
  std::multimap<int, GPoly> pending_;
  std::vector<Pair> pairs_;
  std::vector<GPoly> basis_;
  std::vector<bool> active_;
};

}  // namespace

bool order_greater(const Monomial& a, const Monomial& b, const Ring& ring, MonomialOrder order) {
  return Ord(ring, order).gt(a, b);
}

Monomial leading_monomial(const Poly& f, const Ring& ring, MonomialOrder order) {
  if (f.is_zero()) throw std::invalid_argument("leading_monomial of zero polynomial");
  const Ord ord(ring, order);
  Monomial best = f.terms().front().mono;
  for (const auto& t : f.terms())
    if (ord.gt(t.mono, best)) best = t.mono;
  return best;
}

GroebnerBasis groebner(const GradedIdeal& ideal, const GroebnerOptions& opts) {
  return Buchberger(ideal, opts.budget ? opts.budget : default_budget()).run();
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
  if (f.block_size() != gb.ring.n) throw SizeMismatch("normal_form: polynomial lives in a different ring");
  const Ord ord(gb.ring, gb.order);
  std::vector<GPoly> basis;
  for (const auto& g : gb.elements) basis.push_back(sorted(g, ord));
  Accumulator acc(Desc{&ord});
  add_scaled(acc, sorted(f, ord), Monomial{}, 1, 0);
  return Poly::from_terms(f.block_size(), reduce(std::move(acc), basis).terms);
}

}  // namespace weightvar
