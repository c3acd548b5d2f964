#include "weightvar/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "weightvar/errors.hpp"

namespace weightvar {

bool divides(const Monomial& a, const Monomial& b) noexcept {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) {
    const int e = a.exp[i] + b.exp[i];
    if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
    m.exp[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp[i] = std::max(a.exp[i], b.exp[i]);
  return m;
}

Monomial quotient(const Monomial& b, const Monomial& a) noexcept {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint8_t>(b.exp[i] - a.exp[i]);
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  return true;
}

namespace {

struct CanonicalGreater {
  bool operator()(const Term& a, const Term& b) const noexcept { return canonical_greater(a.mono, b.mono); }
};

// Sort then fold runs of equal monomials, dropping zero sums.
void normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), CanonicalGreater{});
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = terms[i].coeff;
    while (j < terms.size() && terms[j].mono == terms[i].mono) sum += terms[j++].coeff;
    if (sum != 0) {
      terms[out].mono = terms[i].mono;
      terms[out].coeff = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Merge two canonically sorted term lists: a + sign*b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && canonical_greater(a[i].mono, b[j].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || canonical_greater(b[j].mono, a[i].mono)) {
      out.push_back(subtract ? Term{b[j].mono, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back(Term{a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly::Poly(int n) : n_(n) {
  if (n < 0 || n > kMaxBlock) throw std::out_of_range("block size must be in 0.." + std::to_string(kMaxBlock));
}

Poly Poly::constant(int n, const Rational& c) { return monomial(n, Monomial{}, c); }

Poly Poly::variable(int n, int slot) {
  if (slot < 0 || slot >= 2 * n) throw std::out_of_range("variable slot out of range");
  Monomial m;
  m.exp[static_cast<std::size_t>(slot)] = 1;
  return monomial(n, m);
}

Poly Poly::monomial(int n, const Monomial& m, const Rational& c) {
  Poly p(n);
  Rational q = c;
  q.canonicalize();  // mpq_class(6, 8) is not reduced on construction
  if (q != 0) p.terms_.push_back(Term{m, std::move(q)});
  return p;
}

Poly Poly::from_terms(int n, std::vector<Term> terms) {
  Poly p(n);
  for (auto& t : terms) t.coeff.canonicalize();
  normalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Monomial{});
}

int Poly::degree() const noexcept { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

int Poly::weighted_degree(std::span<const int> weights) const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.weighted_degree(weights));
  return d;
}

bool Poly::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const int d = terms_.front().mono.degree();
  return terms_.back().mono.degree() == d;
}

bool Poly::is_homogeneous(std::span<const int> weights) const noexcept {
  if (terms_.empty()) return true;
  const int d = terms_.front().mono.weighted_degree(weights);
  for (const auto& t : terms_)
    if (t.mono.weighted_degree(weights) != d) return false;
  return true;
}

Poly Poly::homogeneous_component(int d) const {
  Poly p(n_);
  for (const auto& t : terms_)
    if (t.mono.degree() == d) p.terms_.push_back(t);
  return p;
}

Rational Poly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return Rational(0);
}

bool Poly::is_u_only() const noexcept {
  for (const auto& t : terms_)
    for (int i = 0; i < n_; ++i)
      if (t.mono.exp[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

void Poly::check_same_ring(const Poly& g, const char* op) const {
  if (n_ != g.n_)
    throw SizeMismatch(std::string(op) + ": polynomials over different rings (n=" + std::to_string(n_) +
                       " vs n=" + std::to_string(g.n_) + ")");
}

Poly& Poly::operator+=(const Poly& g) {
  check_same_ring(g, "add");
  terms_ = merge(terms_, g.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& g) {
  check_same_ring(g, "sub");
  terms_ = merge(terms_, g.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const Poly& g) {
  *this = *this * g;
  return *this;
}

Poly operator*(const Poly& f, const Poly& g) {
  f.check_same_ring(g, "mul");
  std::vector<Term> prod;
  prod.reserve(f.terms_.size() * g.terms_.size());
  for (const auto& a : f.terms_)
    for (const auto& b : g.terms_) prod.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
  return Poly::from_terms(f.n_, std::move(prod));
}

Poly operator-(const Poly& f) {
  Poly r = f;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly scale(const Rational& c, const Poly& f) {
  if (c == 0) return Poly(f.block_size());
  std::vector<Term> terms = f.terms();
  for (auto& t : terms) t.coeff *= c;
  return Poly::from_terms(f.block_size(), std::move(terms));
}

Poly pow(const Poly& f, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Poly result = Poly::constant(f.block_size(), 1);
  Poly base = f;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly rename_vars(const Poly& f, std::span<const int> slot_map) {
  if (static_cast<int>(slot_map.size()) != f.num_vars()) throw SizeMismatch("rename_vars: map has wrong size");
  std::vector<Term> terms;
  terms.reserve(f.num_terms());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t s = 0; s < slot_map.size(); ++s) {
      const int e = m.exp[static_cast<std::size_t>(slot_map[s])] + t.mono.exp[s];
      m.exp[static_cast<std::size_t>(slot_map[s])] = static_cast<std::uint8_t>(e);
    }
    terms.push_back(Term{m, t.coeff});
  }
  return Poly::from_terms(f.block_size(), std::move(terms));
}

Poly divide_exact(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw ArithmeticError("divide_exact: division by zero polynomial");
  if (f.block_size() != g.block_size()) throw SizeMismatch("divide_exact: different rings");
  const int n = f.block_size();
  const Term& lead = g.terms().front();
  Poly r = f;
  std::vector<Term> q;
  while (!r.is_zero()) {
    const Term& lt = r.terms().front();
    if (!divides(lead.mono, lt.mono)) throw ArithmeticError("divide_exact: nonzero remainder");
    Term t{quotient(lt.mono, lead.mono), lt.coeff / lead.coeff};
    r -= Poly::monomial(n, t.mono, t.coeff) * g;
    q.push_back(std::move(t));
  }
  return Poly::from_terms(n, std::move(q));
}

Ring Ring::flag(int n) { return Ring{n, Scheme::Flag, 0}; }

Ring Ring::block(int n, int k) {
  if (k < 1 || k >= n) throw std::invalid_argument("block ring requires 1 <= k < n");
  return Ring{n, Scheme::Block, k};
}

std::string Ring::var_name(int slot) const {
  if (slot >= n) return "u" + std::to_string(slot - n + 1);
  if (scheme == Scheme::Flag) return "x" + std::to_string(slot + 1);
  if (slot < k) return "a" + std::to_string(slot + 1);
  return "b" + std::to_string(slot - k + 1);
}

int Ring::weight(int slot) const noexcept {
  if (scheme == Scheme::Flag || slot >= n) return 1;
  return slot < k ? slot + 1 : slot - k + 1;
}

std::vector<int> Ring::weights() const {
  std::vector<int> w(static_cast<std::size_t>(num_vars()));
  for (int s = 0; s < num_vars(); ++s) w[static_cast<std::size_t>(s)] = weight(s);
  return w;
}

}  // namespace weightvar

namespace weightvar {

bool structural_less(const Poly& f, const Poly& g) {
  if (f.block_size() != g.block_size()) return f.block_size() < g.block_size();
  if (f.num_terms() != g.num_terms()) return f.num_terms() < g.num_terms();
  for (std::size_t i = 0; i < f.num_terms(); ++i) {
    const Term& a = f.terms()[i];
    const Term& b = g.terms()[i];
    if (a.mono != b.mono) return canonical_greater(a.mono, b.mono);
    if (a.coeff != b.coeff) return a.coeff < b.coeff;
  }
  return false;
}

}  // namespace weightvar
