#include "weightvar/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "weightvar/errors.hpp"

namespace weightvar {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("permutation must have n >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : one_line_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("simple transposition index out of range");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::from_word(int n, std::span<const int> word) {
  // s_{i1} ... s_{il} applied to position j: the rightmost factor acts first,
  // so build the one-line form by left-multiplying, i.e. swapping values.
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it;
    if (i < 1 || i >= n) throw std::out_of_range("simple transposition index out of range");
    for (int& v : w) {
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
    }
  }
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("permutation must be bracketed one-line notation, got '" + std::string(text) + "'");
  const std::string body = s.substr(1, s.size() - 2);
  std::vector<int> w;
  if (body.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      const std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("malformed permutation entry '" + tok + "'");
      w.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } else {
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("malformed permutation '" + std::string(text) + "'");
      w.push_back(c - '0');
    }
  }
  try {
    return Permutation(std::move(w));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(one_line_.size());
  for (std::size_t i = 0; i < one_line_.size(); ++i)
    inv[static_cast<std::size_t>(one_line_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < one_line_.size(); ++i)
    for (std::size_t j = i + 1; j < one_line_.size(); ++j)
      if (one_line_[i] > one_line_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < one_line_.size(); ++i)
    if (one_line_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  const bool wide = size() >= 10;
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    if (wide && i > 0) s += ',';
    s += std::to_string(one_line_[i]);
  }
  s += ']';
  return s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw SizeMismatch("compose: permutations of different sizes");
  std::vector<int> r(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) r[static_cast<std::size_t>(i - 1)] = p(q(i));
  return Permutation(std::move(r));
}

namespace {

// Left descent i of w: length(s_i w) < length(w), i.e. value i+1 sits left
// of value i in one-line notation.
bool is_left_descent(const std::vector<int>& pos, int i) {
  return pos[static_cast<std::size_t>(i)] < pos[static_cast<std::size_t>(i - 1)];
}

std::vector<int> positions(const std::vector<int>& w) {
  std::vector<int> pos(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) pos[static_cast<std::size_t>(w[j] - 1)] = static_cast<int>(j);
  return pos;
}

void swap_values(std::vector<int>& w, int i) {
  for (int& v : w) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
}

void collect_words(std::vector<int>& w, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  const auto pos = positions(w);
  bool any = false;
  const int n = static_cast<int>(w.size());
  for (int i = 1; i < n; ++i) {
    if (!is_left_descent(pos, i)) continue;
    any = true;
    swap_values(w, i);
    prefix.push_back(i);
    collect_words(w, prefix, out);
    prefix.pop_back();
    swap_values(w, i);
  }
  if (!any) out.push_back(prefix);
}

}  // namespace

std::vector<int> reduced_word(const Permutation& p) {
  std::vector<int> w = p.one_line();
  std::vector<int> word;
  const int n = p.size();
  while (true) {
    const auto pos = positions(w);
    int found = 0;
    for (int i = 1; i < n; ++i) {
      if (is_left_descent(pos, i)) {
        found = i;
        break;
      }
    }
    if (found == 0) break;
    word.push_back(found);
    swap_values(w, found);
  }
  return word;
}

std::vector<std::vector<int>> all_reduced_words(const Permutation& p, int max_n) {
  if (p.size() > max_n)
    throw std::length_error("all_reduced_words: n=" + std::to_string(p.size()) + " exceeds guard " +
                            std::to_string(max_n));
  std::vector<int> w = p.one_line();
  std::vector<int> prefix;
  std::vector<std::vector<int>> out;
  collect_words(w, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw SizeMismatch("bruhat_leq: permutations of different sizes");
  const int n = v.size();
  std::vector<int> pv, pw;
  pv.reserve(static_cast<std::size_t>(n));
  pw.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k < n; ++k) {
    pv.insert(std::upper_bound(pv.begin(), pv.end(), v(k)), v(k));
    pw.insert(std::upper_bound(pw.begin(), pw.end(), w(k)), w(k));
    for (std::size_t j = 0; j < pv.size(); ++j)
      if (pv[j] > pw[j]) return false;
  }
  return true;
}

bool bruhat_leq_tau(const Permutation& v, const Permutation& w, const Permutation& tau) {
  const Permutation ti = tau.inverse();
  return bruhat_leq(ti * v, ti * w);
}

std::vector<Rational> act_on_point(const Permutation& w, std::span<const Rational> lam) {
  if (static_cast<int>(lam.size()) != w.size()) throw SizeMismatch("act_on_point: point has wrong dimension");
  const Permutation wi = w.inverse();
  std::vector<Rational> out(lam.size());
  for (int i = 1; i <= w.size(); ++i) out[static_cast<std::size_t>(i - 1)] = lam[static_cast<std::size_t>(wi(i) - 1)];
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

std::size_t lex_rank(const Permutation& p) {
  const int n = p.size();
  std::size_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j <= n; ++j)
      if (p(j) < p(i)) ++smaller_after;
    rank += static_cast<std::size_t>(smaller_after) * factorial(n - i);
  }
  return rank;
}

}  // namespace weightvar
