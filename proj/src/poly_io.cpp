#include <algorithm>
#include <cctype>
#include <string>

#include "weightvar/errors.hpp"
#include "weightvar/poly.hpp"

namespace weightvar {

std::string format(const Poly& f, const Ring& ring) {
  if (f.is_zero()) return "0";
  std::vector<Term> terms = f.terms();
  if (ring.scheme == Ring::Scheme::Block) {
    // Group by weighted degree so a2 prints beside a1^2.
    const auto w = ring.weights();
    std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return a.mono.weighted_degree(w) > b.mono.weighted_degree(w);
    });
  }
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    Rational c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string mono;
    for (int s = 0; s < ring.num_vars(); ++s) {
      const int e = t.mono.exp[static_cast<std::size_t>(s)];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += ring.var_name(s);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                     std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc(ring_.n);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Poly t = term();
    acc = negate ? -t : t;
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Poly factor() {
    if (accept('-')) return -factor();
    Poly base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = pow(base, std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  Poly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t den = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (den == pos_) fail("expected denominator");
      }
      return Poly::constant(ring_.n, parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      for (int s = 0; s < ring_.num_vars(); ++s)
        if (ring_.var_name(s) == name) return Poly::variable(ring_.n, s);
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const Ring& ring) { return Parser(text, ring).parse(); }

}  // namespace weightvar
