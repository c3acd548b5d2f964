#include "weightvar/rational.hpp"

#include <cctype>

#include "weightvar/errors.hpp"

namespace weightvar {

ValidationError::ValidationError(std::vector<std::string> issues)
    : std::runtime_error([&] {
        std::string msg = "invalid reduction data:";
        for (const auto& s : issues) msg += "\n  - " + s;
        return msg;
      }()),
      issues_(std::move(issues)) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_signed_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_signed_integer(s, true))
      throw ParseError("malformed rational '" + std::string(text) + "' (expected integer or p/q)");
    return Rational(to_integer(s));
  }
  const auto num = trim(s.substr(0, slash));
  const auto den = trim(s.substr(slash + 1));
  if (!is_signed_integer(num, true) || !is_signed_integer(den, false))
    throw ParseError("malformed rational '" + std::string(text) + "' (expected integer or p/q)");
  Integer d = to_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(to_integer(num), d);
  q.canonicalize();
  return q;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  const std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty rational list");
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(parse_rational(s.substr(start, comma == std::string_view::npos ? s.size() - start
                                                                                   : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace weightvar
