#include "orbitcalc/rational.hpp"

#include <cctype>
#include <string>

#include "orbitcalc/error.hpp"

namespace orbitcalc {

namespace {

std::string normalise_minus(std::string_view text) {
  // U+2212 MINUS SIGN in UTF-8.
  static constexpr std::string_view kMinus = "\xE2\x88\x92";
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    if (text.substr(i, kMinus.size()) == kMinus) {
      out.push_back('-');
      i += kMinus.size();
    } else {
      out.push_back(text[i++]);
    }
  }
  return out;
}

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : normalise_minus(text))
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("invalid rational '" + std::string(text) + "'");
  Integer n(num.front() == '+' ? num.substr(1) : num, 10);
  Integer d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace orbitcalc
