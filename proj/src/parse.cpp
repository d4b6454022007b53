#include <cctype>
#include <string>

#include "orbitcalc/error.hpp"
#include "orbitcalc/polynomial.hpp"

namespace orbitcalc {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, Ring ring) : ring_(ring) {
    static constexpr std::string_view kMinus = "\xE2\x88\x92";
    for (std::size_t i = 0; i < text.size();) {
      if (text.substr(i, kMinus.size()) == kMinus) {
        src_.push_back('-');
        i += kMinus.size();
      } else {
        if (!std::isspace(static_cast<unsigned char>(text[i]))) src_.push_back(text[i]);
        ++i;
      }
    }
    original_ = std::string(text);
  }

  Polynomial parse() {
    if (src_.empty()) fail("empty polynomial");
    Polynomial result(ring_);
    bool first = true;
    while (pos_ < src_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Polynomial term = parse_term();
      if (sign < 0) term = -term;
      result += term;
      first = false;
    }
    return result;
  }

 private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse polynomial '" + original_ + "' at offset " + std::to_string(pos_) +
                     ": " + what);
  }

  Integer parse_uint() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(src_.substr(start, pos_ - start), 10);
  }

  Polynomial parse_term() {
    Rational coeff = 1;
    Monomial mono(ring_.nvars);
    bool any = false;
    while (true) {
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Integer num = parse_uint();
        Integer den = 1;
        if (peek() == '/') {
          ++pos_;
          den = parse_uint();
          if (den == 0) fail("zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        coeff *= q;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        const auto [index, power] = parse_power();
        mono.set(index, mono[index] + power);
      } else {
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
      }
      any = true;
      if (peek() != '*') break;
      ++pos_;
    }
    if (!any) fail("empty term");
    return Polynomial::monomial(ring_, std::move(mono), coeff);
  }

  std::pair<std::size_t, int> parse_power() {
    const char letter = src_[pos_++];
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("variable needs an index");
    const Integer idx = parse_uint();
    if (idx == 0 || !idx.fits_ulong_p()) fail("variable index must be >= 1");
    const std::size_t i = idx.get_ui() - 1;
    int power = 1;
    if (peek() == '^') {
      ++pos_;
      const Integer e = parse_uint();
      if (!e.fits_sint_p()) fail("exponent too large");
      power = static_cast<int>(e.get_si());
    }
    return {resolve(letter, i), power};
  }

  std::size_t resolve(char letter, std::size_t i) const {
    const std::size_t first = ring_.split;
    const std::size_t second = ring_.nvars - ring_.split;
    auto check = [&](std::size_t bound) {
      if (i >= bound)
        throw ParseError("variable " + std::string(1, letter) + std::to_string(i + 1) + " is not in " +
                         to_string(ring_));
    };
    switch (ring_.alphabet) {
      case Alphabet::x:
        if (letter == 'x') return check(ring_.nvars), i;
        break;
      case Alphabet::y:
        if (letter == 'y') return check(ring_.nvars), i;
        break;
      case Alphabet::xy:
        if (letter == 'x') return check(first), i;
        if (letter == 'y') return check(second), first + i;
        break;
      case Alphabet::ey:
        if (letter == 'e') return check(first), i;
        if (letter == 'y') return check(second), first + i;
        break;
    }
    throw ParseError("variable " + std::string(1, letter) + std::to_string(i + 1) + " is not in " +
                     to_string(ring_));
  }

  Ring ring_;
  std::string src_;
  std::string original_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.var_name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, Ring ring) { return PolyParser(text, ring).parse(); }

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const Rational mag = abs(t.coeff);
    if (t.mono.is_one()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += monomial_text(t.mono, p.ring());
    }
  }
  return out;
}

}  // namespace orbitcalc
