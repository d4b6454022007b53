#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbitcalc/monomial.hpp"
#include "orbitcalc/rational.hpp"

namespace orbitcalc {

// Variable alphabets. `x` is the source space R^n, `y` the orbit-space
// coordinates. `xy` and `ey` are the internal combined alphabets used for
// elimination (x-block then y-block) and for module encodings (position
// tags e1..er then y-block).
enum class Alphabet { x, y, xy, ey };

struct Ring {
  Alphabet alphabet = Alphabet::x;
  std::size_t nvars = 0;
  // Size of the leading block for the combined alphabets; 0 otherwise.
  std::size_t split = 0;

  static Ring x(std::size_t n) { return {Alphabet::x, n, 0}; }
  static Ring y(std::size_t l) { return {Alphabet::y, l, 0}; }
  static Ring combined(std::size_t n, std::size_t l) { return {Alphabet::xy, n + l, n}; }
  static Ring tagged(std::size_t r, std::size_t l) { return {Alphabet::ey, r + l, r}; }

  // 0-based index -> printed name ("x1", "y3", "e2").
  std::string var_name(std::size_t i) const;

  friend bool operator==(const Ring&, const Ring&) = default;
};

std::string to_string(const Ring& r);

struct Term {
  Monomial mono;
  Rational coeff;
};

// Sparse polynomial with exact rational coefficients. Terms are kept sorted
// grevlex-descending with no zero coefficients, so equality of polynomials is
// equality of term vectors and printing is deterministic.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(ring) {}

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial monomial(Ring ring, Monomial m, const Rational& c = 1);
  // Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  std::size_t nvars() const { return ring_.nvars; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  // -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  // Grevlex leading term; requires a nonzero polynomial.
  const Term& leading_term() const { return terms_.front(); }
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Rational& c);
  Polynomial& operator*=(const Polynomial& q);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Rescale to integer coefficients with content 1 and a positive leading
  // coefficient. Zero stays zero.
  Polynomial primitive() const;
  // Divide by the leading coefficient.
  Polynomial monic() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& p, unsigned e);

// p(values[0], ..., values[l-1]). All values must share one ring.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> values);
Polynomial partial_derivative(const Polynomial& p, std::size_t i);

// Re-home p into `target`, sending variable i of p to variable offset + i.
Polynomial embed(const Polynomial& p, Ring target, std::size_t offset = 0);
// Inverse of embed: variables outside [offset, offset + target.nvars) must
// not occur in p.
Polynomial restrict(const Polynomial& p, Ring target, std::size_t offset = 0);
// True iff every term of p only involves variables in [begin, end).
bool uses_only(const Polynomial& p, std::size_t begin, std::size_t end);

// Text grammar: terms joined by '+'/'-'; a term is an optional rational
// coefficient `a` or `a/b` followed by '*'-separated powers such as `x1^2`.
// Whitespace is insignificant.
Polynomial parse_polynomial(std::string_view text, Ring ring);
std::string to_string(const Polynomial& p);

void check_same_ring(const Ring& a, const Ring& b);

}  // namespace orbitcalc
