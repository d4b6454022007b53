#include "orbitcalc/polynomial.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "orbitcalc/error.hpp"
#include "orbitcalc/kernels.hpp"

namespace orbitcalc {

std::string Ring::var_name(std::size_t i) const {
  switch (alphabet) {
    case Alphabet::x:
      return "x" + std::to_string(i + 1);
    case Alphabet::y:
      return "y" + std::to_string(i + 1);
    case Alphabet::xy:
      return i < split ? "x" + std::to_string(i + 1) : "y" + std::to_string(i - split + 1);
    case Alphabet::ey:
      return i < split ? "e" + std::to_string(i + 1) : "y" + std::to_string(i - split + 1);
  }
  return "?";
}

std::string to_string(const Ring& r) {
  switch (r.alphabet) {
    case Alphabet::x:
      return "Q[x1..x" + std::to_string(r.nvars) + "]";
    case Alphabet::y:
      return "Q[y1..y" + std::to_string(r.nvars) + "]";
    case Alphabet::xy:
      return "Q[x1..x" + std::to_string(r.split) + ",y1..y" + std::to_string(r.nvars - r.split) + "]";
    case Alphabet::ey:
      return "Q[e1..e" + std::to_string(r.split) + ",y1..y" + std::to_string(r.nvars - r.split) + "]";
  }
  return "?";
}

void check_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw MathError("incompatible rings: " + to_string(a) + " vs " + to_string(b));
}

namespace {

bool grevlex_desc(const Term& a, const Term& b) { return compare_grevlex(a.mono, b.mono) > 0; }

// Merge two sorted term lists, scaling the second by `sign`.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size())
      c = -1;
    else if (j == b.size())
      c = 1;
    else
      c = compare_grevlex(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({Monomial(ring.nvars), c});
  if (!p.terms_.empty()) p.terms_.back().coeff.canonicalize();
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  if (index >= ring.nvars) throw MathError("variable index out of range");
  return monomial(ring, Monomial::variable(ring.nvars, index));
}

Polynomial Polynomial::monomial(Ring ring, Monomial m, const Rational& c) {
  if (m.size() != ring.nvars) throw MathError("monomial length does not match ring");
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({std::move(m), c});
  if (!p.terms_.empty()) p.terms_.back().coeff.canonicalize();
  return p;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  for (auto& t : terms) {
    if (t.mono.size() != ring.nvars) throw MathError("monomial length does not match ring");
    t.coeff.canonicalize();
  }
  std::sort(terms.begin(), terms.end(), grevlex_desc);
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

int Polynomial::total_degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return compare_grevlex(t.mono, key) > 0;
  });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  check_same_ring(ring_, q.ring_);
  terms_ = merge(terms_, q.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  check_same_ring(ring_, q.ring_);
  terms_ = merge(terms_, q.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) { return *this = poly_mul(*this, q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) { return poly_mul(p, q); }

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (terms_.front().coeff < 0) scale = -scale;
  return *this * scale;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * Rational(1 / terms_.front().coeff);
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
  check_same_ring(p.ring(), q.ring());
  Polynomial r(p.ring());
  if (p.is_zero() || q.is_zero()) return r;
  std::vector<Term> terms = p.size() * q.size() >= kernels::kParallelMulThreshold
                                ? kernels::omp::multiply(p.terms(), q.terms())
                                : kernels::serial::multiply(p.terms(), q.terms());
  return Polynomial::from_terms(p.ring(), std::move(terms));
}

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial result = Polynomial::constant(p.ring(), 1);
  Polynomial base = p;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> values) {
  if (values.size() != p.nvars())
    throw MathError("substitute: expected " + std::to_string(p.nvars()) + " values, got " +
                    std::to_string(values.size()));
  if (values.empty()) {
    throw MathError("substitute: cannot infer target ring from an empty value list");
  }
  const Ring target = values.front().ring();
  for (const auto& v : values) check_same_ring(target, v.ring());
  std::vector<std::vector<Polynomial>> powers(values.size());
  auto power = [&](std::size_t var, int e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * values[var]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial result(target);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i] != 0) term = term * power(i, t.mono[i]);
    result += term;
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t i) {
  if (i >= p.nvars()) throw MathError("partial_derivative: variable index out of range");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    const int e = t.mono[i];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(i, e - 1);
    out.push_back({std::move(m), t.coeff * e});
  }
  return Polynomial::from_terms(p.ring(), std::move(out));
}

Polynomial embed(const Polynomial& p, Ring target, std::size_t offset) {
  if (offset + p.nvars() > target.nvars) throw MathError("embed: target ring too small");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target.nvars);
    for (std::size_t i = 0; i < p.nvars(); ++i) m.set(offset + i, t.mono[i]);
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

bool uses_only(const Polynomial& p, std::size_t begin, std::size_t end) {
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if ((i < begin || i >= end) && t.mono[i] != 0) return false;
  return true;
}

Polynomial restrict(const Polynomial& p, Ring target, std::size_t offset) {
  if (!uses_only(p, offset, offset + target.nvars))
    throw MathError("restrict: polynomial involves variables outside the target block");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target.nvars);
    for (std::size_t i = 0; i < target.nvars; ++i) m.set(i, t.mono[offset + i]);
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

}  // namespace orbitcalc
