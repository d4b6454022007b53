#include "orbitcalc/fields.hpp"

#include <algorithm>

#include "orbitcalc/error.hpp"

namespace orbitcalc {

PolyVectorField::PolyVectorField(std::vector<Polynomial> components) : components_(std::move(components)) {
  if (components_.empty()) throw MathError("vector field needs at least one component");
  ring_ = components_.front().ring();
  if (components_.size() != ring_.nvars)
    throw MathError("vector field has " + std::to_string(components_.size()) + " components in " +
                    to_string(ring_));
  for (const auto& c : components_) check_same_ring(ring_, c.ring());
}

PolyVectorField PolyVectorField::zero(Ring ring) {
  return PolyVectorField(std::vector<Polynomial>(ring.nvars, Polynomial(ring)));
}

PolyVectorField PolyVectorField::coordinate(Ring ring, std::size_t i) {
  std::vector<Polynomial> c(ring.nvars, Polynomial(ring));
  c.at(i) = Polynomial::constant(ring, 1);
  return PolyVectorField(std::move(c));
}

bool PolyVectorField::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

int PolyVectorField::degree() const {
  int d = -1;
  for (const auto& c : components_) d = std::max(d, c.total_degree());
  return d;
}

Polynomial PolyVectorField::apply(const Polynomial& f) const {
  check_same_ring(ring_, f.ring());
  Polynomial out(ring_);
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (!components_[i].is_zero()) out += components_[i] * partial_derivative(f, i);
  return out;
}

PolyVectorField PolyVectorField::operator-() const {
  PolyVectorField r(*this);
  for (auto& c : r.components_) c = -c;
  return r;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o) {
  check_same_ring(ring_, o.ring_);
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += o.components_[i];
  return *this;
}

PolyVectorField& PolyVectorField::operator-=(const PolyVectorField& o) {
  check_same_ring(ring_, o.ring_);
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= o.components_[i];
  return *this;
}

PolyVectorField& PolyVectorField::operator*=(const Rational& c) {
  for (auto& p : components_) p *= c;
  return *this;
}

PolyVectorField& PolyVectorField::operator*=(const Polynomial& f) {
  for (auto& p : components_) p = p * f;
  return *this;
}

int sort_with_sign(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

PolyDiffForm::PolyDiffForm(Ring ring, int degree) : ring_(ring), degree_(degree) {
  if (degree < 0) throw MathError("form degree must be non-negative");
}

PolyDiffForm PolyDiffForm::function(const Polynomial& f) {
  PolyDiffForm w(f.ring(), 0);
  if (!f.is_zero()) w.terms_.emplace(Indices{}, f);
  return w;
}

PolyDiffForm PolyDiffForm::basis(Ring ring, Indices indices, const Polynomial& coeff) {
  PolyDiffForm w(ring, static_cast<int>(indices.size()));
  w.add_term(std::move(indices), coeff);
  return w;
}

PolyDiffForm PolyDiffForm::differential(Ring ring, std::size_t i) {
  return basis(ring, {i}, Polynomial::constant(ring, 1));
}

Polynomial PolyDiffForm::coefficient(const Indices& sorted) const {
  auto it = terms_.find(sorted);
  return it == terms_.end() ? Polynomial(ring_) : it->second;
}

Polynomial PolyDiffForm::as_function() const {
  if (degree_ != 0) throw MathError("form of degree " + std::to_string(degree_) + " is not a function");
  return coefficient({});
}

int PolyDiffForm::coefficient_degree() const {
  int d = -1;
  for (const auto& [idx, c] : terms_) d = std::max(d, c.total_degree());
  return d;
}

void PolyDiffForm::add_term(Indices indices, const Polynomial& coeff) {
  if (static_cast<int>(indices.size()) != degree_) throw MathError("form term has wrong degree");
  check_same_ring(ring_, coeff.ring());
  for (auto i : indices)
    if (i >= ring_.nvars) throw MathError("form index out of range");
  const int sign = sort_with_sign(indices);
  if (sign == 0 || coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(indices, sign > 0 ? coeff : -coeff);
  if (!inserted) {
    if (sign > 0)
      it->second += coeff;
    else
      it->second -= coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyDiffForm PolyDiffForm::operator-() const {
  PolyDiffForm r(*this);
  for (auto& [idx, c] : r.terms_) c = -c;
  return r;
}

PolyDiffForm& PolyDiffForm::operator+=(const PolyDiffForm& o) {
  check_same_ring(ring_, o.ring_);
  if (degree_ != o.degree_) throw MathError("cannot add forms of different degree");
  for (const auto& [idx, c] : o.terms_) add_term(idx, c);
  return *this;
}

PolyDiffForm& PolyDiffForm::operator-=(const PolyDiffForm& o) { return *this += -o; }

PolyDiffForm& PolyDiffForm::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& [idx, p] : terms_) p *= c;
  return *this;
}

PolyDiffForm& PolyDiffForm::operator*=(const Polynomial& f) {
  check_same_ring(ring_, f.ring());
  std::map<Indices, Polynomial> out;
  for (auto& [idx, p] : terms_) {
    Polynomial q = p * f;
    if (!q.is_zero()) out.emplace(idx, std::move(q));
  }
  terms_ = std::move(out);
  return *this;
}

std::string to_string(const PolyVectorField& X) {
  std::string out;
  for (std::size_t i = 0; i < X.dim(); ++i) {
    if (X[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(X[i]) + ")*d/d" + X.ring().var_name(i);
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const PolyDiffForm& w) {
  if (w.degree() == 0) return to_string(w.as_function());
  std::string out;
  for (const auto& [idx, c] : w.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")*";
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k) out += "^";
      out += "d" + w.ring().var_name(idx[k]);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace orbitcalc
