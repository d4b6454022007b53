#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbitcalc/polynomial.hpp"

namespace orbitcalc {

// X = sum_i f_i d/dx_i with polynomial components.
class PolyVectorField {
 public:
  PolyVectorField() = default;
  explicit PolyVectorField(std::vector<Polynomial> components);
  static PolyVectorField zero(Ring ring);
  // d/dx_i.
  static PolyVectorField coordinate(Ring ring, std::size_t i);

  const Ring& ring() const { return ring_; }
  std::size_t dim() const { return components_.size(); }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  bool is_zero() const;
  // Largest component degree (-1 for the zero field).
  int degree() const;

  // X(f) = sum_i f_i df/dx_i.
  Polynomial apply(const Polynomial& f) const;

  PolyVectorField operator-() const;
  PolyVectorField& operator+=(const PolyVectorField& o);
  PolyVectorField& operator-=(const PolyVectorField& o);
  PolyVectorField& operator*=(const Rational& c);
  PolyVectorField& operator*=(const Polynomial& f);
  friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
  friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
  friend PolyVectorField operator*(PolyVectorField a, const Rational& c) { return a *= c; }
  friend PolyVectorField operator*(const Polynomial& f, PolyVectorField a) { return a *= f; }
  friend bool operator==(const PolyVectorField&, const PolyVectorField&) = default;

 private:
  Ring ring_;
  std::vector<Polynomial> components_;
};

// Differential k-form sum_I c_I dx_I over the variables of `ring`. Index
// tuples are 0-based and strictly increasing; zero coefficients are never
// stored.
class PolyDiffForm {
 public:
  using Indices = std::vector<std::size_t>;

  PolyDiffForm() = default;
  PolyDiffForm(Ring ring, int degree);
  static PolyDiffForm function(const Polynomial& f);
  // c * dx_{i1} ^ ... ^ dx_{ik}; indices in any order (the permutation sign
  // is absorbed into the coefficient, repeated indices give zero).
  static PolyDiffForm basis(Ring ring, Indices indices, const Polynomial& coeff);
  static PolyDiffForm differential(Ring ring, std::size_t i);

  const Ring& ring() const { return ring_; }
  std::size_t dim() const { return ring_.nvars; }
  int degree() const { return degree_; }
  const std::map<Indices, Polynomial>& terms() const { return terms_; }
  Polynomial coefficient(const Indices& sorted) const;
  bool is_zero() const { return terms_.empty(); }
  // Degree-0 form as a polynomial.
  Polynomial as_function() const;
  // Largest coefficient degree (-1 for zero).
  int coefficient_degree() const;

  // Adds c * dx_indices (indices in any order).
  void add_term(Indices indices, const Polynomial& coeff);

  PolyDiffForm operator-() const;
  PolyDiffForm& operator+=(const PolyDiffForm& o);
  PolyDiffForm& operator-=(const PolyDiffForm& o);
  PolyDiffForm& operator*=(const Rational& c);
  PolyDiffForm& operator*=(const Polynomial& f);
  friend PolyDiffForm operator+(PolyDiffForm a, const PolyDiffForm& b) { return a += b; }
  friend PolyDiffForm operator-(PolyDiffForm a, const PolyDiffForm& b) { return a -= b; }
  friend PolyDiffForm operator*(PolyDiffForm a, const Rational& c) { return a *= c; }
  friend PolyDiffForm operator*(const Polynomial& f, PolyDiffForm a) { return a *= f; }
  friend bool operator==(const PolyDiffForm&, const PolyDiffForm&) = default;

 private:
  Ring ring_;
  int degree_ = 0;
  std::map<Indices, Polynomial> terms_;
};

// Sign of the permutation sorting `indices`, 0 if an index repeats.
// `indices` is sorted in place.
int sort_with_sign(std::vector<std::size_t>& indices);

std::string to_string(const PolyVectorField& X);
std::string to_string(const PolyDiffForm& w);

}  // namespace orbitcalc
