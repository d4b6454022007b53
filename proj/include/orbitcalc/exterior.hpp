#pragma once

#include <optional>
#include <span>

#include "orbitcalc/error.hpp"
#include "orbitcalc/fields.hpp"
#include "orbitcalc/group_action.hpp"

namespace orbitcalc {

PolyDiffForm wedge(const PolyDiffForm& a, const PolyDiffForm& b);

// Exterior derivative.
PolyDiffForm d(const PolyDiffForm& w);
PolyDiffForm d(const Polynomial& f);

// Contraction in the first slot. Throws for 0-forms.
PolyDiffForm interior(const PolyVectorField& X, const PolyDiffForm& w);

// w(X1, ..., Xk) = i_Xk ... i_X1 w, with the determinant normalisation
// (dx1^dx2)(d/dx1, d/dx2) = 1.
Polynomial evaluate(const PolyDiffForm& w, std::span<const PolyVectorField> fields);

Polynomial lie_derivative(const PolyVectorField& X, const Polynomial& f);
// Cartan's formula d i_X + i_X d.
PolyDiffForm lie_derivative(const PolyVectorField& X, const PolyDiffForm& w);
// Componentwise: X(c) dx_I + c sum_s dx_i1 ^ .. ^ dX_is ^ .. ^ dx_ik.
PolyDiffForm lie_derivative_direct(const PolyVectorField& X, const PolyDiffForm& w);

// Commutator of derivations: [X, Y](f) = X(Y f) - Y(X f).
PolyVectorField lie_bracket(const PolyVectorField& X, const PolyVectorField& Y);

// Pullback of w (over the target ring) along the polynomial map whose
// components are `phi` (all in the source ring).
PolyDiffForm pullback(std::span<const Polynomial> phi, const PolyDiffForm& w);

struct SemibasicResult {
  bool semibasic = true;
  // Set on failure: index into L.xi and the nonzero contraction X_xi -| w.
  std::optional<std::size_t> failing_index;
  std::optional<PolyDiffForm> contraction;
};

SemibasicResult semibasic_check(const PolyDiffForm& w, const LieAlgebraAction& L);

// Polynomial homotopy operator h: on c x^a dx_I (|a| = d, |I| = k >= 1) it
// returns i_E(x^a dx_I) * c / (d + k) with E the Euler field. Satisfies
// h d + d h = id on k >= 1 and h d f = f - f(0) on functions.
PolyDiffForm homotopy(const PolyDiffForm& w);

class NotClosed : public MathError {
 public:
  explicit NotClosed(PolyDiffForm d_beta);
  const PolyDiffForm& derivative() const { return d_beta_; }

 private:
  PolyDiffForm d_beta_;
};

// Primitive alpha of a closed k-form (k >= 1) with d alpha = beta; throws
// NotClosed carrying d(beta) otherwise.
PolyDiffForm poincare_primitive(const PolyDiffForm& beta);

}  // namespace orbitcalc
