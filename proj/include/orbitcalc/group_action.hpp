#pragma once

#include <cstddef>
#include <vector>

#include "orbitcalc/fields.hpp"
#include "orbitcalc/linalg.hpp"
#include "orbitcalc/polynomial.hpp"

namespace orbitcalc {

using Matrix = RationalMatrix;

inline constexpr std::size_t kDefaultGroupCap = 100000;

// A finite subgroup of GL(n, Q) with its full element list. Elements are
// listed breadth-first from the identity, expanding by the generators in
// input order.
class FiniteMatrixGroup {
 public:
  static FiniteMatrixGroup closure(std::vector<Matrix> generators, std::size_t cap = kDefaultGroupCap);

  std::size_t dim() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Matrix>& generators() const { return generators_; }
  const std::vector<Matrix>& elements() const { return elements_; }
  const Matrix& inverse_of(std::size_t element) const { return inverses_[element]; }

 private:
  std::size_t n_ = 0;
  std::vector<Matrix> generators_;
  std::vector<Matrix> elements_;
  std::vector<Matrix> inverses_;
};

// Linear infinitesimal action: each xi gives the vector field X_xi(x) = xi x.
// Empty for finite groups.
struct LieAlgebraAction {
  std::size_t n = 0;
  std::vector<Matrix> xi;
};

// Left actions: (g.p)(x) = p(g^-1 x), (g.X)(x) = g X(g^-1 x), and
// g.w = (g^-1)^* w.
Polynomial act_poly(const Matrix& g, const Polynomial& p);
PolyVectorField act_vf(const Matrix& g, const PolyVectorField& X);
PolyDiffForm act_form(const Matrix& g, const PolyDiffForm& w);

// Same actions given g^-1 directly.
Polynomial act_poly_by_inverse(const Matrix& g_inv, const Polynomial& p);
PolyVectorField act_vf_by_inverse(const Matrix& g, const Matrix& g_inv, const PolyVectorField& X);
PolyDiffForm act_form_by_inverse(const Matrix& g_inv, const PolyDiffForm& w);

// Averaging over the group. The default entry points run the OpenMP kernel;
// the *_serial versions are the reference implementations.
Polynomial reynolds(const Polynomial& p, const FiniteMatrixGroup& G);
PolyVectorField reynolds(const PolyVectorField& X, const FiniteMatrixGroup& G);
PolyDiffForm reynolds(const PolyDiffForm& w, const FiniteMatrixGroup& G);
Polynomial reynolds_serial(const Polynomial& p, const FiniteMatrixGroup& G);
PolyVectorField reynolds_serial(const PolyVectorField& X, const FiniteMatrixGroup& G);
PolyDiffForm reynolds_serial(const PolyDiffForm& w, const FiniteMatrixGroup& G);

// Invariance under every generator (hence under the whole group).
bool is_invariant(const Polynomial& p, const FiniteMatrixGroup& G);
bool is_invariant(const PolyVectorField& X, const FiniteMatrixGroup& G);
bool is_invariant(const PolyDiffForm& w, const FiniteMatrixGroup& G);

std::vector<PolyVectorField> infinitesimal_fields(const LieAlgebraAction& L);

// Images x -> A x as a list of linear polynomials in Ring::x(n).
std::vector<Polynomial> linear_map_components(const Matrix& a);

}  // namespace orbitcalc
