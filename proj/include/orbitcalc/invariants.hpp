#pragma once

#include <optional>
#include <stop_token>
#include <vector>

#include "orbitcalc/fields.hpp"
#include "orbitcalc/groebner.hpp"
#include "orbitcalc/group_action.hpp"

namespace orbitcalc {

// The orbit map sigma = (sigma_1, ..., sigma_l) built from generators of the
// invariant ring, with the tag basis of <y_j - sigma_j(x)> under the block
// order that eliminates x.
class HilbertMap {
 public:
  // Validates that every sigma_j is invariant and that no sigma_j is a
  // polynomial in the others. Completeness is not checked here.
  static HilbertMap from_generators(const FiniteMatrixGroup& G, std::vector<Polynomial> sigma,
                                    std::stop_token stop = {});

  const FiniteMatrixGroup& group() const { return group_; }
  const std::vector<Polynomial>& sigma() const { return sigma_; }
  std::size_t size() const { return sigma_.size(); }
  Ring source_ring() const { return Ring::x(group_.dim()); }
  Ring target_ring() const { return Ring::y(sigma_.size()); }
  Ring tag_ring() const { return Ring::combined(group_.dim(), sigma_.size()); }
  const GroebnerBasis& tag_basis() const { return tag_basis_; }
  // deg sigma_j, the weight of y_j.
  std::vector<int> weights() const;

 private:
  HilbertMap(FiniteMatrixGroup G, std::vector<Polynomial> sigma, GroebnerBasis tag_basis)
      : group_(std::move(G)), sigma_(std::move(sigma)), tag_basis_(std::move(tag_basis)) {}

  FiniteMatrixGroup group_;
  std::vector<Polynomial> sigma_;
  GroebnerBasis tag_basis_;
};

// The ideal of relations among the sigma_j, as a reduced grevlex basis over y.
struct RelationIdeal {
  GroebnerBasis basis;

  Polynomial reduce(const Polynomial& p) const { return normal_form(p, basis); }
  bool contains(const Polynomial& p) const { return ideal_member(p, basis); }
};

// Generators of the module of invariant vector fields over the invariant ring.
struct EquivariantModule {
  std::vector<PolyVectorField> generators;
  std::size_t size() const { return generators.size(); }
};

// Tag basis of <y_j - sigma_j> for an arbitrary list of x-polynomials.
GroebnerBasis tag_basis_for(std::span<const Polynomial> sigma, std::stop_token stop = {});

// Subalgebra membership: the y-polynomial q with q(sigma) = p, or nullopt.
std::optional<Polynomial> express_in(const Polynomial& p, std::span<const Polynomial> sigma,
                                     const GroebnerBasis& tag_basis);

// Degreewise Reynolds averaging of monomials up to `degree_bound` (0 means
// |G|, the Noether bound), keeping each average that is not already in the
// subalgebra generated so far. Outputs are primitive integer polynomials
// ordered by ascending degree, then grevlex-descending leading monomial.
HilbertMap invariant_generators(const FiniteMatrixGroup& G, int degree_bound = 0, std::stop_token stop = {});

RelationIdeal relations(const HilbertMap& H, std::stop_token stop = {});

// Rewrites an invariant p as a polynomial in y with subduct(p)(sigma) = p.
// Throws "not invariant" or "not in subalgebra".
Polynomial subduct(const Polynomial& p, const HilbertMap& H);

// Same rewrite without the invariance check (callers that already know).
Polynomial subduct_unchecked(const Polynomial& p, const HilbertMap& H);

// y-monomials of weighted degree exactly w (weights = deg sigma_j).
std::vector<Monomial> weighted_monomials(const std::vector<int>& weights, int w);

// Coefficients H_j in Q[y] with X = sum_j H_j(sigma) X_j, found by a
// degree-bounded linear solve; nullopt if none exists within the bound.
std::optional<std::vector<Polynomial>> module_coefficients(const PolyVectorField& X,
                                                           std::span<const PolyVectorField> generators,
                                                           const HilbertMap& H);

// Degreewise Reynolds averaging of x^a d/dx_i for |a| <= degree_bound
// (0 means |G|), dropping candidates that are invariant-coefficient
// combinations of earlier ones. Ordered by degree, then position-over-term
// leading term.
EquivariantModule equivariant_generators(const HilbertMap& H, int degree_bound = 0);
EquivariantModule equivariant_generators(const FiniteMatrixGroup& G, int degree_bound = 0);

// Every Reynolds average of a monomial field of exactly `degree` is a
// module combination of M; returns the first counterexample.
std::optional<PolyVectorField> equivariant_spot_check(const HilbertMap& H, const EquivariantModule& M, int degree);

// No generator is a combination of the others.
bool is_minimal(const EquivariantModule& M, const HilbertMap& H);

// Canonical order used for module generators: degree ascending, then the
// position-over-term leading term descending.
bool field_order_less(const PolyVectorField& a, const PolyVectorField& b);
// Content-1 integer rescaling with positive leading coefficient (POT).
PolyVectorField primitive(const PolyVectorField& X);

}  // namespace orbitcalc
