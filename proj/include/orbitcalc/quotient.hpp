#pragma once

// Calculus on the orbit space Sigma = image of the Hilbert map.
//
// Functions on Sigma are classes in Q[y]/I and are always carried as their
// normal form modulo the relation ideal. Orbit vector fields are derivations
// of Q[y]/I given by their values on y1..yl. Orbit forms are stored
// intrinsically: a k-form is its table of values on k-tuples of the pushed
// module generators Y_1..Y_N, subject to the syzygy constraint that makes it
// C(Sigma)-multilinear.

#include <map>
#include <optional>
#include <vector>

#include "orbitcalc/exterior.hpp"
#include "orbitcalc/invariants.hpp"

namespace orbitcalc {

class OrbitVectorField {
 public:
  OrbitVectorField() = default;
  // Components are reduced modulo I; throws if the derivation does not
  // preserve I.
  OrbitVectorField(std::vector<Polynomial> components, const RelationIdeal& I);

  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& operator[](std::size_t j) const { return components_[j]; }
  std::size_t size() const { return components_.size(); }
  bool is_zero() const;

  // Y(f) = sum_j p_j df/dy_j, reduced modulo I.
  Polynomial apply(const Polynomial& f, const RelationIdeal& I) const;

  friend bool operator==(const OrbitVectorField&, const OrbitVectorField&) = default;

 private:
  std::vector<Polynomial> components_;
};

// sum_j p_j dg/dy_j ∈ I for every basis element g of I.
bool is_tangent(const std::vector<Polynomial>& components, const RelationIdeal& I);

std::string to_string(const OrbitVectorField& Y);

struct OrbitForm {
  using Tuple = std::vector<std::size_t>;

  int degree = 0;
  // N, the number of module generators the values refer to.
  std::size_t generators = 0;
  // Values on strictly increasing 0-based generator tuples; zero values are
  // omitted. Degree 0 uses the empty tuple.
  std::map<Tuple, Polynomial> values;

  // Value on an arbitrary tuple via alternation.
  Polynomial value(Tuple tuple, const Ring& yring) const;
  bool is_zero() const { return values.empty(); }
  friend bool operator==(const OrbitForm&, const OrbitForm&) = default;
};

std::string to_string(const OrbitForm& theta);

struct ExtendResult {
  // A_j with theta = sum_j A_j dy_j restricted to Sigma.
  std::optional<std::vector<Polynomial>> witness;
  // Nonzero module normal form when no witness exists.
  std::vector<Polynomial> certificate;
  bool extendable() const { return witness.has_value(); }
};

// Everything the orbit-space operations need for one group action.
class OrbitSpace {
 public:
  // The module generators must be invariant; `lie` is used only for the
  // semi-basic checks and is normally empty for finite groups.
  OrbitSpace(HilbertMap H, EquivariantModule M, LieAlgebraAction lie = {});

  const HilbertMap& hilbert() const { return hilbert_; }
  const FiniteMatrixGroup& group() const { return hilbert_.group(); }
  const RelationIdeal& ideal() const { return ideal_; }
  const EquivariantModule& module() const { return module_; }
  const LieAlgebraAction& lie() const { return lie_; }
  // Y_i = push_vf(X_i).
  const std::vector<OrbitVectorField>& pushed() const { return pushed_; }
  // Generators of the relations sum_i c_i Y_i = 0 modulo I.
  const std::vector<std::vector<Polynomial>>& generator_syzygies() const { return syzygies_; }
  Ring yring() const { return hilbert_.target_ring(); }
  Ring xring() const { return hilbert_.source_ring(); }

  Polynomial reduce(const Polynomial& p) const { return ideal_.reduce(p); }

 private:
  HilbertMap hilbert_;
  RelationIdeal ideal_;
  EquivariantModule module_;
  LieAlgebraAction lie_;
  std::vector<OrbitVectorField> pushed_;
  std::vector<std::vector<Polynomial>> syzygies_;
};

// Push an invariant field down: component j is the class of subduct(X sigma_j).
OrbitVectorField push_vf(const PolyVectorField& X, const HilbertMap& H, const RelationIdeal& I);
OrbitVectorField push_vf(const PolyVectorField& X, const OrbitSpace& space);

// An invariant field sum_j h_j(sigma) X_j pushing forward to Y, with
// deg h_j <= degree_bound (negative: the largest component degree of Y).
PolyVectorField lift_vf(const OrbitVectorField& Y, const OrbitSpace& space, int degree_bound = -1);

// Intrinsic bracket as a derivation commutator, with the sign convention
// [Y, Y'](f) = Y'(Y(f)) - Y(Y'(f)).
OrbitVectorField orbit_bracket(const OrbitVectorField& Y, const OrbitVectorField& Yp, const RelationIdeal& I);
// Same bracket computed by lifting, bracketing upstairs with the same
// convention, and pushing back down.
OrbitVectorField orbit_bracket_via_lift(const OrbitVectorField& Y, const OrbitVectorField& Yp,
                                        const OrbitSpace& space);

// Values of an invariant semi-basic form on the module generators.
OrbitForm push_form(const PolyDiffForm& w, const OrbitSpace& space);

// An invariant semi-basic form pushing to theta, by linear ansatz with
// coefficient degree <= degree_bound (negative: automatic, raised once).
PolyDiffForm pull_form(const OrbitForm& theta, const OrbitSpace& space, int degree_bound = -1);

// Throws MathError naming the violated relation when theta is not a
// well-defined functional.
void check_syzygy_compatibility(const OrbitForm& theta, const OrbitSpace& space);

// The class of f as an orbit 0-form.
OrbitForm orbit_function(const Polynomial& f, const OrbitSpace& space);

OrbitForm orbit_d(const OrbitForm& theta, const OrbitSpace& space);
OrbitForm orbit_wedge(const OrbitForm& a, const OrbitForm& b, const OrbitSpace& space);

// theta(Y) for an orbit 1-form and an arbitrary orbit vector field, through
// the lift of Y.
Polynomial orbit_contract(const OrbitVectorField& Y, const OrbitForm& theta, const OrbitSpace& space);

// Does the orbit 1-form theta extend to sum_j A_j dy_j on the ambient space?
ExtendResult extend_check(const OrbitForm& theta, const OrbitSpace& space);

// Obstruction via the exterior derivative: when every sigma_j has no linear
// part, any extendable 1-form has d(pull theta) vanishing at the origin.
struct DCertificate {
  bool applicable = false;
  PolyDiffForm d_pullback;
  bool vanishes_at_origin = true;
  bool proves_not_extendable() const { return applicable && !vanishes_at_origin; }
};
DCertificate d_certificate(const OrbitForm& theta, const OrbitSpace& space);

}  // namespace orbitcalc
