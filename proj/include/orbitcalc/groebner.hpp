#pragma once

#include <functional>
#include <span>
#include <stop_token>
#include <variant>
#include <vector>

#include "orbitcalc/monomial.hpp"
#include "orbitcalc/polynomial.hpp"

namespace orbitcalc {

// A generating set together with the order it was computed under. When
// `reduced()` holds, the generators form the unique reduced Groebner basis
// (monic, inter-reduced) sorted by ascending leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, MonomialOrder order) : ring_(ring), order_(order) {}
  GroebnerBasis(Ring ring, MonomialOrder order, std::vector<Polynomial> gens, bool reduced);

  const Ring& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  // Leading monomial of generator i under order().
  const Monomial& leading_monomial(std::size_t i) const { return leading_[i]; }
  bool reduced() const { return reduced_; }
  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_unit_ideal() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.ring_ == b.ring_ && a.order_ == b.order_ && a.gens_ == b.gens_;
  }

 private:
  Ring ring_;
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
  std::vector<Monomial> leading_;
  bool reduced_ = false;
};

// Leading term of p under `order` (p nonzero).
Term leading_term(const Polynomial& p, const MonomialOrder& order);

// Reduced Groebner basis of <gens>. Zero generators are ignored. Polls
// `stop` once per S-pair and throws Cancelled when a stop is requested.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order, Ring ring,
                         std::stop_token stop = {});
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         std::stop_token stop = {});

// Picks which of several eligible divisors (indices into the basis) reduces
// the current leading term. The default picks the first.
using DivisorChooser = std::function<std::size_t(std::span<const std::size_t>)>;

// Remainder of full multivariate division by the basis generators.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb, const DivisorChooser& choose);
bool ideal_member(const Polynomial& p, const GroebnerBasis& gb);

// Groebner basis of <gens> ∩ Q[y], where gens live in Ring::combined(n, l)
// and x is eliminated with the block order. The result lives in
// Ring::y(l) with grevlex.
GroebnerBasis eliminate(std::span<const Polynomial> gens, Ring combined, std::stop_token stop = {});

using PolyVector = std::vector<Polynomial>;

// Is `target` in span_{Q[y]}(columns) + ideal^r ?
struct SubmoduleProblem {
  std::size_t ambient_rank = 0;
  std::vector<PolyVector> columns;
  GroebnerBasis ideal_padding;
};

struct ModuleWitness {
  // One coefficient per column, reduced modulo the syzygies of the columns
  // (so the witness is canonical).
  std::vector<Polynomial> coefficients;
  // target - sum coefficients[k] * columns[k]; every entry lies in the ideal.
  PolyVector ideal_part;
};

struct NotMember {
  // Nonzero module normal form of the target.
  PolyVector normal_form;
};

using ModuleResult = std::variant<ModuleWitness, NotMember>;

ModuleResult module_solve(const PolyVector& target, const SubmoduleProblem& problem,
                          std::stop_token stop = {});

// Generators of { c : sum c_i columns_i ∈ ideal^r } modulo ideal^N. Every
// returned vector is verified before returning.
std::vector<PolyVector> syzygies(std::span<const PolyVector> columns, const GroebnerBasis& ideal,
                                 std::stop_token stop = {});

}  // namespace orbitcalc
