#include "orbitcalc/quotient.hpp"

#include <algorithm>
#include <map>

#include "orbitcalc/error.hpp"

namespace orbitcalc {

namespace {

// All strictly increasing k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    std::size_t i = k;
    while (i > 0 && t[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

// Linear system whose rows are indexed by (slot, monomial) keys.
class SparseSystem {
 public:
  void add(std::size_t unknown, std::size_t slot, const Polynomial& p) {
    for (const auto& t : p.terms()) entries_.push_back({row(slot, t.mono), unknown, t.coeff});
  }
  void add_rhs(std::size_t slot, const Polynomial& p) {
    for (const auto& t : p.terms()) rhs_.push_back({row(slot, t.mono), t.coeff});
  }
  std::optional<std::vector<Rational>> solve(std::size_t unknowns) const {
    RationalMatrix a(rows_.size(), unknowns);
    std::vector<Rational> b(rows_.size());
    for (const auto& e : entries_) a(e.row, e.col) += e.value;
    for (const auto& [r, v] : rhs_) b[r] += v;
    return orbitcalc::solve(a, b);
  }

 private:
  struct Entry {
    std::size_t row, col;
    Rational value;
  };
  std::size_t row(std::size_t slot, const Monomial& m) {
    auto [it, inserted] = rows_.try_emplace({slot, m.exponents()}, rows_.size());
    return it->second;
  }
  std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> rows_;
  std::vector<Entry> entries_;
  std::vector<std::pair<std::size_t, Rational>> rhs_;
};

std::vector<Polynomial> column_of(const std::vector<OrbitVectorField>& fields, std::size_t j) {
  std::vector<Polynomial> col;
  col.reserve(fields.size());
  for (const auto& Y : fields) col.push_back(Y[j]);
  return col;
}

}  // namespace

// ---------------------------------------------------------------------------
// Orbit vector fields

bool is_tangent(const std::vector<Polynomial>& components, const RelationIdeal& I) {
  for (const auto& g : I.basis.generators()) {
    Polynomial s(g.ring());
    for (std::size_t j = 0; j < components.size(); ++j) s += components[j] * partial_derivative(g, j);
    if (!I.contains(s)) return false;
  }
  return true;
}

OrbitVectorField::OrbitVectorField(std::vector<Polynomial> components, const RelationIdeal& I) {
  const Ring yring = I.basis.ring();
  if (components.size() != yring.nvars)
    throw MathError("orbit vector field needs " + std::to_string(yring.nvars) + " components");
  for (auto& c : components) c = I.reduce(c);
  if (!is_tangent(components, I)) throw MathError("orbit vector field does not preserve the relation ideal");
  components_ = std::move(components);
}

bool OrbitVectorField::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Polynomial OrbitVectorField::apply(const Polynomial& f, const RelationIdeal& I) const {
  Polynomial out(f.ring());
  for (std::size_t j = 0; j < components_.size(); ++j) out += components_[j] * partial_derivative(f, j);
  return I.reduce(out);
}

std::string to_string(const OrbitVectorField& Y) {
  std::string out;
  for (std::size_t j = 0; j < Y.size(); ++j) {
    if (Y[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(Y[j]) + ")*d/d" + Y[j].ring().var_name(j);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Orbit forms

Polynomial OrbitForm::value(Tuple tuple, const Ring& yring) const {
  const int sign = sort_with_sign(tuple);
  if (sign == 0) return Polynomial(yring);
  auto it = values.find(tuple);
  if (it == values.end()) return Polynomial(yring);
  return sign > 0 ? it->second : -it->second;
}

std::string to_string(const OrbitForm& theta) {
  std::string out = std::to_string(theta.degree) + "-form on " + std::to_string(theta.generators) + " generators:";
  if (theta.values.empty()) return out + " 0";
  for (const auto& [tuple, v] : theta.values) {
    out += " (";
    for (std::size_t k = 0; k < tuple.size(); ++k) out += (k ? "," : "") + std::string("Y") + std::to_string(tuple[k] + 1);
    out += ")=" + to_string(v) + ";";
  }
  out.pop_back();
  return out;
}

// ---------------------------------------------------------------------------
// Orbit space context

OrbitSpace::OrbitSpace(HilbertMap H, EquivariantModule M, LieAlgebraAction lie)
    : hilbert_(std::move(H)), ideal_(relations(hilbert_)), module_(std::move(M)), lie_(std::move(lie)) {
  if (lie_.n == 0) lie_.n = hilbert_.group().dim();
  for (const auto& X : module_.generators) pushed_.push_back(push_vf(X, hilbert_, ideal_));
  std::vector<std::vector<Polynomial>> columns;
  for (const auto& Y : pushed_) columns.push_back(Y.components());
  syzygies_ = syzygies(columns, ideal_.basis);
}

OrbitVectorField push_vf(const PolyVectorField& X, const HilbertMap& H, const RelationIdeal& I) {
  check_same_ring(H.source_ring(), X.ring());
  if (!is_invariant(X, H.group())) throw MathError("push_vf: vector field is not invariant: " + to_string(X));
  std::vector<Polynomial> comps;
  comps.reserve(H.size());
  for (const auto& s : H.sigma()) comps.push_back(I.reduce(subduct_unchecked(X.apply(s), H)));
  if (!is_tangent(comps, I))
    throw MathError("push_vf: internal consistency error, pushed field is not tangent to the orbit space");
  return OrbitVectorField(std::move(comps), I);
}

OrbitVectorField push_vf(const PolyVectorField& X, const OrbitSpace& space) {
  return push_vf(X, space.hilbert(), space.ideal());
}

namespace {

// h_j in Q[y] with sum_j h_j Y_j = Y modulo I.
std::vector<Polynomial> lift_coefficients(const OrbitVectorField& Y, const OrbitSpace& space, int degree_bound) {
  const Ring yring = space.yring();
  if (Y.size() != yring.nvars) throw MathError("lift_vf: orbit field has wrong number of components");
  int bound = degree_bound;
  if (bound < 0) {
    bound = 0;
    for (const auto& c : Y.components()) bound = std::max(bound, c.total_degree());
  }
  const auto& pushed = space.pushed();
  std::vector<std::pair<std::size_t, Monomial>> unknowns;
  SparseSystem sys;
  for (int deg = 0; deg <= bound; ++deg)
    for (const auto& mu : monomials_of_degree(yring.nvars, deg))
      for (std::size_t j = 0; j < pushed.size(); ++j) {
        const std::size_t u = unknowns.size();
        unknowns.emplace_back(j, mu);
        const Polynomial m = Polynomial::monomial(yring, mu);
        for (std::size_t k = 0; k < yring.nvars; ++k) sys.add(u, k, space.reduce(m * pushed[j][k]));
      }
  for (std::size_t k = 0; k < yring.nvars; ++k) sys.add_rhs(k, space.reduce(Y[k]));
  auto sol = sys.solve(unknowns.size());
  if (!sol) throw MathError("lift not found at bound " + std::to_string(bound));
  std::vector<Polynomial> h(pushed.size(), Polynomial(yring));
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    if ((*sol)[u] != 0) h[unknowns[u].first] += Polynomial::monomial(yring, unknowns[u].second, (*sol)[u]);
  return h;
}

}  // namespace

PolyVectorField lift_vf(const OrbitVectorField& Y, const OrbitSpace& space, int degree_bound) {
  const auto h = lift_coefficients(Y, space, degree_bound);
  PolyVectorField X = PolyVectorField::zero(space.xring());
  for (std::size_t j = 0; j < h.size(); ++j)
    if (!h[j].is_zero()) X += substitute(h[j], space.hilbert().sigma()) * space.module().generators[j];
  if (!(push_vf(X, space) == Y)) throw MathError("lift_vf: internal error, lift does not push back to Y");
  return X;
}

OrbitVectorField orbit_bracket(const OrbitVectorField& Y, const OrbitVectorField& Yp, const RelationIdeal& I) {
  if (Y.size() != Yp.size()) throw MathError("orbit_bracket: fields live on different spaces");
  std::vector<Polynomial> comps;
  comps.reserve(Y.size());
  for (std::size_t j = 0; j < Y.size(); ++j) comps.push_back(Yp.apply(Y[j], I) - Y.apply(Yp[j], I));
  return OrbitVectorField(std::move(comps), I);
}

OrbitVectorField orbit_bracket_via_lift(const OrbitVectorField& Y, const OrbitVectorField& Yp,
                                        const OrbitSpace& space) {
  const PolyVectorField X = lift_vf(Y, space);
  const PolyVectorField Xp = lift_vf(Yp, space);
  // Y'(Y f) - Y(Y' f) corresponds to the commutator [X', X].
  return push_vf(lie_bracket(Xp, X), space);
}

// ---------------------------------------------------------------------------
// Forms

void check_syzygy_compatibility(const OrbitForm& theta, const OrbitSpace& space) {
  if (theta.degree == 0) return;
  const Ring yring = space.yring();
  const std::size_t N = theta.generators;
  const auto rests = increasing_tuples(N, static_cast<std::size_t>(theta.degree - 1));
  for (std::size_t s = 0; s < space.generator_syzygies().size(); ++s) {
    const auto& c = space.generator_syzygies()[s];
    for (const auto& rest : rests) {
      Polynomial sum(yring);
      for (std::size_t i = 0; i < N; ++i) {
        if (c[i].is_zero()) continue;
        OrbitForm::Tuple t{i};
        t.insert(t.end(), rest.begin(), rest.end());
        sum += c[i] * theta.value(t, yring);
      }
      if (!space.ideal().contains(sum))
        throw MathError("orbit form violates syzygy " + std::to_string(s + 1) +
                        " of the module generators: residue " + to_string(space.reduce(sum)));
    }
  }
}

OrbitForm push_form(const PolyDiffForm& w, const OrbitSpace& space) {
  check_same_ring(space.xring(), w.ring());
  if (!is_invariant(w, space.group())) throw MathError("push_form: form is not invariant: " + to_string(w));
  const SemibasicResult sb = semibasic_check(w, space.lie());
  if (!sb.semibasic)
    throw MathError("push_form: form is not semi-basic (generator " + std::to_string(*sb.failing_index + 1) +
                    " contracts to " + to_string(*sb.contraction) + ")");
  const auto& gens = space.module().generators;
  OrbitForm theta;
  theta.degree = w.degree();
  theta.generators = gens.size();
  for (const auto& tuple : increasing_tuples(gens.size(), static_cast<std::size_t>(w.degree()))) {
    std::vector<PolyVectorField> fields;
    for (auto i : tuple) fields.push_back(gens[i]);
    Polynomial v = space.reduce(subduct_unchecked(evaluate(w, fields), space.hilbert()));
    if (!v.is_zero()) theta.values.emplace(tuple, std::move(v));
  }
  check_syzygy_compatibility(theta, space);
  return theta;
}

OrbitForm orbit_function(const Polynomial& f, const OrbitSpace& space) {
  check_same_ring(space.yring(), f.ring());
  OrbitForm theta;
  theta.degree = 0;
  theta.generators = space.module().size();
  Polynomial v = space.reduce(f);
  if (!v.is_zero()) theta.values.emplace(OrbitForm::Tuple{}, std::move(v));
  return theta;
}

namespace {

std::optional<PolyDiffForm> pull_form_at(const OrbitForm& theta, const OrbitSpace& space, int bound) {
  const Ring xring = space.xring();
  const std::size_t n = xring.nvars;
  const auto k = static_cast<std::size_t>(theta.degree);
  const auto& gens = space.module().generators;

  // Invariant ansatz: Reynolds averages of monomial k-forms, lowest degree
  // first so the free-variables-zero solution has least degree.
  std::vector<PolyDiffForm> ansatz;
  for (int deg = 0; deg <= bound; ++deg)
    for (const auto& idx : increasing_tuples(n, k))
      for (const auto& m : monomials_of_degree(n, deg)) {
        PolyDiffForm b = reynolds(PolyDiffForm::basis(xring, idx, Polynomial::monomial(xring, m)), space.group());
        if (!b.is_zero()) ansatz.push_back(std::move(b));
      }
  if (ansatz.empty()) return std::nullopt;

  const auto tuples = increasing_tuples(gens.size(), k);
  const auto lie_fields = infinitesimal_fields(space.lie());
  SparseSystem sys;
  std::size_t slot = 0;
  for (const auto& tuple : tuples) {
    std::vector<PolyVectorField> fields;
    for (auto i : tuple) fields.push_back(gens[i]);
    for (std::size_t u = 0; u < ansatz.size(); ++u) sys.add(u, slot, evaluate(ansatz[u], fields));
    auto it = theta.values.find(tuple);
    if (it != theta.values.end()) sys.add_rhs(slot, substitute(it->second, space.hilbert().sigma()));
    ++slot;
  }
  // Semi-basic: every coefficient of i_{X_xi} w vanishes.
  for (const auto& Xi : lie_fields) {
    std::map<PolyDiffForm::Indices, std::size_t> slot_of;
    for (std::size_t u = 0; u < ansatz.size(); ++u)
      for (const auto& [idx, c] : interior(Xi, ansatz[u]).terms()) {
        auto [it, inserted] = slot_of.try_emplace(idx, slot + slot_of.size());
        sys.add(u, it->second, c);
      }
    slot += slot_of.size();
  }
  auto sol = sys.solve(ansatz.size());
  if (!sol) return std::nullopt;
  PolyDiffForm w(xring, theta.degree);
  for (std::size_t u = 0; u < ansatz.size(); ++u)
    if ((*sol)[u] != 0) w += ansatz[u] * (*sol)[u];
  return w;
}

}  // namespace

PolyDiffForm pull_form(const OrbitForm& theta, const OrbitSpace& space, int degree_bound) {
  if (theta.generators != space.module().size())
    throw MathError("pull_form: form refers to " + std::to_string(theta.generators) + " generators, space has " +
                    std::to_string(space.module().size()));
  check_syzygy_compatibility(theta, space);
  if (theta.degree == 0)
    return PolyDiffForm::function(substitute(theta.value({}, space.yring()), space.hilbert().sigma()));
  if (theta.degree > static_cast<int>(space.xring().nvars)) return PolyDiffForm(space.xring(), theta.degree);

  int bound = degree_bound;
  bool automatic = bound < 0;
  if (automatic) {
    int value_deg = 0;
    for (const auto& [t, v] : theta.values)
      value_deg = std::max(value_deg, substitute(v, space.hilbert().sigma()).total_degree());
    int gen_deg = 0;
    for (const auto& g : space.module().generators) gen_deg = std::max(gen_deg, g.degree());
    bound = value_deg + gen_deg;
  }
  auto w = pull_form_at(theta, space, bound);
  if (!w && automatic) {
    bound *= 2;
    w = pull_form_at(theta, space, bound);
  }
  if (!w) throw MathError("pull not found at bound " + std::to_string(bound));
  if (!(push_form(*w, space) == theta)) throw MathError("pull_form: internal error, round trip failed");
  return *w;
}

OrbitForm orbit_d(const OrbitForm& theta, const OrbitSpace& space) {
  return push_form(d(pull_form(theta, space)), space);
}

OrbitForm orbit_wedge(const OrbitForm& a, const OrbitForm& b, const OrbitSpace& space) {
  return push_form(wedge(pull_form(a, space), pull_form(b, space)), space);
}

Polynomial orbit_contract(const OrbitVectorField& Y, const OrbitForm& theta, const OrbitSpace& space) {
  if (theta.degree != 1) throw MathError("orbit_contract: needs a 1-form");
  const auto h = lift_coefficients(Y, space, -1);
  Polynomial out(space.yring());
  for (std::size_t i = 0; i < h.size(); ++i) out += h[i] * theta.value({i}, space.yring());
  return space.reduce(out);
}

ExtendResult extend_check(const OrbitForm& theta, const OrbitSpace& space) {
  if (theta.degree != 1) throw MathError("extend_check: needs an orbit 1-form");
  if (theta.generators != space.module().size()) throw MathError("extend_check: generator count mismatch");
  const Ring yring = space.yring();
  const std::size_t N = theta.generators;
  SubmoduleProblem problem{N, {}, space.ideal().basis};
  for (std::size_t j = 0; j < yring.nvars; ++j) problem.columns.push_back(column_of(space.pushed(), j));
  std::vector<Polynomial> target;
  for (std::size_t i = 0; i < N; ++i) target.push_back(theta.value({i}, yring));

  ExtendResult result;
  auto solved = module_solve(target, problem);
  if (auto* nm = std::get_if<NotMember>(&solved)) {
    result.certificate = std::move(nm->normal_form);
    return result;
  }
  auto& w = std::get<ModuleWitness>(solved);
  std::vector<Polynomial> A;
  for (auto& c : w.coefficients) A.push_back(space.reduce(c));
  for (std::size_t i = 0; i < N; ++i) {
    Polynomial s(yring);
    for (std::size_t j = 0; j < A.size(); ++j) s += A[j] * space.pushed()[i][j];
    if (!space.ideal().contains(s - target[i])) throw MathError("extend_check: internal error, witness fails");
  }
  result.witness = std::move(A);
  return result;
}

DCertificate d_certificate(const OrbitForm& theta, const OrbitSpace& space) {
  DCertificate cert;
  cert.applicable = std::all_of(space.hilbert().sigma().begin(), space.hilbert().sigma().end(), [](const Polynomial& s) {
    for (const auto& t : s.terms())
      if (t.mono.degree() < 2) return false;
    return true;
  });
  cert.d_pullback = d(pull_form(theta, space));
  cert.vanishes_at_origin = true;
  for (const auto& [idx, c] : cert.d_pullback.terms())
    if (c.constant_term() != 0) cert.vanishes_at_origin = false;
  return cert;
}

}  // namespace orbitcalc
