#include "orbitcalc/invariants.hpp"

#include <algorithm>
#include <map>

#include "orbitcalc/error.hpp"

namespace orbitcalc {

GroebnerBasis tag_basis_for(std::span<const Polynomial> sigma, std::stop_token stop) {
  if (sigma.empty()) throw MathError("tag basis needs at least one generator");
  const std::size_t n = sigma.front().nvars();
  const Ring ring = Ring::combined(n, sigma.size());
  std::vector<Polynomial> gens;
  gens.reserve(sigma.size());
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    if (sigma[j].ring() != Ring::x(n)) throw MathError("tag basis: generators must be polynomials in x");
    gens.push_back(Polynomial::variable(ring, n + j) - embed(sigma[j], ring, 0));
  }
  return buchberger(gens, MonomialOrder::block(n), ring, stop);
}

std::optional<Polynomial> express_in(const Polynomial& p, std::span<const Polynomial> sigma,
                                     const GroebnerBasis& tag_basis) {
  const std::size_t n = p.nvars();
  const Polynomial nf = normal_form(embed(p, tag_basis.ring(), 0), tag_basis);
  if (!uses_only(nf, n, n + sigma.size())) return std::nullopt;
  return restrict(nf, Ring::y(sigma.size()), n);
}

HilbertMap HilbertMap::from_generators(const FiniteMatrixGroup& G, std::vector<Polynomial> sigma,
                                       std::stop_token stop) {
  if (sigma.empty()) throw MathError("Hilbert map needs at least one generator");
  for (const auto& s : sigma) {
    if (s.ring() != Ring::x(G.dim())) throw MathError("Hilbert map generators must be polynomials in x1..xn");
    if (s.is_constant()) throw MathError("Hilbert map generators must be non-constant");
    if (!is_invariant(s, G)) throw MathError("Hilbert map generator " + to_string(s) + " is not invariant");
  }
  if (sigma.size() > 1) {
    for (std::size_t j = 0; j < sigma.size(); ++j) {
      std::vector<Polynomial> rest;
      for (std::size_t k = 0; k < sigma.size(); ++k)
        if (k != j) rest.push_back(sigma[k]);
      if (express_in(sigma[j], rest, tag_basis_for(rest, stop)))
        throw MathError("Hilbert map is not minimal: " + to_string(sigma[j]) + " is a polynomial in the others");
    }
  }
  GroebnerBasis tb = tag_basis_for(sigma, stop);
  return HilbertMap(G, std::move(sigma), std::move(tb));
}

std::vector<int> HilbertMap::weights() const {
  std::vector<int> w;
  for (const auto& s : sigma_) w.push_back(s.total_degree());
  return w;
}

HilbertMap invariant_generators(const FiniteMatrixGroup& G, int degree_bound, std::stop_token stop) {
  const int bound = degree_bound > 0 ? degree_bound : static_cast<int>(G.order());
  const std::size_t n = G.dim();
  const Ring ring = Ring::x(n);
  std::vector<Polynomial> sigma;
  std::optional<GroebnerBasis> tb;
  for (int deg = 1; deg <= bound; ++deg) {
    for (const auto& m : monomials_of_degree(n, deg)) {
      if (stop.stop_requested()) throw Cancelled();
      Polynomial r = reynolds(Polynomial::monomial(ring, m), G);
      if (r.is_zero()) continue;
      if (!sigma.empty() && express_in(r, sigma, *tb)) continue;
      sigma.push_back(r.primitive());
      tb = tag_basis_for(sigma, stop);
    }
  }
  std::stable_sort(sigma.begin(), sigma.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return compare_grevlex(a.leading_term().mono, b.leading_term().mono) > 0;
  });
  return HilbertMap::from_generators(G, std::move(sigma), stop);
}

RelationIdeal relations(const HilbertMap& H, std::stop_token stop) {
  const std::size_t n = H.group().dim();
  const Ring ring = H.tag_ring();
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < H.size(); ++j)
    gens.push_back(Polynomial::variable(ring, n + j) - embed(H.sigma()[j], ring, 0));
  return RelationIdeal{eliminate(gens, ring, stop)};
}

Polynomial subduct_unchecked(const Polynomial& p, const HilbertMap& H) {
  check_same_ring(H.source_ring(), p.ring());
  auto q = express_in(p, H.sigma(), H.tag_basis());
  if (!q) throw MathError("not in subalgebra: " + to_string(p));
  return *q;
}

Polynomial subduct(const Polynomial& p, const HilbertMap& H) {
  check_same_ring(H.source_ring(), p.ring());
  if (!is_invariant(p, H.group())) throw MathError("not invariant: " + to_string(p));
  return subduct_unchecked(p, H);
}

std::vector<Monomial> weighted_monomials(const std::vector<int>& weights, int w) {
  std::vector<Monomial> out;
  if (w < 0) return out;
  std::vector<int> e(weights.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == weights.size()) {
      if (left == 0) out.emplace_back(e);
      return;
    }
    for (int k = left / weights[i]; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k * weights[i]);
    }
    e[i] = 0;
  };
  rec(rec, 0, w);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return compare_grevlex(a, b) > 0; });
  return out;
}

namespace {

int low_degree(const PolyVectorField& X) {
  int d = -1;
  for (const auto& c : X.components())
    if (!c.is_zero()) {
      const int lo = c.terms().back().mono.degree();
      d = d < 0 ? lo : std::min(d, lo);
    }
  return d;
}

bool homogeneous(const PolyVectorField& X) {
  const int lo = low_degree(X);
  return lo < 0 || lo == X.degree();
}

// Position-over-term leading term: first nonzero component, grevlex leader.
std::pair<std::size_t, const Term*> pot_leader(const PolyVectorField& X) {
  for (std::size_t i = 0; i < X.dim(); ++i)
    if (!X[i].is_zero()) return {i, &X[i].leading_term()};
  return {X.dim(), nullptr};
}

}  // namespace

bool field_order_less(const PolyVectorField& a, const PolyVectorField& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto [pa, ta] = pot_leader(a);
  const auto [pb, tb] = pot_leader(b);
  if (pa != pb) return pa < pb;
  if (!ta || !tb) return false;
  return compare_grevlex(ta->mono, tb->mono) > 0;
}

PolyVectorField primitive(const PolyVectorField& X) {
  const auto [pos, lead] = pot_leader(X);
  if (!lead) return X;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& c : X.components())
    for (const auto& t : c.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (lead->coeff < 0) scale = -scale;
  return X * scale;
}

std::optional<std::vector<Polynomial>> module_coefficients(const PolyVectorField& X,
                                                           std::span<const PolyVectorField> generators,
                                                           const HilbertMap& H) {
  const Ring yring = H.target_ring();
  std::vector<Polynomial> zero(generators.size(), Polynomial(yring));
  if (X.is_zero()) return zero;
  if (generators.empty()) return std::nullopt;
  const auto weights = H.weights();
  const int target_deg = X.degree();
  const bool exact = homogeneous(X) && std::all_of(generators.begin(), generators.end(),
                                                   [](const PolyVectorField& g) { return homogeneous(g); });

  struct Unknown {
    std::size_t gen;
    Monomial mono;
    PolyVectorField field;
  };
  std::vector<Unknown> unknowns;
  std::map<std::vector<int>, Polynomial> sigma_powers;
  auto eval_monomial = [&](const Monomial& mu) -> const Polynomial& {
    auto it = sigma_powers.find(mu.exponents());
    if (it != sigma_powers.end()) return it->second;
    return sigma_powers.emplace(mu.exponents(), substitute(Polynomial::monomial(yring, mu), H.sigma())).first->second;
  };
  for (std::size_t j = 0; j < generators.size(); ++j) {
    const auto& g = generators[j];
    if (g.is_zero()) continue;
    const int lo = exact ? g.degree() : low_degree(g);
    const int top = target_deg - lo;
    for (int w = exact ? top : 0; w <= top; ++w)
      for (const auto& mu : weighted_monomials(weights, w)) unknowns.push_back({j, mu, eval_monomial(mu) * g});
  }
  if (unknowns.empty()) return std::nullopt;

  // Rows are indexed by (component, x-monomial).
  std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> row_of;
  auto row_index = [&](std::size_t comp, const Monomial& m) {
    auto [it, inserted] = row_of.try_emplace({comp, m.exponents()}, row_of.size());
    return it->second;
  };
  for (const auto& u : unknowns)
    for (std::size_t i = 0; i < u.field.dim(); ++i)
      for (const auto& t : u.field[i].terms()) row_index(i, t.mono);
  for (std::size_t i = 0; i < X.dim(); ++i)
    for (const auto& t : X[i].terms()) row_index(i, t.mono);

  RationalMatrix a(row_of.size(), unknowns.size());
  std::vector<Rational> b(row_of.size());
  for (std::size_t k = 0; k < unknowns.size(); ++k)
    for (std::size_t i = 0; i < unknowns[k].field.dim(); ++i)
      for (const auto& t : unknowns[k].field[i].terms()) a(row_index(i, t.mono), k) = t.coeff;
  for (std::size_t i = 0; i < X.dim(); ++i)
    for (const auto& t : X[i].terms()) b[row_index(i, t.mono)] = t.coeff;

  auto sol = solve(a, b);
  if (!sol) return std::nullopt;
  std::vector<Polynomial> coeffs = zero;
  for (std::size_t k = 0; k < unknowns.size(); ++k)
    if ((*sol)[k] != 0) coeffs[unknowns[k].gen] += Polynomial::monomial(yring, unknowns[k].mono, (*sol)[k]);
  return coeffs;
}

EquivariantModule equivariant_generators(const HilbertMap& H, int degree_bound) {
  const FiniteMatrixGroup& G = H.group();
  const int bound = degree_bound > 0 ? degree_bound : static_cast<int>(G.order());
  const std::size_t n = G.dim();
  const Ring ring = Ring::x(n);
  EquivariantModule M;
  for (int deg = 0; deg <= bound; ++deg)
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& m : monomials_of_degree(n, deg)) {
        PolyVectorField X = PolyVectorField::coordinate(ring, i);
        X *= Polynomial::monomial(ring, m);
        X = reynolds(X, G);
        if (X.is_zero()) continue;
        if (module_coefficients(X, M.generators, H)) continue;
        M.generators.push_back(primitive(X));
      }
  std::stable_sort(M.generators.begin(), M.generators.end(), field_order_less);
  return M;
}

EquivariantModule equivariant_generators(const FiniteMatrixGroup& G, int degree_bound) {
  return equivariant_generators(invariant_generators(G), degree_bound);
}

std::optional<PolyVectorField> equivariant_spot_check(const HilbertMap& H, const EquivariantModule& M, int degree) {
  const std::size_t n = H.group().dim();
  const Ring ring = Ring::x(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& m : monomials_of_degree(n, degree)) {
      PolyVectorField X = PolyVectorField::coordinate(ring, i);
      X *= Polynomial::monomial(ring, m);
      X = reynolds(X, H.group());
      if (X.is_zero()) continue;
      if (!module_coefficients(X, M.generators, H)) return X;
    }
  return std::nullopt;
}

bool is_minimal(const EquivariantModule& M, const HilbertMap& H) {
  for (std::size_t j = 0; j < M.size(); ++j) {
    std::vector<PolyVectorField> rest;
    for (std::size_t k = 0; k < M.size(); ++k)
      if (k != j) rest.push_back(M.generators[k]);
    if (module_coefficients(M.generators[j], rest, H)) return false;
  }
  return true;
}

}  // namespace orbitcalc
