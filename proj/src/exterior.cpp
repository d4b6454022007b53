#include "orbitcalc/exterior.hpp"

#include <algorithm>

namespace orbitcalc {

PolyDiffForm wedge(const PolyDiffForm& a, const PolyDiffForm& b) {
  check_same_ring(a.ring(), b.ring());
  PolyDiffForm out(a.ring(), a.degree() + b.degree());
  if (a.degree() + b.degree() > static_cast<int>(a.dim())) return out;
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      PolyDiffForm::Indices idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add_term(std::move(idx), ca * cb);
    }
  return out;
}

PolyDiffForm d(const PolyDiffForm& w) {
  PolyDiffForm out(w.ring(), w.degree() + 1);
  if (w.degree() + 1 > static_cast<int>(w.dim())) return out;
  for (const auto& [idx, c] : w.terms())
    for (std::size_t j = 0; j < w.dim(); ++j) {
      if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
      Polynomial dc = partial_derivative(c, j);
      if (dc.is_zero()) continue;
      PolyDiffForm::Indices full{j};
      full.insert(full.end(), idx.begin(), idx.end());
      out.add_term(std::move(full), dc);
    }
  return out;
}

PolyDiffForm d(const Polynomial& f) { return d(PolyDiffForm::function(f)); }

PolyDiffForm interior(const PolyVectorField& X, const PolyDiffForm& w) {
  if (w.degree() == 0) throw MathError("cannot contract a function");
  check_same_ring(X.ring(), w.ring());
  PolyDiffForm out(w.ring(), w.degree() - 1);
  for (const auto& [idx, c] : w.terms())
    for (std::size_t s = 0; s < idx.size(); ++s) {
      const Polynomial& comp = X[idx[s]];
      if (comp.is_zero()) continue;
      PolyDiffForm::Indices rest;
      for (std::size_t t = 0; t < idx.size(); ++t)
        if (t != s) rest.push_back(idx[t]);
      Polynomial coeff = comp * c;
      out.add_term(std::move(rest), s % 2 == 0 ? coeff : -coeff);
    }
  return out;
}

Polynomial evaluate(const PolyDiffForm& w, std::span<const PolyVectorField> fields) {
  if (static_cast<int>(fields.size()) != w.degree())
    throw MathError("evaluate: a " + std::to_string(w.degree()) + "-form needs " + std::to_string(w.degree()) +
                    " vector fields");
  PolyDiffForm cur = w;
  for (const auto& X : fields) cur = interior(X, cur);
  return cur.as_function();
}

Polynomial lie_derivative(const PolyVectorField& X, const Polynomial& f) { return X.apply(f); }

PolyDiffForm lie_derivative(const PolyVectorField& X, const PolyDiffForm& w) {
  if (w.degree() == 0) return PolyDiffForm::function(X.apply(w.as_function()));
  PolyDiffForm out = d(interior(X, w));
  if (w.degree() < static_cast<int>(w.dim())) out += interior(X, d(w));
  return out;
}

PolyDiffForm lie_derivative_direct(const PolyVectorField& X, const PolyDiffForm& w) {
  check_same_ring(X.ring(), w.ring());
  PolyDiffForm out(w.ring(), w.degree());
  const Polynomial one = Polynomial::constant(w.ring(), 1);
  for (const auto& [idx, c] : w.terms()) {
    out.add_term(idx, X.apply(c));
    for (std::size_t s = 0; s < idx.size(); ++s) {
      // Replace dx_is by dX_is.
      PolyDiffForm piece = PolyDiffForm::function(c);
      for (std::size_t t = 0; t < idx.size(); ++t) {
        const PolyDiffForm factor =
            t == s ? d(X[idx[t]]) : PolyDiffForm::basis(w.ring(), {idx[t]}, one);
        piece = wedge(piece, factor);
      }
      out += piece;
    }
  }
  return out;
}

PolyVectorField lie_bracket(const PolyVectorField& X, const PolyVectorField& Y) {
  check_same_ring(X.ring(), Y.ring());
  std::vector<Polynomial> out;
  out.reserve(X.dim());
  for (std::size_t i = 0; i < X.dim(); ++i) out.push_back(X.apply(Y[i]) - Y.apply(X[i]));
  return PolyVectorField(std::move(out));
}

PolyDiffForm pullback(std::span<const Polynomial> phi, const PolyDiffForm& w) {
  if (phi.size() != w.dim())
    throw MathError("pullback: map has " + std::to_string(phi.size()) + " components, form lives in " +
                    std::to_string(w.dim()) + " variables");
  if (phi.empty()) throw MathError("pullback: empty map");
  const Ring source = phi.front().ring();
  std::vector<PolyDiffForm> dphi;
  dphi.reserve(phi.size());
  for (const auto& p : phi) {
    check_same_ring(source, p.ring());
    dphi.push_back(d(p));
  }
  PolyDiffForm out(source, w.degree());
  for (const auto& [idx, c] : w.terms()) {
    PolyDiffForm piece = PolyDiffForm::function(substitute(c, phi));
    for (auto i : idx) piece = wedge(piece, dphi[i]);
    out += piece;
  }
  return out;
}

SemibasicResult semibasic_check(const PolyDiffForm& w, const LieAlgebraAction& L) {
  SemibasicResult result;
  if (w.degree() == 0) return result;
  const auto fields = infinitesimal_fields(L);
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (fields[k].dim() != w.dim()) throw MathError("semibasic_check: dimension mismatch");
    PolyDiffForm c = interior(fields[k], w);
    if (!c.is_zero()) {
      result.semibasic = false;
      result.failing_index = k;
      result.contraction = std::move(c);
      return result;
    }
  }
  return result;
}

PolyDiffForm homotopy(const PolyDiffForm& w) {
  const int k = w.degree();
  if (k == 0) return PolyDiffForm(w.ring(), 0);
  PolyDiffForm out(w.ring(), k - 1);
  for (const auto& [idx, c] : w.terms())
    for (const auto& t : c.terms()) {
      const Rational weight(1, static_cast<unsigned long>(t.mono.degree() + k));
      for (std::size_t s = 0; s < idx.size(); ++s) {
        Monomial m = t.mono;
        m.set(idx[s], m[idx[s]] + 1);
        PolyDiffForm::Indices rest;
        for (std::size_t r = 0; r < idx.size(); ++r)
          if (r != s) rest.push_back(idx[r]);
        const Rational coeff = s % 2 == 0 ? Rational(t.coeff * weight) : Rational(-t.coeff * weight);
        out.add_term(std::move(rest), Polynomial::monomial(w.ring(), std::move(m), coeff));
      }
    }
  return out;
}

NotClosed::NotClosed(PolyDiffForm d_beta)
    : MathError("form is not closed: d(beta) = " + to_string(d_beta)), d_beta_(std::move(d_beta)) {}

PolyDiffForm poincare_primitive(const PolyDiffForm& beta) {
  if (beta.degree() == 0) throw MathError("poincare_primitive: needs a form of degree >= 1");
  PolyDiffForm db = d(beta);
  if (!db.is_zero()) throw NotClosed(std::move(db));
  return homotopy(beta);
}

}  // namespace orbitcalc
