#include "orbitcalc/group_action.hpp"

#include <deque>
#include <unordered_map>

#include "orbitcalc/error.hpp"
#include "orbitcalc/kernels.hpp"

namespace orbitcalc {

namespace {

std::string matrix_key(const Matrix& m) {
  std::string key;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      key += m(i, j).get_str(16);
      key += ',';
    }
  return key;
}

void check_dim(const Matrix& g, std::size_t n, const char* what) {
  if (g.rows() != g.cols() || g.rows() != n)
    throw MathError(std::string(what) + ": matrix size does not match dimension " + std::to_string(n));
}

// Pullback of dx_I along x -> A x: sum_J det(A[I, J]) dx_J.
PolyDiffForm pullback_basis_linear(const Matrix& a, const PolyDiffForm::Indices& rows, const Polynomial& coeff) {
  const std::size_t n = a.cols();
  const std::size_t k = rows.size();
  PolyDiffForm out(coeff.ring(), static_cast<int>(k));
  if (k == 0) {
    out.add_term({}, coeff);
    return out;
  }
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  while (true) {
    Matrix minor(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) minor(r, c) = a(rows[r], cols[c]);
    const Rational det = determinant(minor);
    if (det != 0) out.add_term(cols, coeff * det);
    // Next k-subset of {0..n-1} in lexicographic order.
    std::size_t i = k;
    while (i > 0 && cols[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return out;
}

}  // namespace

FiniteMatrixGroup FiniteMatrixGroup::closure(std::vector<Matrix> generators, std::size_t cap) {
  if (generators.empty()) throw MathError("closure: at least one generator is required");
  FiniteMatrixGroup G;
  G.n_ = generators.front().rows();
  for (const auto& g : generators) {
    check_dim(g, G.n_, "closure");
    if (!inverse(g)) throw MathError("closure: singular generator");
  }
  G.generators_ = std::move(generators);
  std::unordered_map<std::string, std::size_t> seen;
  std::deque<std::size_t> queue;
  auto add = [&](Matrix m) {
    auto [it, inserted] = seen.try_emplace(matrix_key(m), G.elements_.size());
    if (!inserted) return;
    if (G.elements_.size() >= cap)
      throw MathError("group not finite within cap (" + std::to_string(cap) + " elements)");
    G.elements_.push_back(std::move(m));
    queue.push_back(G.elements_.size() - 1);
  };
  add(Matrix::identity(G.n_));
  while (!queue.empty()) {
    const std::size_t e = queue.front();
    queue.pop_front();
    for (const auto& g : G.generators_) add(g * G.elements_[e]);
  }
  G.inverses_.reserve(G.elements_.size());
  for (const auto& m : G.elements_) G.inverses_.push_back(*inverse(m));
  return G;
}

std::vector<Polynomial> linear_map_components(const Matrix& a) {
  const Ring ring = Ring::x(a.cols());
  std::vector<Polynomial> out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Polynomial p(ring);
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) p += Polynomial::variable(ring, j) * a(i, j);
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

std::vector<Polynomial> linear_images(const Matrix& a, const Ring& ring) {
  std::vector<Polynomial> out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Polynomial p(ring);
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) p += Polynomial::variable(ring, j) * a(i, j);
    out.push_back(std::move(p));
  }
  return out;
}

Polynomial compose_linear(const Polynomial& p, const std::vector<Polynomial>& images) {
  if (p.is_constant()) return p;
  return substitute(p, images);
}

}  // namespace

Polynomial act_poly_by_inverse(const Matrix& g_inv, const Polynomial& p) {
  check_dim(g_inv, p.nvars(), "act_poly");
  return compose_linear(p, linear_images(g_inv, p.ring()));
}

PolyVectorField act_vf_by_inverse(const Matrix& g, const Matrix& g_inv, const PolyVectorField& X) {
  check_dim(g, X.dim(), "act_vf");
  const auto images = linear_images(g_inv, X.ring());
  std::vector<Polynomial> moved;
  moved.reserve(X.dim());
  for (const auto& c : X.components()) moved.push_back(compose_linear(c, images));
  std::vector<Polynomial> out(X.dim(), Polynomial(X.ring()));
  for (std::size_t i = 0; i < X.dim(); ++i)
    for (std::size_t j = 0; j < X.dim(); ++j)
      if (g(i, j) != 0) out[i] += moved[j] * g(i, j);
  return PolyVectorField(std::move(out));
}

PolyDiffForm act_form_by_inverse(const Matrix& g_inv, const PolyDiffForm& w) {
  check_dim(g_inv, w.dim(), "act_form");
  const auto images = linear_images(g_inv, w.ring());
  PolyDiffForm out(w.ring(), w.degree());
  for (const auto& [idx, c] : w.terms()) out += pullback_basis_linear(g_inv, idx, compose_linear(c, images));
  return out;
}

Polynomial act_poly(const Matrix& g, const Polynomial& p) {
  check_dim(g, p.nvars(), "act_poly");
  auto inv = inverse(g);
  if (!inv) throw MathError("act_poly: singular matrix");
  return act_poly_by_inverse(*inv, p);
}

PolyVectorField act_vf(const Matrix& g, const PolyVectorField& X) {
  check_dim(g, X.dim(), "act_vf");
  auto inv = inverse(g);
  if (!inv) throw MathError("act_vf: singular matrix");
  return act_vf_by_inverse(g, *inv, X);
}

PolyDiffForm act_form(const Matrix& g, const PolyDiffForm& w) {
  check_dim(g, w.dim(), "act_form");
  auto inv = inverse(g);
  if (!inv) throw MathError("act_form: singular matrix");
  return act_form_by_inverse(*inv, w);
}

Polynomial reynolds(const Polynomial& p, const FiniteMatrixGroup& G) {
  check_dim(G.elements().front(), p.nvars(), "reynolds");
  return kernels::omp::average<Polynomial>(G.order(),
                                           [&](std::size_t i) { return act_poly_by_inverse(G.inverse_of(i), p); });
}

PolyVectorField reynolds(const PolyVectorField& X, const FiniteMatrixGroup& G) {
  check_dim(G.elements().front(), X.dim(), "reynolds");
  return kernels::omp::average<PolyVectorField>(G.order(), [&](std::size_t i) {
    return act_vf_by_inverse(G.elements()[i], G.inverse_of(i), X);
  });
}

PolyDiffForm reynolds(const PolyDiffForm& w, const FiniteMatrixGroup& G) {
  check_dim(G.elements().front(), w.dim(), "reynolds");
  return kernels::omp::average<PolyDiffForm>(G.order(),
                                             [&](std::size_t i) { return act_form_by_inverse(G.inverse_of(i), w); });
}

Polynomial reynolds_serial(const Polynomial& p, const FiniteMatrixGroup& G) {
  check_dim(G.elements().front(), p.nvars(), "reynolds");
  return kernels::serial::average<Polynomial>(G.order(),
                                              [&](std::size_t i) { return act_poly(G.elements()[i], p); });
}

PolyVectorField reynolds_serial(const PolyVectorField& X, const FiniteMatrixGroup& G) {
  check_dim(G.elements().front(), X.dim(), "reynolds");
  return kernels::serial::average<PolyVectorField>(G.order(),
                                                   [&](std::size_t i) { return act_vf(G.elements()[i], X); });
}

PolyDiffForm reynolds_serial(const PolyDiffForm& w, const FiniteMatrixGroup& G) {
  check_dim(G.elements().front(), w.dim(), "reynolds");
  return kernels::serial::average<PolyDiffForm>(G.order(),
                                                [&](std::size_t i) { return act_form(G.elements()[i], w); });
}

bool is_invariant(const Polynomial& p, const FiniteMatrixGroup& G) {
  for (const auto& g : G.generators())
    if (!(act_poly(g, p) == p)) return false;
  return true;
}

bool is_invariant(const PolyVectorField& X, const FiniteMatrixGroup& G) {
  for (const auto& g : G.generators())
    if (!(act_vf(g, X) == X)) return false;
  return true;
}

bool is_invariant(const PolyDiffForm& w, const FiniteMatrixGroup& G) {
  for (const auto& g : G.generators())
    if (!(act_form(g, w) == w)) return false;
  return true;
}

std::vector<PolyVectorField> infinitesimal_fields(const LieAlgebraAction& L) {
  std::vector<PolyVectorField> out;
  for (const auto& xi : L.xi) {
    check_dim(xi, L.n, "infinitesimal_fields");
    out.emplace_back(linear_map_components(xi));
  }
  return out;
}

}  // namespace orbitcalc
