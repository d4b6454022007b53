#include "orbitcalc/serialize.hpp"

#include <set>

#include "orbitcalc/error.hpp"

namespace orbitcalc {

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw ParseError("expected a rational (string or integer), got " + j.dump());
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<std::size_t> indices_from_json(const json& j, std::size_t limit, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError(std::string(what) + " entries must be integers");
    const auto v = e.get<long long>();
    if (v < 1 || static_cast<std::size_t>(v) > limit)
      throw ParseError(std::string(what) + " entry " + std::to_string(v) + " out of range 1.." + std::to_string(limit));
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  return out;
}

json one_based(const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (auto i : idx) out.push_back(i + 1);
  return out;
}

int degree_from_json(const json& j) {
  const json& d = field(j, "degree");
  if (!d.is_number_integer() || d.get<long long>() < 0) throw ParseError("\"degree\" must be a non-negative integer");
  return static_cast<int>(d.get<long long>());
}

}  // namespace

json to_json(const Polynomial& p) { return to_string(p); }

Polynomial polynomial_from_json(const json& j, Ring ring) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>(), ring);
  if (j.is_number_integer()) return Polynomial::constant(ring, rational_from_json(j));
  throw ParseError("expected a polynomial string, got " + j.dump());
}

json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const json& j, std::size_t n) {
  if (!j.is_array()) throw ParseError("matrix must be an array");
  RationalMatrix m(n, n);
  if (!j.empty() && !j.front().is_array()) {
    if (j.size() != n * n) throw ParseError("flat matrix needs " + std::to_string(n * n) + " entries");
    for (std::size_t k = 0; k < n * n; ++k) m(k / n, k % n) = rational_from_json(j[k]);
    return m;
  }
  if (j.size() != n) throw ParseError("matrix needs " + std::to_string(n) + " rows, got " + std::to_string(j.size()));
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n)
      throw ParseError("matrix row " + std::to_string(r + 1) + " needs " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

json to_json(const PolyVectorField& X) { return {{"components", to_json(X.components())}}; }

PolyVectorField vector_field_from_json(const json& j, Ring ring) {
  auto comps = polynomials_from_json(field(j, "components"), ring);
  if (comps.size() != ring.nvars)
    throw ParseError("vector field needs " + std::to_string(ring.nvars) + " components, got " +
                     std::to_string(comps.size()));
  return PolyVectorField(std::move(comps));
}

json to_json(const PolyDiffForm& w) {
  json terms = json::array();
  for (const auto& [idx, c] : w.terms()) terms.push_back({{"indices", one_based(idx)}, {"coeff", to_string(c)}});
  return {{"degree", w.degree()}, {"terms", terms}};
}

PolyDiffForm form_from_json(const json& j, Ring ring) {
  const int k = degree_from_json(j);
  PolyDiffForm w(ring, k);
  if (!j.contains("terms")) return w;
  const json& terms = j.at("terms");
  if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
  for (const auto& t : terms) {
    auto idx = indices_from_json(field(t, "indices"), ring.nvars, "indices");
    if (idx.size() != static_cast<std::size_t>(k))
      throw ParseError("term has " + std::to_string(idx.size()) + " indices, form degree is " + std::to_string(k));
    w.add_term(std::move(idx), polynomial_from_json(field(t, "coeff"), ring));
  }
  return w;
}

json to_json(const OrbitForm& theta) {
  json values = json::array();
  for (const auto& [tuple, v] : theta.values) values.push_back({{"tuple", one_based(tuple)}, {"class", to_string(v)}});
  return {{"degree", theta.degree}, {"generators", theta.generators}, {"values", values}};
}

OrbitForm orbit_form_from_json(const json& j, Ring yring) {
  OrbitForm theta;
  theta.degree = degree_from_json(j);
  const json& g = field(j, "generators");
  if (!g.is_number_integer() || g.get<long long>() < 0) throw ParseError("\"generators\" must be a non-negative integer");
  theta.generators = g.get<std::size_t>();
  if (!j.contains("values")) return theta;
  const json& values = j.at("values");
  if (!values.is_array()) throw ParseError("\"values\" must be an array");
  for (const auto& v : values) {
    auto tuple = indices_from_json(field(v, "tuple"), theta.generators, "tuple");
    if (tuple.size() != static_cast<std::size_t>(theta.degree))
      throw ParseError("tuple length " + std::to_string(tuple.size()) + " does not match degree " +
                       std::to_string(theta.degree));
    Polynomial p = polynomial_from_json(field(v, "class"), yring);
    const int sign = sort_with_sign(tuple);
    if (sign == 0) {
      if (!p.is_zero()) throw ParseError("nonzero value on a tuple with a repeated generator");
      continue;
    }
    if (theta.values.contains(tuple)) throw ParseError("tuple given twice");
    if (!p.is_zero()) theta.values.emplace(std::move(tuple), sign > 0 ? p : -p);
  }
  return theta;
}

json to_json(const OrbitVectorField& Y) { return {{"components", to_json(Y.components())}}; }

json to_json(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

std::vector<Polynomial> polynomials_from_json(const json& j, Ring ring) {
  if (!j.is_array()) throw ParseError("expected an array of polynomials");
  std::vector<Polynomial> out;
  for (const auto& e : j) out.push_back(polynomial_from_json(e, ring));
  return out;
}

}  // namespace orbitcalc
