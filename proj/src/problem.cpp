#include "orbitcalc/problem.hpp"

#include <fstream>

#include "orbitcalc/error.hpp"

namespace orbitcalc {

namespace {

std::vector<Matrix> matrices_from_json(const json& j, std::size_t n, const char* what) {
  if (!j.is_array()) throw ParseError(std::string("\"") + what + "\" must be an array of matrices");
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    try {
      out.push_back(matrix_from_json(j[k], n));
    } catch (const ParseError& e) {
      throw ParseError(std::string(what) + " #" + std::to_string(k + 1) + ": " + e.what());
    }
  }
  return out;
}

int bound_from_json(const json& j, const char* key) {
  if (!j.contains(key)) return 0;
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ParseError(std::string("degree_bounds.") + key + " must be a non-negative integer");
  return static_cast<int>(v.get<long long>());
}

bool same_subalgebra(const HilbertMap& a, const HilbertMap& b) {
  for (const auto& s : a.sigma())
    if (!express_in(s, b.sigma(), b.tag_basis())) return false;
  for (const auto& s : b.sigma())
    if (!express_in(s, a.sigma(), a.tag_basis())) return false;
  return true;
}

bool spans(std::span<const PolyVectorField> gens, std::span<const PolyVectorField> fields, const HilbertMap& H) {
  for (const auto& X : fields)
    if (!module_coefficients(X, gens, H)) return false;
  return true;
}

}  // namespace

const NamedObject& ProblemFile::object(const std::string& name) const {
  auto it = named_objects.find(name);
  if (it == named_objects.end()) throw ParseError("no named object \"" + name + "\" in the problem file");
  return it->second;
}

ProblemFile problem_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("problem file must be a JSON object");
  ProblemFile p;
  if (!j.contains("n") || !j.at("n").is_number_integer() || j.at("n").get<long long>() < 1)
    throw ParseError("\"n\" must be a positive integer");
  p.n = j.at("n").get<std::size_t>();
  if (j.contains("group_generators")) p.group_generators = matrices_from_json(j.at("group_generators"), p.n, "group_generators");
  if (j.contains("lie_algebra")) p.lie_algebra = matrices_from_json(j.at("lie_algebra"), p.n, "lie_algebra");
  if (j.contains("degree_bounds")) {
    const json& b = j.at("degree_bounds");
    if (!b.is_object()) throw ParseError("\"degree_bounds\" must be an object");
    p.degree_bounds.invariants = bound_from_json(b, "invariants");
    p.degree_bounds.equivariants = bound_from_json(b, "equivariants");
  }
  const Ring xr = p.xring();
  if (j.contains("hilbert_map")) p.hilbert_map = polynomials_from_json(j.at("hilbert_map"), xr);
  if (j.contains("module_generators")) {
    const json& m = j.at("module_generators");
    if (!m.is_array()) throw ParseError("\"module_generators\" must be an array");
    std::vector<PolyVectorField> gens;
    for (const auto& e : m) gens.push_back(vector_field_from_json(e, xr));
    p.module_generators = std::move(gens);
  }
  if (j.contains("named_objects")) {
    const json& objs = j.at("named_objects");
    if (!objs.is_object()) throw ParseError("\"named_objects\" must be an object");
    for (const auto& [name, o] : objs.items()) {
      try {
        if (o.is_object() && o.contains("components"))
          p.named_objects.emplace(name, vector_field_from_json(o, xr));
        else if (o.is_object() && o.contains("degree"))
          p.named_objects.emplace(name, form_from_json(o, xr));
        else
          throw ParseError("expected a vector field (\"components\") or a form (\"degree\")");
      } catch (const ParseError& e) {
        throw ParseError("named object \"" + name + "\": " + e.what());
      }
    }
  }
  return p;
}

json to_json(const ProblemFile& p) {
  json j;
  j["n"] = p.n;
  j["group_generators"] = json::array();
  for (const auto& g : p.group_generators) j["group_generators"].push_back(to_json(g));
  if (!p.lie_algebra.empty()) {
    j["lie_algebra"] = json::array();
    for (const auto& g : p.lie_algebra) j["lie_algebra"].push_back(to_json(g));
  }
  if (p.degree_bounds.invariants || p.degree_bounds.equivariants)
    j["degree_bounds"] = {{"invariants", p.degree_bounds.invariants}, {"equivariants", p.degree_bounds.equivariants}};
  if (p.hilbert_map) j["hilbert_map"] = to_json(*p.hilbert_map);
  if (p.module_generators) {
    j["module_generators"] = json::array();
    for (const auto& X : *p.module_generators) j["module_generators"].push_back(to_json(X));
  }
  if (!p.named_objects.empty()) {
    j["named_objects"] = json::object();
    for (const auto& [name, o] : p.named_objects)
      j["named_objects"][name] = std::visit([](const auto& v) { return to_json(v); }, o);
  }
  return j;
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

ProblemFile load_problem(const std::filesystem::path& path) {
  try {
    return problem_from_json(load_json(path));
  } catch (const ParseError& e) {
    throw ParseError(path.filename().string() + ": " + e.what());
  }
}

FiniteMatrixGroup problem_group(const ProblemFile& p, std::size_t cap) {
  if (p.group_generators.empty()) return FiniteMatrixGroup::closure({Matrix::identity(p.n)}, cap);
  return FiniteMatrixGroup::closure(p.group_generators, cap);
}

LieAlgebraAction problem_lie(const ProblemFile& p) { return {p.n, p.lie_algebra}; }

HilbertMap problem_hilbert(const ProblemFile& p, const FiniteMatrixGroup& G, std::stop_token stop) {
  HilbertMap computed = invariant_generators(G, p.degree_bounds.invariants, stop);
  if (!p.hilbert_map) return computed;
  HilbertMap given = HilbertMap::from_generators(G, *p.hilbert_map, stop);
  if (!same_subalgebra(given, computed))
    throw MathError("hilbert_map does not generate the invariant ring computed from the group");
  return given;
}

EquivariantModule problem_module(const ProblemFile& p, const HilbertMap& H) {
  EquivariantModule computed = equivariant_generators(H, p.degree_bounds.equivariants);
  if (!p.module_generators) return computed;
  EquivariantModule given{*p.module_generators};
  for (const auto& X : given.generators)
    if (!is_invariant(X, H.group())) throw MathError("module generator is not invariant: " + to_string(X));
  if (!spans(given.generators, computed.generators, H) || !spans(computed.generators, given.generators, H))
    throw MathError("module_generators do not generate the computed module of invariant fields");
  return given;
}

OrbitSpace problem_space(const ProblemFile& p, std::size_t cap, std::stop_token stop) {
  FiniteMatrixGroup G = problem_group(p, cap);
  HilbertMap H = problem_hilbert(p, G, stop);
  EquivariantModule M = problem_module(p, H);
  return OrbitSpace(std::move(H), std::move(M), problem_lie(p));
}

}  // namespace orbitcalc
