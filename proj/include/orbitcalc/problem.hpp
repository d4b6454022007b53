#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "orbitcalc/serialize.hpp"

namespace orbitcalc {

using NamedObject = std::variant<PolyVectorField, PolyDiffForm>;

// A problem file: the group, optional Lie algebra, bounds and named objects.
struct ProblemFile {
  std::size_t n = 0;
  std::vector<Matrix> group_generators;
  std::vector<Matrix> lie_algebra;
  struct Bounds {
    int invariants = 0;
    int equivariants = 0;
    friend bool operator==(const Bounds&, const Bounds&) = default;
  } degree_bounds;
  // Optional fixed orderings. When present they must generate the same
  // invariant ring / module as the computed generators.
  std::optional<std::vector<Polynomial>> hilbert_map;
  std::optional<std::vector<PolyVectorField>> module_generators;
  std::map<std::string, NamedObject> named_objects;

  Ring xring() const { return Ring::x(n); }
  const NamedObject& object(const std::string& name) const;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

ProblemFile problem_from_json(const json& j);
json to_json(const ProblemFile& p);
ProblemFile load_problem(const std::filesystem::path& path);
json load_json(const std::filesystem::path& path);

FiniteMatrixGroup problem_group(const ProblemFile& p, std::size_t cap = kDefaultGroupCap);
LieAlgebraAction problem_lie(const ProblemFile& p);

// Hilbert map: the file's override (validated against the computed
// generators) or the computed one.
HilbertMap problem_hilbert(const ProblemFile& p, const FiniteMatrixGroup& G, std::stop_token stop = {});
EquivariantModule problem_module(const ProblemFile& p, const HilbertMap& H);
OrbitSpace problem_space(const ProblemFile& p, std::size_t cap = kDefaultGroupCap, std::stop_token stop = {});

}  // namespace orbitcalc
