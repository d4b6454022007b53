#pragma once

// The Z2 = {I, -I} example on R^2, end to end.

#include <cstdint>
#include <string>
#include <vector>

#include "orbitcalc/quotient.hpp"

namespace orbitcalc {

struct Z2Example {
  // sigma = (x1^2, x2^2, x1*x2); X1..X4 = x1 d1, x2 d1, x1 d2, x2 d2.
  OrbitSpace space;
  std::vector<PolyVectorField> X;
  // 2 x1 dx1, 2 x2 dx2, x1 dx2 + x2 dx1, x1 dx2 - x2 dx1.
  std::vector<PolyDiffForm> vartheta;
};

Z2Example z2_example();

struct GoldenCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

// `seed` drives the randomized lift round trips.
std::vector<GoldenCheck> run_golden_suite(std::uint64_t seed = 0);
// One line per check plus a summary; byte-identical across runs.
std::string golden_report(const std::vector<GoldenCheck>& checks);

}  // namespace orbitcalc
