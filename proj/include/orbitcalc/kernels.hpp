#pragma once

// Data-parallel kernels. Every kernel has a serial reference in
// `kernels::serial` and an OpenMP version in `kernels::omp`; the two must
// produce identical results (exact arithmetic makes this a strict equality),
// and the tests and benchmarks compare them directly.

#include <cstddef>
#include <exception>
#include <optional>
#include <span>
#include <vector>

#include "orbitcalc/linalg.hpp"
#include "orbitcalc/polynomial.hpp"

namespace orbitcalc::kernels {

// Products below this many term pairs stay serial in the dispatching entry
// points.
inline constexpr std::size_t kParallelMulThreshold = 4096;
inline constexpr std::size_t kParallelRowThreshold = 64;

namespace serial {

// Term list of a*b, grevlex-descending, merged, zeros dropped.
std::vector<Term> multiply(std::span<const Term> a, std::span<const Term> b);

// In-place Gauss-Jordan elimination; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

// (1/count) * sum_i apply(i), summed in index order.
template <class T, class Apply>
T average(std::size_t count, Apply&& apply) {
  T sum = apply(std::size_t{0});
  for (std::size_t i = 1; i < count; ++i) sum += apply(i);
  sum *= Rational(1, static_cast<unsigned long>(count));
  return sum;
}

}  // namespace serial

namespace omp {

std::vector<Term> multiply(std::span<const Term> a, std::span<const Term> b);
std::vector<std::size_t> row_reduce(RationalMatrix& m);

// Each apply(i) runs on its own iteration; the results are summed serially
// in index order so the output does not depend on the thread count.
template <class T, class Apply>
T average(std::size_t count, Apply&& apply) {
  std::vector<std::optional<T>> parts(count);
  std::exception_ptr failure;
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    try {
      parts[static_cast<std::size_t>(i)].emplace(apply(static_cast<std::size_t>(i)));
    } catch (...) {
#pragma omp critical(orbitcalc_average_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  T sum = std::move(*parts[0]);
  for (std::size_t i = 1; i < count; ++i) sum += *parts[i];
  sum *= Rational(1, static_cast<unsigned long>(count));
  return sum;
}

}  // namespace omp

int max_threads();

}  // namespace orbitcalc::kernels
