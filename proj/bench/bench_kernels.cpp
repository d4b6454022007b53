// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "orbitcalc/group_action.hpp"
#include "orbitcalc/kernels.hpp"

using namespace orbitcalc;

namespace {

Polynomial dense_polynomial(std::size_t nvars, int degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-50, 50);
  std::vector<Term> terms;
  for (int d = 0; d <= degree; ++d)
    for (const auto& m : monomials_of_degree(nvars, d)) terms.push_back({m, Rational(coeff(rng), 7)});
  return Polynomial::from_terms(Ring::x(nvars), std::move(terms));
}

RationalMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

// Signed permutations of three coordinates, order 48.
const FiniteMatrixGroup& hyperoctahedral() {
  static const FiniteMatrixGroup G = [] {
    RationalMatrix cycle(3, 3), swap(3, 3), flip = RationalMatrix::identity(3);
    cycle(1, 0) = cycle(2, 1) = cycle(0, 2) = 1;
    swap(0, 1) = swap(1, 0) = swap(2, 2) = 1;
    flip(0, 0) = -1;
    return FiniteMatrixGroup::closure({cycle, swap, flip});
  }();
  return G;
}

template <bool Parallel>
void BM_multiply(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const Polynomial a = dense_polynomial(3, degree, 1), b = dense_polynomial(3, degree, 2);
  for (auto _ : state) {
    auto r = Parallel ? kernels::omp::multiply(a.terms(), b.terms()) : kernels::serial::multiply(a.terms(), b.terms());
    benchmark::DoNotOptimize(r);
  }
  state.counters["terms"] = static_cast<double>(a.terms().size());
}

template <bool Parallel>
void BM_row_reduce(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RationalMatrix m = random_matrix(n, n + 8, 3);
  for (auto _ : state) {
    RationalMatrix work = m;
    auto pivots = Parallel ? kernels::omp::row_reduce(work) : kernels::serial::row_reduce(work);
    benchmark::DoNotOptimize(pivots);
  }
}

template <bool Parallel>
void BM_reynolds(benchmark::State& state) {
  const auto& G = hyperoctahedral();
  const Polynomial p = dense_polynomial(3, static_cast<int>(state.range(0)), 4);
  auto apply = [&](std::size_t i) { return act_poly_by_inverse(G.inverse_of(i), p); };
  for (auto _ : state) {
    Polynomial r = Parallel ? kernels::omp::average<Polynomial>(G.order(), apply)
                            : kernels::serial::average<Polynomial>(G.order(), apply);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(BM_multiply<false>)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multiply<true>)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_row_reduce<false>)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_row_reduce<true>)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_reynolds<false>)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reynolds<true>)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
