#include "orbitcalc/kernels.hpp"

#include <omp.h>

#include <algorithm>

namespace orbitcalc::kernels {

namespace {

std::vector<Term> combine(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare_grevlex(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

// Normalises row `r` on column `c` and clears column `c` from one other row.
void eliminate_row(RationalMatrix& m, std::size_t pivot_row, std::size_t target, std::size_t col) {
  const Rational f = m(target, col);
  if (f == 0) return;
  auto src = m.row(pivot_row);
  auto dst = m.row(target);
  for (std::size_t j = col; j < m.cols(); ++j)
    if (src[j] != 0) dst[j] -= f * src[j];
}

// Finds and installs the next pivot; returns false when column `col` has no
// nonzero entry at or below `row`.
bool install_pivot(RationalMatrix& m, std::size_t row, std::size_t col) {
  std::size_t p = row;
  while (p < m.rows() && m(p, col) == 0) ++p;
  if (p == m.rows()) return false;
  if (p != row) {
    auto a = m.row(p);
    auto b = m.row(row);
    std::swap_ranges(a.begin(), a.end(), b.begin());
  }
  const Rational inv = 1 / m(row, col);
  for (auto& v : m.row(row)) v *= inv;
  return true;
}

}  // namespace

namespace serial {

std::vector<Term> multiply(std::span<const Term> a, std::span<const Term> b) {
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a)
    for (const auto& t : b) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return combine(std::move(out));
}

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    if (!install_pivot(m, row, col)) continue;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != row) eliminate_row(m, row, r, col);
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace serial

namespace omp {

std::vector<Term> multiply(std::span<const Term> a, std::span<const Term> b) {
  const long n = static_cast<long>(a.size());
  std::vector<std::vector<Term>> partial(a.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) {
    auto& dst = partial[static_cast<std::size_t>(i)];
    dst.reserve(b.size());
    const Term& s = a[static_cast<std::size_t>(i)];
    for (const auto& t : b) dst.push_back({s.mono * t.mono, s.coeff * t.coeff});
  }
  std::vector<Term> all;
  all.reserve(a.size() * b.size());
  for (auto& part : partial) std::move(part.begin(), part.end(), std::back_inserter(all));
  return combine(std::move(all));
}

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  const long rows = static_cast<long>(m.rows());
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    if (!install_pivot(m, row, col)) continue;
#pragma omp parallel for schedule(dynamic, 4)
    for (long r = 0; r < rows; ++r)
      if (static_cast<std::size_t>(r) != row) eliminate_row(m, row, static_cast<std::size_t>(r), col);
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace omp

int max_threads() { return omp_get_max_threads(); }

}  // namespace orbitcalc::kernels
