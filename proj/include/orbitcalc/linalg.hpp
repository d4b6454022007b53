#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "orbitcalc/rational.hpp"

namespace orbitcalc {

// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  RationalMatrix operator*(const RationalMatrix& other) const;
  std::vector<Rational> apply(std::span<const Rational> v) const;
  bool is_identity() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

// Reduced row echelon form (pivots normalised to 1).
RowEchelon rref(RationalMatrix m);

// Inverse of a square matrix, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);

// One solution of A v = b with every free variable set to zero, or nullopt
// if the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, std::span<const Rational> b);

// Basis of { v : A v = 0 }, one vector per free column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a);

}  // namespace orbitcalc
