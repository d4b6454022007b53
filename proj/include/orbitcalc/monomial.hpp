#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace orbitcalc {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);
  Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  const std::vector<int>& exponents() const { return exps_; }

  void set(std::size_t i, int e);

  Monomial operator*(const Monomial& other) const;
  // Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

// Total monomial orders. Variables are ranked x1 > x2 > ... > xn.
// Block orders compare the first `block` variables by grevlex and break ties
// with grevlex on the rest, which makes them elimination orders for the
// first block.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder block(std::size_t first_block) {
    return MonomialOrder(Kind::block, first_block);
  }

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }

  // -1, 0, 1 as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  MonomialOrder(Kind k, std::size_t b) : kind_(k), block_(b) {}
  Kind kind_;
  std::size_t block_;
};

int compare_grevlex(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// All exponent vectors of total degree exactly d in nvars variables, in
// grevlex-descending order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d);

}  // namespace orbitcalc
