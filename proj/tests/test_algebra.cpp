#include <doctest.h>

#include "oracles.hpp"
#include "orbitcalc/error.hpp"
#include "seed.hpp"

using namespace orbitcalc;
using oracle::px;
using oracle::py;

TEST_CASE("rationals stay reduced with positive denominators") {
  const Rational a = parse_rational("-6/4");
  CHECK(a.get_num() == -3);
  CHECK(a.get_den() == 2);
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(to_string(parse_rational("−1/2")) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  const Rational big = parse_rational("123456789012345678901234567890/3");
  CHECK(to_string(big * big) == "1693508750359870750055039062504022087500211688875002116900");
}

TEST_CASE("grevlex ordering") {
  const auto grevlex = MonomialOrder::grevlex();
  CHECK(grevlex.greater(Monomial{1, 1, 0}, Monomial{0, 0, 2}));
  CHECK(grevlex.greater(Monomial{2, 0}, Monomial{1, 1}));
  CHECK(grevlex.greater(Monomial{0, 0, 3}, Monomial{2, 0, 0}) );
  CHECK(grevlex.greater(Monomial{1, 0, 1}, Monomial{0, 2, 0}) == false);
  const auto lex = MonomialOrder::lex();
  CHECK(lex.greater(Monomial{1, 0, 0}, Monomial{0, 5, 5}));
  const auto block = MonomialOrder::block(2);
  CHECK(block.greater(Monomial{1, 0, 0}, Monomial{0, 0, 9}));
  CHECK(block.greater(Monomial{0, 0, 2}, Monomial{0, 0, 1}));
}

TEST_CASE("monomial orders are total, multiplicative and well founded") {
  oracle::Random rnd(test_seed() + 11);
  for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(1)}) {
    for (int trial = 0; trial < 500; ++trial) {
      auto mono = [&] { return Monomial{rnd.integer(0, 3), rnd.integer(0, 3), rnd.integer(0, 3)}; };
      const Monomial a = mono(), b = mono(), c = mono();
      const int ab = order.compare(a, b);
      CHECK(ab == -order.compare(b, a));
      CHECK((ab == 0) == (a == b));
      CHECK(order.compare(a * c, b * c) == ab);
      CHECK(order.compare(a, Monomial(3)) >= 0);
    }
  }
}

TEST_CASE("polynomial grammar round trip") {
  const Polynomial p = px("2*x1^2*x2 - 1/3*x2^3");
  CHECK(to_string(p) == "2*x1^2*x2 - 1/3*x2^3");
  CHECK(px(" x2 + x1 ") == px("x1+x2"));
  CHECK(to_string(px("x1 - x1")) == "0");
  CHECK(to_string(px("-x1*x1")) == "-x1^2");
  CHECK(to_string(py("y3^2 - y1*y2")) == "-y1*y2 + y3^2");
  CHECK_THROWS_AS(px("x3"), ParseError);
  CHECK_THROWS_AS(px("y1"), ParseError);
  CHECK_THROWS_AS(px("x1^"), ParseError);
  CHECK_THROWS_AS(px("2**x1"), ParseError);
  oracle::Random rnd(test_seed() + 1);
  for (int trial = 0; trial < 500; ++trial) {
    const Polynomial q = rnd.polynomial(Ring::x(3), 5);
    CHECK(parse_polynomial(to_string(q), Ring::x(3)) == q);
  }
}

TEST_CASE("products from the example") {
  CHECK(px("x1^2") * px("x2^2") == px("x1^2*x2^2"));
  CHECK(px("x1*x2") * px("x1*x2") == px("x1^2") * px("x2^2"));
  CHECK((px("x1 + 3") * Polynomial(Ring::x(2))).is_zero());
  CHECK_THROWS_WITH_AS(px("x1") * py("y1"), doctest::Contains("incompatible rings"), MathError);
  CHECK_THROWS_WITH_AS(px("x1") + py("y1"), doctest::Contains("incompatible rings"), MathError);
}

TEST_CASE("product agrees with naive expansion and evaluation") {
  oracle::Random rnd(test_seed() + 2);
  const Ring r = Ring::x(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const Polynomial p = rnd.polynomial(r, 6), q = rnd.polynomial(r, 6), s = rnd.polynomial(r, 6);
    CHECK(oracle::naive(p * q) == oracle::mul(oracle::naive(p), oracle::naive(q)));
    CHECK((p * q) * s == p * (q * s));
    CHECK(p * (q + s) == p * q + p * s);
    CHECK(p * q == q * p);
    const auto pt = rnd.point(3);
    CHECK(oracle::eval(p * q - s, pt) == oracle::eval(p, pt) * oracle::eval(q, pt) - oracle::eval(s, pt));
  }
}

TEST_CASE("substitution") {
  const std::vector<Polynomial> sigma{px("x1^2"), px("x2^2"), px("x1*x2")};
  CHECK(substitute(py("y3^2 - y1*y2"), sigma).is_zero());
  CHECK(substitute(py("y1"), sigma) == px("x1^2"));
  CHECK(substitute(Polynomial::constant(Ring::y(3), 5), sigma) == Polynomial::constant(Ring::x(2), 5));
  CHECK_THROWS_AS(substitute(py("y1"), std::vector<Polynomial>{px("x1")}), MathError);

  oracle::Random rnd(test_seed() + 3);
  for (int trial = 0; trial < 500; ++trial) {
    const Polynomial p = rnd.polynomial(Ring::y(3), 3), q = rnd.polynomial(Ring::y(3), 3);
    std::vector<Polynomial> vals{rnd.polynomial(Ring::x(2), 2), rnd.polynomial(Ring::x(2), 2),
                                 rnd.polynomial(Ring::x(2), 2)};
    CHECK(substitute(p * q, vals) == substitute(p, vals) * substitute(q, vals));
    std::vector<oracle::Naive> nv;
    for (const auto& v : vals) nv.push_back(oracle::naive(v));
    CHECK(oracle::naive(substitute(p, vals)) == oracle::compose(oracle::naive(p), nv, 2));
  }
}

TEST_CASE("partial derivatives") {
  CHECK(partial_derivative(px("x1^2"), 0) == px("2*x1"));
  CHECK(partial_derivative(px("x1*x2"), 1) == px("x1"));
  CHECK(partial_derivative(px("7"), 0).is_zero());
  CHECK_THROWS_AS(partial_derivative(px("x1"), 2), MathError);
  oracle::Random rnd(test_seed() + 4);
  for (int trial = 0; trial < 500; ++trial) {
    const Polynomial p = rnd.polynomial(Ring::x(3), 5), q = rnd.polynomial(Ring::x(3), 5);
    const std::size_t i = static_cast<std::size_t>(rnd.integer(0, 2));
    CHECK(partial_derivative(p * q, i) == partial_derivative(p, i) * q + p * partial_derivative(q, i));
  }
}

TEST_CASE("primitive rescaling") {
  CHECK(px("1/2*x1^2 + 1/2*x2^2").primitive() == px("x1^2 + x2^2"));
  CHECK(px("-4*x1 + 6*x2").primitive() == px("2*x1 - 3*x2"));
}
