#include <doctest.h>

#include "oracles.hpp"
#include "orbitcalc/error.hpp"
#include "seed.hpp"

using namespace orbitcalc;
using oracle::px;
using oracle::py;

namespace {

const Polynomial kRelation = py("y3^2 - y1*y2");

GroebnerBasis relation_basis() { return buchberger(std::vector<Polynomial>{kRelation}, MonomialOrder::grevlex()); }

// S-polynomial computed from the definition.
Polynomial s_poly(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const Term a = leading_term(f, order), b = leading_term(g, order);
  const Monomial l = a.mono.lcm(b.mono);
  return Polynomial::monomial(f.ring(), l / a.mono, 1 / a.coeff) * f -
         Polynomial::monomial(g.ring(), l / b.mono, 1 / b.coeff) * g;
}

void check_is_groebner_basis(const GroebnerBasis& gb, const std::vector<Polynomial>& input, int oracle_bound) {
  const auto& G = gb.generators();
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) CHECK(normal_form(s_poly(G[i], G[j], gb.order()), gb).is_zero());
  for (const auto& f : input) CHECK(normal_form(f, gb).is_zero());
  for (const auto& g : G) CHECK(oracle::ideal_member(g, input, oracle_bound));
  if (gb.reduced()) {
    for (std::size_t i = 0; i < G.size(); ++i) {
      CHECK(leading_term(G[i], gb.order()).coeff == 1);
      for (std::size_t j = 0; j < G.size(); ++j) {
        if (i == j) continue;
        for (const auto& t : G[j].terms()) CHECK_FALSE(gb.leading_monomial(i).divides(t.mono));
      }
    }
  }
}

std::vector<Polynomial> random_ideal(oracle::Random& rnd, Ring ring, int count, int degree) {
  std::vector<Polynomial> gens;
  while (static_cast<int>(gens.size()) < count) {
    Polynomial g = rnd.polynomial(ring, degree, 3);
    if (!g.is_zero() && !g.is_constant()) gens.push_back(g);
  }
  return gens;
}

}  // namespace

TEST_CASE("buchberger examples") {
  const GroebnerBasis I = relation_basis();
  REQUIRE(I.generators().size() == 1);
  CHECK(I.generators().front() == -kRelation);
  CHECK(I.reduced());
  CHECK(buchberger(std::vector<Polynomial>{}, MonomialOrder::grevlex(), Ring::x(2)).is_zero_ideal());
  CHECK(buchberger(std::vector<Polynomial>{px("0"), px("0")}, MonomialOrder::grevlex(), Ring::x(2)).is_zero_ideal());
  const GroebnerBasis B = buchberger(std::vector<Polynomial>{px("x1"), px("x1^2 + x2")}, MonomialOrder::grevlex());
  CHECK(B.generators() == std::vector<Polynomial>{px("x2"), px("x1")});
  CHECK(oracle::ideal_member(px("x2"), {px("x1"), px("x1^2 + x2")}, 2));
  CHECK(buchberger(std::vector<Polynomial>{px("x1 - 1"), px("x1")}, MonomialOrder::grevlex()).is_unit_ideal());
}

TEST_CASE("buchberger output is a reduced basis of the same ideal, and idempotent") {
  oracle::Random rnd(test_seed() + 20);
  const Ring r = Ring::x(3);
  for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(1)}) {
    for (int trial = 0; trial < 15; ++trial) {
      const auto gens = random_ideal(rnd, r, rnd.integer(1, 3), 2);
      const GroebnerBasis gb = buchberger(gens, order, r);
      check_is_groebner_basis(gb, gens, 6);
      CHECK(buchberger(gb.generators(), order, r) == gb);
    }
  }
}

TEST_CASE("normal forms") {
  const GroebnerBasis I = relation_basis();
  const std::vector<Polynomial> sigma{px("x1^2"), px("x2^2"), px("x1*x2")};
  CHECK(normal_form(kRelation, I).is_zero());
  CHECK(normal_form(py("y1"), I) == py("y1"));
  // Under grevlex y1*y2 leads, so y3^2 is already reduced and y1*y2 is not.
  CHECK(normal_form(py("y3^2"), I) == py("y3^2"));
  CHECK(normal_form(py("y1*y2"), I) == py("y3^2"));
  for (const char* p : {"y3^2", "y1*y2", "y1^2*y2^2 + y3", "y1*y2*y3 - 4"})
    CHECK(substitute(normal_form(py(p), I), sigma) == substitute(py(p), sigma));
}

TEST_CASE("normal form does not depend on the division path") {
  oracle::Random rnd(test_seed() + 21);
  const Ring r = Ring::x(3);
  const GroebnerBasis gb =
      buchberger(std::vector<Polynomial>{px("x1^2 - x2*x3", 3), px("x2^2 - x1*x3", 3), px("x1*x2 - x3^2 + x1", 3)},
                 MonomialOrder::grevlex());
  REQUIRE(gb.generators().size() >= 3);
  for (int trial = 0; trial < 500; ++trial) {
    const Polynomial p = rnd.polynomial(r, 5, 6);
    const Polynomial last = normal_form(p, gb, [](std::span<const std::size_t> c) { return c.size() - 1; });
    const Polynomial random = normal_form(p, gb, [&](std::span<const std::size_t> c) {
      return static_cast<std::size_t>(rnd.integer(0, static_cast<int>(c.size()) - 1));
    });
    CHECK(last == normal_form(p, gb));
    CHECK(random == normal_form(p, gb));
  }
}

TEST_CASE("normal form is multiplicative modulo the ideal, linear and idempotent") {
  oracle::Random rnd(test_seed() + 22);
  const GroebnerBasis I = relation_basis();
  for (int trial = 0; trial < 500; ++trial) {
    const Polynomial p = rnd.polynomial(Ring::y(3), 4), q = rnd.polynomial(Ring::y(3), 4);
    const Polynomial np = normal_form(p, I), nq = normal_form(q, I);
    CHECK(normal_form(p * q, I) == normal_form(np * nq, I));
    CHECK(normal_form(p + q, I) == np + nq);
    CHECK(normal_form(np, I) == np);
    CHECK(oracle::ideal_member(p - np, {kRelation}, 4));
  }
}

TEST_CASE("ideal membership agrees with the Macaulay oracle") {
  oracle::Random rnd(test_seed() + 23);
  const Ring r = Ring::x(2);
  for (int trial = 0; trial < 40; ++trial) {
    const auto gens = random_ideal(rnd, r, 2, 2);
    const GroebnerBasis gb = buchberger(gens, MonomialOrder::grevlex(), r);
    Polynomial member(r);
    for (const auto& g : gens) member += rnd.polynomial(r, 2, 2) * g;
    CHECK(ideal_member(member, gb));
    const Polynomial p = rnd.polynomial(r, 3, 3);
    if (ideal_member(p, gb)) CHECK(oracle::ideal_member(p, gens, 6));
    CHECK(oracle::ideal_member(p - normal_form(p, gb), gens, 6));
  }
}

TEST_CASE("elimination examples") {
  const Ring c32 = Ring::combined(2, 3);
  auto pc = [&](const char* s) { return parse_polynomial(s, c32); };
  const GroebnerBasis e =
      eliminate(std::vector<Polynomial>{pc("y1 - x1^2"), pc("y2 - x2^2"), pc("y3 - x1*x2")}, c32);
  CHECK(e.generators() == std::vector<Polynomial>{py("y1*y2 - y3^2")});
  const Ring c22 = Ring::combined(2, 2);
  auto pd = [&](const char* s) { return parse_polynomial(s, c22); };
  CHECK(eliminate(std::vector<Polynomial>{pd("y1 - x1"), pd("y2 - x2")}, c22).is_zero_ideal());
  CHECK(eliminate(std::vector<Polynomial>{pd("y1 - x1 - x2"), pd("y2 - x1*x2")}, c22).is_zero_ideal());
  CHECK(oracle::relation_dimension({px("x1 + x2"), px("x1*x2")}, 6) == 0);
}

TEST_CASE("elimination agrees with the substitution oracle") {
  oracle::Random rnd(test_seed() + 24);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rnd.integer(1, 3));
    const std::size_t l = static_cast<std::size_t>(rnd.integer(1, 3));
    std::vector<Polynomial> sigma;
    while (sigma.size() < l) {
      Polynomial s = rnd.polynomial(Ring::x(n), 2, 2);
      if (!s.is_zero() && !s.is_constant()) sigma.push_back(s);
    }
    const Ring comb = Ring::combined(n, l);
    std::vector<Polynomial> gens;
    for (std::size_t j = 0; j < l; ++j)
      gens.push_back(Polynomial::variable(comb, n + j) - embed(sigma[j], comb));
    const GroebnerBasis e = eliminate(gens, comb);
    for (const auto& g : e.generators()) CHECK(substitute(g, sigma).is_zero());
    for (const auto& rel : oracle::relations_up_to(sigma, 4)) CHECK(normal_form(rel, e).is_zero());
  }
}

TEST_CASE("module membership") {
  const GroebnerBasis I = relation_basis();
  const Ring y = Ring::y(3);
  const Polynomial zero(y), one = Polynomial::constant(y, 1);
  SubmoduleProblem p{2, {{py("y1"), py("y2")}, {py("y3"), zero}}, I};
  auto r = module_solve({py("y1"), py("y2")}, p);
  REQUIRE(std::holds_alternative<ModuleWitness>(r));
  CHECK(std::get<ModuleWitness>(r).coefficients == std::vector<Polynomial>{one, zero});

  auto padded = module_solve({kRelation, zero}, p);
  REQUIRE(std::holds_alternative<ModuleWitness>(padded));
  CHECK(std::get<ModuleWitness>(padded).coefficients == std::vector<Polynomial>{zero, zero});

  CHECK(std::holds_alternative<NotMember>(module_solve({one, zero}, p)));
  CHECK_THROWS_AS(module_solve({one}, p), MathError);

  // The extension system for theta4 on the Z2 orbit space.
  SubmoduleProblem ext{4,
                       {{py("2*y1"), py("2*y3"), zero, zero},
                        {zero, zero, py("2*y3"), py("2*y2")},
                        {py("y3"), py("y2"), py("y1"), py("y3")}},
                       I};
  auto nm = module_solve({py("-y3"), py("-y2"), py("y1"), py("y3")}, ext);
  REQUIRE(std::holds_alternative<NotMember>(nm));
  bool nonzero = false;
  for (const auto& c : std::get<NotMember>(nm).normal_form) nonzero = nonzero || !c.is_zero();
  CHECK(nonzero);
}

TEST_CASE("module witnesses reconstruct the target") {
  oracle::Random rnd(test_seed() + 25);
  const GroebnerBasis I = relation_basis();
  const Ring y = Ring::y(3);
  for (int trial = 0; trial < 40; ++trial) {
    SubmoduleProblem p{2, {}, I};
    for (int c = 0; c < 2; ++c) p.columns.push_back({rnd.polynomial(y, 1, 2), rnd.polynomial(y, 1, 2)});
    std::vector<Polynomial> target(2, Polynomial(y));
    std::vector<Polynomial> h{rnd.polynomial(y, 1, 2), rnd.polynomial(y, 1, 2)};
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t i = 0; i < 2; ++i) target[i] += h[k] * p.columns[k][i];
    target[0] += rnd.polynomial(y, 1, 2) * kRelation;
    auto r = module_solve(target, p);
    REQUIRE(std::holds_alternative<ModuleWitness>(r));
    const auto& w = std::get<ModuleWitness>(r);
    for (std::size_t i = 0; i < 2; ++i) {
      Polynomial s(y);
      for (std::size_t k = 0; k < 2; ++k) s += w.coefficients[k] * p.columns[k][i];
      CHECK(ideal_member(target[i] - s, I));
      CHECK(target[i] - s == w.ideal_part[i]);
    }
  }
}

TEST_CASE("syzygies") {
  const Ring y = Ring::y(3);
  const GroebnerBasis zero_ideal(y, MonomialOrder::grevlex());
  const Polynomial one = Polynomial::constant(y, 1), zero(y);
  auto dup = syzygies(std::vector<PolyVector>{{one, zero}, {one, zero}}, zero_ideal);
  REQUIRE(dup.size() == 1);
  CHECK(dup[0][0] == -dup[0][1]);
  CHECK(dup[0][0].is_constant());
  CHECK(syzygies(std::vector<PolyVector>{{one, zero}}, zero_ideal).empty());

  const GroebnerBasis I = relation_basis();
  const std::vector<PolyVector> cols{{py("2*y1"), zero, py("y3")},
                                     {py("2*y3"), zero, py("y2")},
                                     {zero, py("2*y3"), py("y1")},
                                     {zero, py("2*y2"), py("y3")}};
  const auto syz = syzygies(cols, I);
  CHECK_FALSE(syz.empty());
  for (const auto& c : syz)
    for (std::size_t j = 0; j < 3; ++j) {
      Polynomial s(y);
      for (std::size_t i = 0; i < 4; ++i) s += c[i] * cols[i][j];
      CHECK(normal_form(s, I).is_zero());
    }
  // y3*Y1 - y1*Y2 lies in the syzygy module.
  SubmoduleProblem sp{4, syz, I};
  CHECK(std::holds_alternative<ModuleWitness>(module_solve({py("y3"), py("-y1"), zero, zero}, sp)));
  CHECK(std::holds_alternative<ModuleWitness>(module_solve({zero, zero, py("y3"), py("-y1")}, sp)));
}

TEST_CASE("cancellation is polled") {
  std::stop_source src;
  src.request_stop();
  std::vector<Polynomial> gens{px("x1^2 - x2", 3), px("x2^2 - x3", 3), px("x3^2 - x1", 3)};
  CHECK_THROWS_AS(buchberger(gens, MonomialOrder::grevlex(), Ring::x(3), src.get_token()), Cancelled);
}
