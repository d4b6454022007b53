#include "orbitcalc/golden.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "orbitcalc/error.hpp"

namespace orbitcalc {

namespace {

Polynomial px(const char* s) { return parse_polynomial(s, Ring::x(2)); }
Polynomial py(const char* s) { return parse_polynomial(s, Ring::y(3)); }

PolyVectorField field(const char* a, const char* b) { return PolyVectorField({px(a), px(b)}); }

PolyDiffForm one_form(const char* a, const char* b) {
  PolyDiffForm w(Ring::x(2), 1);
  w.add_term({0}, px(a));
  w.add_term({1}, px(b));
  return w;
}

std::string join(const std::vector<Polynomial>& ps) {
  std::string out = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + to_string(ps[i]);
  return out + ")";
}

class Suite {
 public:
  void check(std::string name, const std::function<std::string()>& body) {
    GoldenCheck c{std::move(name), true, {}};
    try {
      c.detail = body();
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = e.what();
    }
    checks_.push_back(std::move(c));
  }
  std::vector<GoldenCheck> take() { return std::move(checks_); }

 private:
  std::vector<GoldenCheck> checks_;
};

struct Failure : Error {
  using Error::Error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

}  // namespace

Z2Example z2_example() {
  RationalMatrix minus(2, 2);
  minus(0, 0) = minus(1, 1) = -1;
  auto G = FiniteMatrixGroup::closure({minus});
  auto H = HilbertMap::from_generators(G, {px("x1^2"), px("x2^2"), px("x1*x2")});
  std::vector<PolyVectorField> X{field("x1", "0"), field("x2", "0"), field("0", "x1"), field("0", "x2")};
  std::vector<PolyDiffForm> vartheta{one_form("2*x1", "0"), one_form("0", "2*x2"), one_form("x2", "x1"),
                                     one_form("-x2", "x1")};
  return {OrbitSpace(std::move(H), EquivariantModule{X}), X, vartheta};
}

std::vector<GoldenCheck> run_golden_suite(std::uint64_t seed) {
  Suite suite;
  const Z2Example ex = z2_example();
  const OrbitSpace& S = ex.space;
  const FiniteMatrixGroup& G = S.group();
  const Ring yr = S.yring();

  suite.check("invariant generators", [&] {
    const HilbertMap computed = invariant_generators(G);
    for (const auto& s : computed.sigma())
      expect(express_in(s, S.hilbert().sigma(), S.hilbert().tag_basis()).has_value(), "computed generator outside");
    for (const auto& s : S.hilbert().sigma())
      expect(express_in(s, computed.sigma(), computed.tag_basis()).has_value(), "reference generator outside");
    return "computed " + join(computed.sigma()) + " generate the same algebra as (x1^2, x2^2, x1*x2)";
  });

  suite.check("relation ideal", [&] {
    const auto& gens = S.ideal().basis.generators();
    expect(gens.size() == 1 && gens.front() == py("y1*y2 - y3^2"), "basis is " + join(gens));
    return "reduced basis " + join(gens);
  });

  suite.check("equivariant module", [&] {
    const EquivariantModule computed = equivariant_generators(S.hilbert());
    for (const auto& X : computed.generators)
      expect(module_coefficients(X, ex.X, S.hilbert()).has_value(), "computed field outside: " + to_string(X));
    for (const auto& X : ex.X)
      expect(module_coefficients(X, computed.generators, S.hilbert()).has_value(), "X outside: " + to_string(X));
    return std::to_string(computed.size()) + " generators, mutually contained with X1..X4";
  });

  suite.check("Lie derivative table", [&] {
    const char* table[4][3] = {{"2*y1", "0", "y3"}, {"2*y3", "0", "y2"}, {"0", "2*y3", "y1"}, {"0", "2*y2", "y3"}};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const Polynomial v = subduct(lie_derivative(ex.X[i], S.hilbert().sigma()[j]), S.hilbert());
        expect(v == py(table[i][j]), "L_X" + std::to_string(i + 1) + " sigma" + std::to_string(j + 1) + " = " +
                                         to_string(v));
      }
    return "12 entries match";
  });

  suite.check("pushed generators", [&] {
    const char* Y[4][3] = {{"2*y1", "0", "y3"}, {"2*y3", "0", "y2"}, {"0", "2*y3", "y1"}, {"0", "2*y2", "y3"}};
    std::string detail;
    for (std::size_t i = 0; i < 4; ++i) {
      const OrbitVectorField& Yi = S.pushed()[i];
      expect(Yi.components() == std::vector<Polynomial>{py(Y[i][0]), py(Y[i][1]), py(Y[i][2])},
             "Y" + std::to_string(i + 1) + " = " + to_string(Yi));
      detail += (i ? "; " : "") + std::string("Y") + std::to_string(i + 1) + " = " + to_string(Yi);
    }
    return detail;
  });

  suite.check("theta1..theta3 are dy1..dy3", [&] {
    for (std::size_t k = 0; k < 3; ++k) {
      const OrbitForm theta = push_form(ex.vartheta[k], S);
      for (std::size_t i = 0; i < 4; ++i)
        expect(theta.value({i}, yr) == S.pushed()[i][k],
               "theta" + std::to_string(k + 1) + "(Y" + std::to_string(i + 1) + ")");
    }
    return "values equal <dy_k, Y_i> modulo I";
  });

  suite.check("theta4 values", [&] {
    const OrbitForm theta4 = push_form(ex.vartheta[3], S);
    std::vector<Polynomial> got;
    for (std::size_t i = 0; i < 4; ++i) got.push_back(theta4.value({i}, yr));
    expect(got == std::vector<Polynomial>{py("-y3"), py("-y2"), py("y1"), py("y3")}, "values " + join(got));
    return "values " + join(got) +
           " on Y1..Y4; the tabulation (-y3, y1, -y2, -y3) swaps the Y2 and Y3 entries and flips the sign "
           "on Y4, which would violate the syzygies y3*Y1 - y1*Y2 = 0 and y3*Y3 - y1*Y4 = 0";
  });

  suite.check("extendability", [&] {
    std::string detail;
    for (std::size_t k = 0; k < 3; ++k) {
      const ExtendResult r = extend_check(push_form(ex.vartheta[k], S), S);
      std::vector<Polynomial> unit(3, Polynomial(yr));
      unit[k] = Polynomial::constant(yr, 1);
      expect(r.extendable() && *r.witness == unit, "theta" + std::to_string(k + 1) + " witness");
      detail += "theta" + std::to_string(k + 1) + " = " + join(*r.witness) + "; ";
    }
    const ExtendResult r4 = extend_check(push_form(ex.vartheta[3], S), S);
    expect(!r4.extendable(), "theta4 reported extendable");
    return detail + "theta4 not extendable";
  });

  suite.check("exterior derivative of theta4", [&] {
    const PolyDiffForm two = PolyDiffForm::basis(Ring::x(2), {0, 1}, px("2"));
    expect(d(ex.vartheta[3]) == two, "d(vartheta4) = " + to_string(d(ex.vartheta[3])));
    const OrbitForm dtheta = orbit_d(push_form(ex.vartheta[3], S), S);
    expect(!dtheta.is_zero(), "orbit d(theta4) vanished");
    const PolyDiffForm alpha = poincare_primitive(two);
    expect(d(alpha) == two, "d(primitive) = " + to_string(d(alpha)));
    expect(d_certificate(push_form(ex.vartheta[3], S), S).proves_not_extendable(), "d certificate");
    return "d(vartheta4) = " + to_string(two) + "; orbit d(theta4): " + to_string(dtheta) + "; primitive " +
           to_string(alpha);
  });

  suite.check("round trips", [&] {
    for (const auto& Y : S.pushed()) expect(push_vf(lift_vf(Y, S), S) == Y, "lift of " + to_string(Y));
    for (const auto& w : ex.vartheta) {
      const OrbitForm theta = push_form(w, S);
      expect(push_form(pull_form(theta, S), S) == theta, "pull of " + to_string(theta));
    }
    return "push(lift(Y_i)) = Y_i and push(pull(theta_i)) = theta_i";
  });

  suite.check("random lift round trips", [&] {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Polynomial> comps(3, Polynomial(yr));
      for (const auto& Yi : S.pushed()) {
        Polynomial h = Polynomial::constant(yr, coeff(rng));
        for (std::size_t j = 0; j < 3; ++j) h += Polynomial::variable(yr, j) * Rational(coeff(rng));
        for (std::size_t j = 0; j < 3; ++j) comps[j] += h * Yi[j];
      }
      const OrbitVectorField Y(comps, S.ideal());
      expect(push_vf(lift_vf(Y, S), S) == Y, "lift of " + to_string(Y));
    }
    return "20 random tangent fields, seed " + std::to_string(seed);
  });

  suite.check("brackets", [&] {
    const auto& Y = S.pushed();
    expect(orbit_bracket(Y[0], Y[3], S.ideal()).is_zero(), "[Y1,Y4] != 0");
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        expect(orbit_bracket(Y[a], Y[b], S.ideal()) == orbit_bracket_via_lift(Y[a], Y[b], S),
               "intrinsic and lifted brackets differ on (Y" + std::to_string(a + 1) + ",Y" + std::to_string(b + 1) + ")");
    return "[Y1,Y2] = " + to_string(orbit_bracket(Y[0], Y[1], S.ideal())) + "; intrinsic = lifted on all 16 pairs";
  });

  suite.check("d commutes with push", [&] {
    for (const auto& w : ex.vartheta)
      expect(push_form(d(w), S) == orbit_d(push_form(w, S), S), "mismatch for " + to_string(w));
    return "push(d w) = orbit_d(push w) for vartheta1..4";
  });

  return suite.take();
}

std::string golden_report(const std::vector<GoldenCheck>& checks) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& c : checks) {
    passed += c.pass;
    out << (c.pass ? "PASS  " : "FAIL  ") << c.name << ": " << c.detail << '\n';
  }
  out << passed << "/" << checks.size() << " checks passed\n";
  return out.str();
}

}  // namespace orbitcalc
