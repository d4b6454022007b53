#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "orbitcalc/golden.hpp"
#include "orbitcalc/problem.hpp"
#include "orbitcalc/serialize.hpp"

using namespace orbitcalc;
using oracle::px;
using oracle::py;

namespace {

struct Result {
  int code;
  std::string out, err;
};

std::string fixture(const std::string& name) { return std::string(ORBITCALC_FIXTURES) + "/" + name; }

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Result z2(std::vector<std::string> args) {
  args.insert(args.begin() + 1, {"-i", fixture("z2.json")});
  return run(std::move(args));
}

json z2_json(std::vector<std::string> args) {
  args.insert(args.end(), {"--format", "json"});
  const Result r = z2(std::move(args));
  REQUIRE(r.code <= cli::kNegative);
  return json::parse(r.out);
}

const Z2Example& ex() {
  static const Z2Example e = z2_example();
  return e;
}

}  // namespace

TEST_CASE("invariants, relations and equivariants") {
  CHECK(z2({"invariants"}).out == "x1^2\nx2^2\nx1*x2\n");
  CHECK(polynomials_from_json(z2_json({"invariants"})["invariants"], Ring::x(2)) == ex().space.hilbert().sigma());
  const Result rel = z2({"relations"});
  CHECK(rel.code == cli::kOk);
  CHECK(rel.out == "y1*y2 - y3^2\n");
  CHECK(run({"relations", "-i", fixture("trivial.json")}).out == "(zero ideal)\n");
  CHECK(polynomials_from_json(z2_json({"relations"})["relations"], Ring::y(3)) ==
        ex().space.ideal().basis.generators());
  const json eq = z2_json({"equivariants"});
  REQUIRE(eq["generators"].size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(vector_field_from_json(eq["generators"][i], Ring::x(2)) == ex().space.module().generators[i]);
}

TEST_CASE("vector field commands") {
  const Result p = z2({"push-vf", "X1"});
  CHECK(p.code == cli::kOk);
  CHECK(p.out == "(2*y1)*d/dy1 + (y3)*d/dy3\n");
  const json pj = z2_json({"push-vf", "x2,x1"});
  const auto comps = polynomials_from_json(pj["orbit_vector_field"]["components"], Ring::y(3));
  CHECK(OrbitVectorField(comps, ex().space.ideal()) == push_vf(PolyVectorField({px("x2"), px("x1")}), ex().space));

  const json lj = z2_json({"lift-vf", "2*y1,0,y3"});
  const PolyVectorField X = vector_field_from_json(lj["vector_field"], Ring::x(2));
  CHECK(push_vf(X, ex().space) == ex().space.pushed()[0]);
  CHECK(z2({"lift-vf", "X3"}).code == cli::kOk);

  CHECK(z2({"bracket", "X1", "X2"}).out == "(2*y3)*d/dy1 + (y2)*d/dy3\n");
  CHECK(z2({"bracket", "X1", "X4"}).out == "0\n");
  const json bj = z2_json({"bracket", "X2", "X3"});
  const auto& Y = ex().space.pushed();
  const auto bc = polynomials_from_json(bj["orbit_vector_field"]["components"], Ring::y(3));
  CHECK(OrbitVectorField(bc, ex().space.ideal()) == orbit_bracket(Y[1], Y[2], ex().space.ideal()));
}

TEST_CASE("form commands") {
  const json f = z2_json({"push-form", "vartheta4"});
  const OrbitForm theta4 = orbit_form_from_json(f["orbit_form"], Ring::y(3));
  CHECK(theta4 == push_form(ex().vartheta[3], ex().space));

  const json pull = z2_json({"pull-form", fixture("theta4.json")});
  CHECK(form_from_json(pull["form"], Ring::x(2)) == ex().vartheta[3]);
  CHECK(z2({"pull-form", fixture("theta4.json")}).out == "(-x2)*dx1 + (x1)*dx2\n");

  const json dj = z2_json({"d", "vartheta4"});
  CHECK(form_from_json(dj["form"], Ring::x(2)) == d(ex().vartheta[3]));
  const json od = z2_json({"orbit-d", fixture("theta4.json")});
  CHECK(orbit_form_from_json(od["orbit_form"], Ring::y(3)) == orbit_d(theta4, ex().space));

  const Result bad = z2({"orbit-d", fixture("theta4_transposed.json")});
  CHECK(bad.code == cli::kInputError);
  CHECK(bad.err.find("syzygy") != std::string::npos);
}

TEST_CASE("yes/no commands use exit code 1 for a negative answer") {
  const std::string so2 = fixture("so2_semibasic.json");
  const Result nb = run({"semibasic", "-i", so2, "r2_vartheta4"});
  CHECK(nb.code == cli::kNegative);
  CHECK(nb.out == "NOT SEMI-BASIC: generator 1 contracts to x1^4 + 2*x1^2*x2^2 + x2^4\n");
  const Result sb = run({"semibasic", "-i", so2, "radial"});
  CHECK(sb.code == cli::kOk);
  CHECK(sb.out == "SEMI-BASIC\n");

  CHECK(z2({"invariant-check", "vartheta4"}).out == "INVARIANT\n");
  CHECK(z2({"invariant-check", "X1"}).code == cli::kOk);
  CHECK(z2({"invariant-check", "x1dx2"}).out == "INVARIANT\n");
  const Result ni = run({"invariant-check", "-i", fixture("s2.json"), "x1d1"});
  CHECK(ni.out == "NOT INVARIANT\n");
  CHECK(ni.code == cli::kNegative);

  const Result pc = z2({"poincare", "area"});
  CHECK(pc.code == cli::kOk);
  CHECK(d(form_from_json(z2_json({"poincare", "area"})["form"], Ring::x(2))) ==
        PolyDiffForm::basis(Ring::x(2), {0, 1}, px("2")));
  const Result nc = z2({"poincare", "x1dx2"});
  CHECK(nc.code == cli::kNegative);
  CHECK(nc.out == "NOT CLOSED: d = (1)*dx1^dx2\n");

  const Result e1 = z2({"extend-check", fixture("theta1.json")});
  CHECK(e1.code == cli::kOk);
  CHECK(e1.out.rfind("EXTENDABLE\nA = ", 0) == 0);
  const json e1j = z2_json({"extend-check", fixture("theta1.json")});
  CHECK(polynomials_from_json(e1j["witness"], Ring::y(3)) == std::vector<Polynomial>{py("1"), py("0"), py("0")});
  const Result e4 = z2({"extend-check", fixture("theta4.json")});
  CHECK(e4.code == cli::kNegative);
  CHECK(e4.out.rfind("NOT EXTENDABLE", 0) == 0);
  CHECK_FALSE(z2_json({"extend-check", fixture("theta4.json")})["extendable"].get<bool>());
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"nonsense"}).code == cli::kInputError);
  CHECK(run({"invariants"}).code == cli::kInputError);
  CHECK(run({"invariants", "-i", fixture("missing.json")}).code == cli::kInputError);
  CHECK(z2({"push-vf", "nosuchfield"}).code == cli::kInputError);
  CHECK(z2({"push-vf", "1,0"}).code == cli::kInputError);
  CHECK(z2({"push-vf", "vartheta4"}).code == cli::kInputError);
  CHECK(z2({"invariants", "--format", "xml"}).code == cli::kInputError);
  CHECK(z2({"bracket", "X1"}).code == cli::kInputError);
  const Result help = run({"--help"});
  CHECK(help.code == cli::kOk);
  CHECK(help.out.find("verify-golden") != std::string::npos);

  const auto dir = std::filesystem::temp_directory_path() / "orbitcalc_cli_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "broken.json") << "{\"n\": 2, \"group_generators\": [[1,";
  CHECK(run({"invariants", "-i", (dir / "broken.json").string()}).code == cli::kInputError);
  std::ofstream(dir / "badpoly.json") << R"({"n": 2, "group_generators": [], "named_objects": {"f": {"components": ["x1^", "0"]}}})";
  CHECK(run({"invariants", "-i", (dir / "badpoly.json").string()}).code == cli::kInputError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("golden verification is deterministic") {
  const Result a = run({"verify-golden"});
  const Result b = run({"verify-golden", "--seed", "0"});
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);
  CHECK(a.out.find("FAIL") == std::string::npos);
  const Result j = run({"verify-golden", "--format", "json"});
  CHECK(json::parse(j.out)["passed"].get<bool>());
}

TEST_CASE("problem files round trip") {
  for (const char* name : {"z2.json", "s2.json", "trivial.json", "so2_semibasic.json"}) {
    const ProblemFile p = load_problem(fixture(name));
    CHECK(problem_from_json(to_json(p)) == p);
    CHECK(problem_from_json(json::parse(to_json(p).dump())) == p);
  }
}

TEST_CASE("the installed binary behaves like the library entry point") {
  const std::string cmd = std::string(ORBITCALC_BIN) + " extend-check -i " + fixture("z2.json") + " " +
                          fixture("theta4.json") + " > /dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == cli::kNegative);
}
