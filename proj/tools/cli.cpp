#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <functional>
#include <optional>

#include "orbitcalc/error.hpp"
#include "orbitcalc/golden.hpp"
#include "orbitcalc/problem.hpp"

namespace orbitcalc::cli {

namespace {

struct Options {
  std::string input;
  std::string format = "text";
  int degree_bound = -1;
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultGroupCap;
  std::vector<std::string> args;
};

class Context {
 public:
  explicit Context(const Options& opt) : opt_(opt) {}

  const Options& options() const { return opt_; }
  bool json_output() const { return opt_.format == "json"; }

  const ProblemFile& problem() {
    if (!problem_) {
      if (opt_.input.empty()) throw ParseError("this command needs a problem file (-i <file>)");
      problem_ = load_problem(opt_.input);
      if (opt_.degree_bound >= 0) {
        problem_->degree_bounds.invariants = opt_.degree_bound;
        problem_->degree_bounds.equivariants = opt_.degree_bound;
      }
    }
    return *problem_;
  }
  const OrbitSpace& space() {
    if (!space_) space_.emplace(problem_space(problem(), opt_.cap));
    return *space_;
  }
  FiniteMatrixGroup group() { return problem_group(problem(), opt_.cap); }

  const std::string& arg(std::size_t i) const {
    if (i >= opt_.args.size()) throw ParseError("missing argument #" + std::to_string(i + 1));
    return opt_.args[i];
  }

  PolyVectorField vector_field(const std::string& text) {
    auto it = problem().named_objects.find(text);
    if (it != problem().named_objects.end()) {
      if (auto* X = std::get_if<PolyVectorField>(&it->second)) return *X;
      throw ParseError("\"" + text + "\" is a form, expected a vector field");
    }
    auto comps = split_polynomials(text, problem().xring());
    if (comps.size() != problem().n)
      throw ParseError("vector field \"" + text + "\" needs " + std::to_string(problem().n) + " components");
    return PolyVectorField(std::move(comps));
  }

  PolyDiffForm form(const std::string& name) {
    const NamedObject& o = problem().object(name);
    if (auto* w = std::get_if<PolyDiffForm>(&o)) return *w;
    throw ParseError("\"" + name + "\" is a vector field, expected a form");
  }

  // A file with {"components": [...]}, a named invariant field (pushed), or
  // an inline comma-separated list of y-polynomials.
  OrbitVectorField orbit_vector_field(const std::string& text) {
    const OrbitSpace& S = space();
    if (std::filesystem::is_regular_file(text)) {
      const json j = load_json(text);
      return OrbitVectorField(polynomials_from_json(j.at("components"), S.yring()), S.ideal());
    }
    auto it = problem().named_objects.find(text);
    if (it != problem().named_objects.end()) return push_vf(vector_field(text), S);
    return OrbitVectorField(split_polynomials(text, S.yring()), S.ideal());
  }

  OrbitForm orbit_form(const std::string& path) {
    const OrbitSpace& S = space();
    OrbitForm theta = orbit_form_from_json(load_json(path), S.yring());
    std::map<OrbitForm::Tuple, Polynomial> reduced;
    for (auto& [t, v] : theta.values) {
      Polynomial r = S.reduce(v);
      if (!r.is_zero()) reduced.emplace(t, std::move(r));
    }
    theta.values = std::move(reduced);
    if (theta.generators != S.module().size())
      throw ParseError(path + ": form refers to " + std::to_string(theta.generators) + " generators, the module has " +
                       std::to_string(S.module().size()));
    return theta;
  }

 private:
  static std::vector<Polynomial> split_polynomials(const std::string& text, Ring ring) {
    std::vector<Polynomial> out;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      out.push_back(parse_polynomial(std::string_view(text).substr(start, comma - start), ring));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return out;
  }

  Options opt_;
  std::optional<ProblemFile> problem_;
  std::optional<OrbitSpace> space_;
};

std::string tuple_list(const std::vector<Polynomial>& ps) {
  std::string out = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + to_string(ps[i]);
  return out + ")";
}

void emit(Context& ctx, std::ostream& out, const json& j, const std::string& text) {
  if (ctx.json_output())
    out << j.dump(2) << '\n';
  else
    out << text << '\n';
}

using Handler = std::function<int(Context&, std::ostream&)>;

int cmd_invariants(Context& ctx, std::ostream& out) {
  const HilbertMap H = problem_hilbert(ctx.problem(), ctx.group());
  std::string text;
  for (const auto& s : H.sigma()) text += (text.empty() ? "" : "\n") + to_string(s);
  emit(ctx, out, {{"invariants", to_json(H.sigma())}}, text);
  return kOk;
}

int cmd_relations(Context& ctx, std::ostream& out) {
  const auto& gens = ctx.space().ideal().basis.generators();
  std::string text;
  for (const auto& g : gens) text += (text.empty() ? "" : "\n") + to_string(g);
  emit(ctx, out, {{"relations", to_json(gens)}}, gens.empty() ? "(zero ideal)" : text);
  return kOk;
}

int cmd_equivariants(Context& ctx, std::ostream& out) {
  const auto& gens = ctx.space().module().generators;
  json j = json::array();
  std::string text;
  for (const auto& X : gens) {
    j.push_back(to_json(X));
    text += (text.empty() ? "" : "\n") + to_string(X);
  }
  emit(ctx, out, {{"generators", j}}, text);
  return kOk;
}

int cmd_push_vf(Context& ctx, std::ostream& out) {
  const OrbitVectorField Y = push_vf(ctx.vector_field(ctx.arg(0)), ctx.space());
  emit(ctx, out, {{"orbit_vector_field", to_json(Y)}}, to_string(Y));
  return kOk;
}

int cmd_lift_vf(Context& ctx, std::ostream& out) {
  const PolyVectorField X = lift_vf(ctx.orbit_vector_field(ctx.arg(0)), ctx.space(), ctx.options().degree_bound);
  emit(ctx, out, {{"vector_field", to_json(X)}}, to_string(X));
  return kOk;
}

int cmd_bracket(Context& ctx, std::ostream& out) {
  const OrbitVectorField Y = ctx.orbit_vector_field(ctx.arg(0));
  const OrbitVectorField Yp = ctx.orbit_vector_field(ctx.arg(1));
  const OrbitVectorField B = orbit_bracket(Y, Yp, ctx.space().ideal());
  emit(ctx, out, {{"orbit_vector_field", to_json(B)}}, to_string(B));
  return kOk;
}

int cmd_push_form(Context& ctx, std::ostream& out) {
  const OrbitForm theta = push_form(ctx.form(ctx.arg(0)), ctx.space());
  emit(ctx, out, {{"orbit_form", to_json(theta)}}, to_string(theta));
  return kOk;
}

int cmd_pull_form(Context& ctx, std::ostream& out) {
  const PolyDiffForm w = pull_form(ctx.orbit_form(ctx.arg(0)), ctx.space(), ctx.options().degree_bound);
  emit(ctx, out, {{"form", to_json(w)}}, to_string(w));
  return kOk;
}

int cmd_d(Context& ctx, std::ostream& out) {
  const PolyDiffForm w = d(ctx.form(ctx.arg(0)));
  emit(ctx, out, {{"form", to_json(w)}}, to_string(w));
  return kOk;
}

int cmd_orbit_d(Context& ctx, std::ostream& out) {
  const OrbitForm theta = orbit_d(ctx.orbit_form(ctx.arg(0)), ctx.space());
  emit(ctx, out, {{"orbit_form", to_json(theta)}}, to_string(theta));
  return kOk;
}

int cmd_semibasic(Context& ctx, std::ostream& out) {
  const SemibasicResult r = semibasic_check(ctx.form(ctx.arg(0)), problem_lie(ctx.problem()));
  json j{{"semibasic", r.semibasic}};
  std::string text = "SEMI-BASIC";
  if (!r.semibasic) {
    j["failing_generator"] = *r.failing_index + 1;
    j["contraction"] = to_json(*r.contraction);
    text = "NOT SEMI-BASIC: generator " + std::to_string(*r.failing_index + 1) + " contracts to " +
           to_string(*r.contraction);
  }
  emit(ctx, out, j, text);
  return r.semibasic ? kOk : kNegative;
}

int cmd_invariant_check(Context& ctx, std::ostream& out) {
  const NamedObject& o = ctx.problem().object(ctx.arg(0));
  const FiniteMatrixGroup G = ctx.group();
  const bool inv = std::visit([&](const auto& v) { return is_invariant(v, G); }, o);
  emit(ctx, out, {{"invariant", inv}}, inv ? "INVARIANT" : "NOT INVARIANT");
  return inv ? kOk : kNegative;
}

int cmd_poincare(Context& ctx, std::ostream& out) {
  try {
    const PolyDiffForm alpha = poincare_primitive(ctx.form(ctx.arg(0)));
    emit(ctx, out, {{"closed", true}, {"form", to_json(alpha)}}, to_string(alpha));
    return kOk;
  } catch (const NotClosed& e) {
    emit(ctx, out, {{"closed", false}, {"derivative", to_json(e.derivative())}},
         "NOT CLOSED: d = " + to_string(e.derivative()));
    return kNegative;
  }
}

int cmd_extend_check(Context& ctx, std::ostream& out) {
  const OrbitSpace& S = ctx.space();
  const OrbitForm theta = ctx.orbit_form(ctx.arg(0));
  const ExtendResult r = extend_check(theta, S);
  if (r.extendable()) {
    emit(ctx, out, {{"extendable", true}, {"witness", to_json(*r.witness)}}, "EXTENDABLE\nA = " + tuple_list(*r.witness));
    return kOk;
  }
  std::string text = "NOT EXTENDABLE\nmodule normal form: " + tuple_list(r.certificate);
  const DCertificate dc = d_certificate(theta, S);
  if (dc.proves_not_extendable()) text += "\nd(pullback) = " + to_string(dc.d_pullback) + " is nonzero at the origin";
  emit(ctx, out, {{"extendable", false}, {"certificate", to_json(r.certificate)}}, text);
  return kNegative;
}

int cmd_verify_golden(Context& ctx, std::ostream& out) {
  const auto checks = run_golden_suite(ctx.options().seed);
  json j = json::array();
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.pass;
    j.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  if (ctx.json_output())
    out << json{{"checks", j}, {"passed", all}}.dump(2) << '\n';
  else
    out << golden_report(checks);
  return all ? kOk : kNegative;
}

struct Subcommand {
  const char* name;
  const char* help;
  std::size_t nargs;
  const char* arg_help;
  Handler run;
};

const std::vector<Subcommand>& commands() {
  static const std::vector<Subcommand> cmds = {
      {"invariants", "Generators of the invariant ring (the Hilbert map)", 0, "", cmd_invariants},
      {"relations", "Reduced basis of the relation ideal", 0, "", cmd_relations},
      {"equivariants", "Generators of the module of invariant vector fields", 0, "", cmd_equivariants},
      {"push-vf", "Push an invariant vector field to the orbit space", 1, "named field or comma-separated components",
       cmd_push_vf},
      {"lift-vf", "Lift an orbit vector field to an invariant field", 1, "JSON file or comma-separated y-polynomials",
       cmd_lift_vf},
      {"bracket", "Bracket of two orbit vector fields", 2, "orbit vector fields", cmd_bracket},
      {"push-form", "Push an invariant semi-basic form to an orbit form", 1, "named form", cmd_push_form},
      {"pull-form", "Pull an orbit form back to an invariant semi-basic form", 1, "orbit form JSON file",
       cmd_pull_form},
      {"d", "Exterior derivative of a named form", 1, "named form", cmd_d},
      {"orbit-d", "Exterior derivative of an orbit form", 1, "orbit form JSON file", cmd_orbit_d},
      {"semibasic", "Check a form against the Lie algebra", 1, "named form", cmd_semibasic},
      {"invariant-check", "Check invariance of a named object under the group", 1, "named object",
       cmd_invariant_check},
      {"poincare", "Primitive of a closed form by the homotopy operator", 1, "named form", cmd_poincare},
      {"extend-check", "Does an orbit 1-form extend to the ambient space?", 1, "orbit form JSON file",
       cmd_extend_check},
      {"verify-golden", "Run the built-in Z2 example suite", 0, "", cmd_verify_golden},
  };
  return cmds;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact calculus on orbit spaces of finite linear group actions", "orbitcalc"};
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&opt](CLI::App& a) {
    a.add_option("-i,--input", opt.input, "Problem file (JSON)");
    a.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    a.add_option("--degree-bound", opt.degree_bound, "Degree bound for generator searches, lifts and pulls");
    a.add_option("--seed", opt.seed, "Seed for randomized checks");
    a.add_option("--cap", opt.cap, "Maximum group order during closure")->check(CLI::PositiveNumber);
  };
  add_common(app);
  const Subcommand* chosen = nullptr;
  for (const auto& c : commands()) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(*sub);
    if (c.nargs > 0) sub->add_option("args", opt.args, c.arg_help)->expected(static_cast<int>(c.nargs))->required();
    sub->callback([&chosen, &c] { chosen = &c; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  Context ctx(opt);
  try {
    return chosen->run(ctx, out);
  } catch (const ParseError& e) {
    err << "error: " << chosen->name << ": " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << chosen->name << ": " << e.what() << '\n';
  } catch (const json::exception& e) {
    err << "error: " << chosen->name << ": malformed JSON: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace orbitcalc::cli
