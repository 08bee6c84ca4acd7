// oddchain: build towers, run property suites, search countermodels.
//
// Exit codes: 0 success / countermodel found, 1 not found or a property
// failed, 2 usage or validation error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddchain/oddchain.hpp"

using namespace oddchain;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNotFound = 1;
constexpr int kUsage = 2;

struct Common {
  std::string spec_path;
  std::string algebra_expr;
  std::uint64_t seed = 1;
  bool as_json = false;
  std::string out_path;
};

SpecFile load_input(const Common &c) {
  if (!c.algebra_expr.empty() && !c.spec_path.empty())
    throw ValidationError("give either a spec file or --algebra, not both");
  if (!c.algebra_expr.empty()) {
    SpecFile s;
    s.algebra = parse_algebra(c.algebra_expr);
    return s;
  }
  if (c.spec_path.empty()) throw ValidationError("a spec file or --algebra is required");
  return load_spec(c.spec_path);
}

void emit(const Common &c, const std::string &text) {
  if (c.out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(c.out_path);
  if (!out) throw ValidationError("cannot write '" + c.out_path + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json stage_json(const Algebra &A) {
  json j{{"algebra", to_string(A)}, {"dense", A.dense()}};
  if (!A.is_bounded()) {
    j["group_part"] = to_string(A.gr_desc(), &A.gr_kinds());
    j["discrete"] = is_grpart_discretely_embedded(A);
  }
  return j;
}

std::string join_names(const std::vector<Algebra> &stages) {
  std::string s;
  for (const auto &a : stages) s += (s.empty() ? "" : "; ") + to_string(a);
  return s;
}

/// The chain formulas are evaluated in: a single algebra from the spec file, the
/// top of the III-IV tower, or with --standard the top of the target tower;
/// bounds are adjoined unless already present.
Algebra evaluation_algebra(const SpecFile &s, bool standard) {
  Algebra A;
  if (s.algebra) A = *s.algebra;
  else if (standard) A = build_standard_target(*s.representation).top();
  else A = build_representation(*s.representation, TowerMode::III_IV).top();
  return A.is_bounded() ? A : adjoin_bounds(A);
}

// ---------------------------------------------------------------------------

int cmd_build(const Common &c, const std::string &mode, bool standard) {
  SpecFile s = load_input(c);
  json report;
  std::vector<Algebra> stages;
  if (s.algebra) {
    stages = {*s.algebra};
  } else if (standard) {
    auto t = build_standard_target(*s.representation);
    stages = t.stages;
    report = to_json(*s.representation);
    report["standard"] = true;
    report["fused"] = to_string(t.fused.algebra);
  } else {
    if (mode != "iii-iv" && mode != "i-ii") throw ValidationError("mode: expected iii-iv or i-ii");
    auto tw = build_representation(*s.representation, mode == "i-ii" ? TowerMode::I_II : TowerMode::III_IV);
    stages = tw.stages;
    report = to_json(*s.representation);
    report["mode"] = mode;
  }
  report["stages"] = json::array();
  for (const auto &a : stages) report["stages"].push_back(stage_json(a));

  if (!c.out_path.empty()) {
    emit(c, report.dump(2));
  }
  if (c.as_json) {
    std::cout << report.dump(2) << '\n';
    return kOk;
  }
  std::cout << join_names(stages) << '\n';
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const auto &j = report["stages"][i];
    std::cout << "stage " << i + 1 << ": " << j["algebra"].get<std::string>();
    if (j.contains("group_part"))
      std::cout << "  group part " << j["group_part"].get<std::string>() << "  discrete "
                << yes_no(j["discrete"].get<bool>());
    std::cout << "  dense " << yes_no(j["dense"].get<bool>()) << '\n';
  }
  if (report.contains("fused")) std::cout << "fused: " << report["fused"].get<std::string>() << '\n';
  return kOk;
}

int report_results(const Common &c, const std::vector<std::pair<std::string, PropertyResult>> &results) {
  bool all_ok = true;
  json arr = json::array();
  std::string text;
  for (const auto &[target, r] : results) {
    all_ok = all_ok && r.ok();
    json j = to_json(r);
    j["algebra"] = target;
    arr.push_back(j);
    text += std::string(r.ok() ? "PASS " : "FAIL ") + r.name + " [" + target + "] " + std::to_string(r.checked) +
            " checked, " + std::to_string(r.failed) + " failed";
    if (!r.note.empty()) text += " (" + r.note + ")";
    text += '\n';
    for (const auto &w : r.witnesses) text += "  witness: " + w + '\n';
  }
  emit(c, c.as_json ? json{{"pass", all_ok}, {"results", arr}}.dump(2) : text);
  return all_ok ? kOk : kNotFound;
}

int cmd_verify(const Common &c, const std::string &suite, std::size_t samples) {
  const auto &names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw ValidationError("suite: unknown suite '" + suite + "'");
  VerifyOptions o;
  o.samples = samples;
  o.seed = c.seed;
  SpecFile s;
  try {
    s = load_input(c);
  } catch (const Error &e) {
    throw ValidationError(std::string("verification error: ") + e.what());
  }
  std::vector<std::pair<std::string, PropertyResult>> results;
  auto run_on = [&](const Algebra &A) {
    if (suite == "iso") return;
    for (auto &r : run_suite(A, suite, o)) results.emplace_back(to_string(A), std::move(r));
  };
  if (s.algebra) {
    run_on(*s.algebra);
    if (suite == "all" || suite == "iso") {
      auto fused = fuse_type2_chains(*s.algebra);
      PropertyResult r("re-association");
      if (!(fused.algebra == *s.algebra)) r = check_homomorphism("re-association", *s.algebra, fused.algebra, fused.map, o);
      else r.note = "no nested type II products";
      results.emplace_back(to_string(*s.algebra), std::move(r));
    }
  } else {
    const auto &spec = *s.representation;
    std::vector<Algebra> tops;
    try {
      tops.push_back(build_representation(spec, TowerMode::III_IV).top());
      tops.push_back(build_representation(spec, TowerMode::I_II).top());
    } catch (const Error &e) {
      throw ValidationError(std::string("verification error: ") + e.what());
    }
    for (const auto &A : tops) run_on(A);
    if (suite == "all" || suite == "iso")
      for (auto &r : check_tower_maps(spec, o)) results.emplace_back("tower", std::move(r));
  }
  return report_results(c, results);
}

int cmd_countermodel(const Common &c, const std::string &formula, const std::string &theory_path,
                     std::size_t budget, bool render, bool standard) {
  SpecFile s = load_input(c);
  Algebra A = evaluation_algebra(s, standard);
  FormulaPtr goal;
  try {
    goal = parse_formula(formula);
  } catch (const ParseError &e) {
    throw ValidationError(std::string("formula: ") + e.what());
  }
  std::vector<FormulaPtr> theory;
  if (!theory_path.empty()) theory = parse_theory(read_file(theory_path));
  SearchOptions opt;
  opt.seed = c.seed;
  opt.budget = budget;
  auto res = check_consequence(A, theory, goal, opt);
  if (!res.found()) {
    json j{{"found", false}, {"algebra", to_string(A)}, {"goal", to_string(*goal)}, {"tried", res.tried}};
    emit(c, c.as_json ? j.dump(2) : "not found after " + std::to_string(res.tried) + " assignments");
    return kNotFound;
  }
  emit(c, countermodel_json(A, theory, goal, *res.countermodel, render).dump(2));
  return kOk;
}

int cmd_eval(const Common &c, const std::string &formula, const std::vector<std::string> &assigns, bool standard) {
  SpecFile s = load_input(c);
  Algebra A = evaluation_algebra(s, standard);
  FormulaPtr f;
  try {
    f = parse_formula(formula);
  } catch (const ParseError &e) {
    throw ValidationError(std::string("formula: ") + e.what());
  }
  Assignment e;
  for (const auto &a : assigns) {
    auto eq = a.find('=');
    if (eq == std::string::npos) throw ValidationError("assign: expected name=element, got '" + a + "'");
    std::string name = a.substr(0, eq);
    try {
      e[name] = parse_elem(A, a.substr(eq + 1));
    } catch (const ParseError &err) {
      throw ValidationError("assign " + name + ": " + err.what());
    }
  }
  Elem v = eval(A, *f, e);
  bool des = designated(A, v);
  if (c.as_json)
    emit(c, json{{"formula", to_string(*f)}, {"value", to_string(v)}, {"designated", des}}.dump(2));
  else
    emit(c, to_string(v) + (des ? "  (designated)" : "  (not designated)"));
  return kOk;
}

int cmd_iso(const Common &c, std::size_t samples) {
  VerifyOptions o;
  o.samples = samples;
  o.seed = c.seed;
  std::vector<std::pair<std::string, PropertyResult>> results;
  for (auto [j, k] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}})
    for (auto &r : check_zjk(j, k, o)) results.emplace_back("Z_j", std::move(r));
  Algebra Z = make_Zj(1);
  for (auto &r : check_fusion(Z, Z, Z, o)) results.emplace_back("re-association", std::move(r));
  for (auto &r : check_fusion(make_Zj(2), Z, make_Qj(2), o)) results.emplace_back("re-association", std::move(r));
  if (!c.spec_path.empty() || !c.algebra_expr.empty()) {
    SpecFile s = load_input(c);
    if (s.representation)
      for (auto &r : check_tower_maps(*s.representation, o)) results.emplace_back("tower", std::move(r));
  }
  return report_results(c, results);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Odd involutive chains: towers, property suites, countermodels"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App *sub, bool spec_positional) {
    if (spec_positional) sub->add_option("spec", c.spec_path, "JSON spec file")->check(CLI::ExistingFile);
    sub->add_option("--algebra", c.algebra_expr, "algebra expression instead of a spec file");
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_flag("--json", c.as_json, "JSON output");
    sub->add_option("--out", c.out_path, "write the result to a file");
  };

  std::string mode = "iii-iv";
  bool standard = false;
  auto *build = app.add_subcommand("build", "build a tower and print its stages");
  common(build, true);
  build->add_option("--mode", mode, "iii-iv or i-ii")->check(CLI::IsMember({"iii-iv", "i-ii"}));
  build->add_flag("--standard", standard, "build the standard target tower");

  std::string suite = "all";
  std::size_t samples = 10000;
  auto *verify = app.add_subcommand("verify", "run property suites");
  common(verify, true);
  verify->add_option("--suite", suite, "all, adjoint, involution, tau, iso or density");
  verify->add_option("--samples", samples, "samples per property");

  std::string formula, theory_path;
  std::size_t budget = 10000;
  bool render = false;
  auto *cm = app.add_subcommand("countermodel", "search for a falsifying assignment");
  // [spec file] formula; with --algebra only the formula is given
  std::vector<std::string> inputs;
  common(cm, false);
  cm->add_option("inputs", inputs, "[spec] formula")->required()->expected(1, 2);
  cm->add_option("--theory", theory_path, "theory file, one formula per line")->check(CLI::ExistingFile);
  cm->add_option("--budget", budget, "assignments to try");
  cm->add_flag("--render-unit", render, "render values into (0,1)");
  cm->add_flag("--standard", standard, "search in the standard target tower");

  std::vector<std::string> assigns;
  auto *ev = app.add_subcommand("eval", "evaluate a formula");
  common(ev, false);
  ev->add_option("inputs", inputs, "[spec] formula")->required()->expected(1, 2);
  ev->add_option("--assign", assigns, "name=element, repeatable");
  ev->add_flag("--standard", standard, "evaluate in the standard target tower");

  auto *iso = app.add_subcommand("iso-check", "sampled isomorphism checks");
  common(iso, true);
  std::size_t iso_samples = 1000;
  iso->add_option("--samples", iso_samples, "samples per map");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*cm || *ev) {
    formula = inputs.back();
    if (inputs.size() == 2) c.spec_path = inputs.front();
  }

  try {
    if (*build) return cmd_build(c, mode, standard);
    if (*verify) return cmd_verify(c, suite, samples);
    if (*cm) return cmd_countermodel(c, formula, theory_path, budget, render, standard);
    if (*ev) return cmd_eval(c, formula, assigns, standard);
    if (*iso) return cmd_iso(c, iso_samples);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
