// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oddchain/oddchain.hpp"
#include "oracles.hpp"

using namespace oddchain;

namespace {

// Pinned parameters.
constexpr std::uint64_t kSeed = 20240611;
constexpr std::size_t kTriples = 10000;
constexpr std::size_t kTauSamples = 10000;
constexpr std::size_t kTerms = 1000;
constexpr std::size_t kMapPairs = 1000;
constexpr std::size_t kBetweenPairs = 1000;
constexpr std::size_t kSearchBudget = 10000;
constexpr double kLimit1 = 30.0; // seconds
constexpr double kLimit9 = 60.0; // seconds
constexpr std::int64_t kTauWindow = 4;
constexpr int kClosureDepth = 4;
constexpr std::size_t kClosureMax = 3;

const char *kSix[] = {"Z", "Q", "Z_2", "Z_3", "Q_2", "PLPI(Q,Z,Q_2)"};

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string &why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

VerifyOptions opts(std::size_t n) {
  VerifyOptions o;
  o.samples = n;
  o.seed = kSeed;
  return o;
}

void absorb(Outcome &out, const PropertyResult &r, const std::string &where) {
  if (!r.ok())
    out.fail(where + " " + r.name + ": " + std::to_string(r.failed) + " failed" +
             (r.witnesses.empty() ? "" : " e.g. " + r.witnesses.front()));
}

Outcome c1() {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  std::size_t total = 0;
  for (const char *s : kSix) {
    auto r = check_adjointness(parse_algebra(s), opts(kTriples));
    total += r.checked;
    absorb(out, r, s);
  }
  double t = seconds_since(t0);
  if (t >= kLimit1) out.fail("took " + std::to_string(t) + " s");
  if (out.pass) out.detail = std::to_string(total) + " triples, 0 violations, " + std::to_string(t) + " s";
  return out;
}

Outcome c2() {
  Outcome out;
  std::size_t total = 0;
  for (const char *s : kSix) {
    Algebra A = parse_algebra(s);
    auto r = check_involution(A, opts(kTriples));
    total += r.checked;
    absorb(out, r, s);
    if (!(neg(A, A.unit()) == A.unit())) out.fail(std::string(s) + ": ~t != t");
  }
  if (out.pass) out.detail = std::to_string(total) + " samples, 0 violations";
  return out;
}

Outcome c3() {
  Outcome out;
  for (const char *s : kSix) absorb(out, check_tau(parse_algebra(s), opts(kTauSamples)), s);
  for (int j = 1; j <= 3; ++j) {
    Algebra A = make_Zj(j);
    auto win = enumerate_window(A, kTauWindow, j);
    auto idem = oracle::positive_idempotents(A, win);
    auto taus = tau_values(A, win);
    if (idem.size() != static_cast<std::size_t>(j))
      out.fail("Z_" + std::to_string(j) + ": " + std::to_string(idem.size()) + " positive idempotents in window");
    if (taus.size() != idem.size()) out.fail("Z_" + std::to_string(j) + ": window tau-values differ from idempotents");
    for (const auto &p : idem)
      if (std::find(taus.begin(), taus.end(), p) == taus.end()) out.fail("Z_" + std::to_string(j) + ": idempotent not a tau-value");
    auto sampled = check_tau(A, opts(kTauSamples));
    absorb(out, sampled, "Z_" + std::to_string(j));
  }
  if (out.pass) out.detail = "Z_1, Z_2, Z_3 have 1, 2, 3 positive idempotents";
  return out;
}

Outcome c4() {
  Outcome out;
  for (const char *s : kSix) absorb(out, check_tau_terms(parse_algebra(s), opts(kTerms), kTerms), s);
  if (out.pass) out.detail = std::to_string(kTerms) + " terms per algebra, 0 violations";
  return out;
}

Outcome c5() {
  Outcome out;
  for (auto [j, k] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}})
    for (const auto &r : check_zjk(j, k, opts(kMapPairs))) absorb(out, r, "zjk");
  for (const auto &r : check_fusion(make_Zj(1), make_Zj(1), make_Zj(1), opts(kMapPairs))) absorb(out, r, "fusion");
  for (const auto &r : check_fusion(make_Zj(1), parse_algebra("Z^2"), make_Qj(1), opts(kMapPairs))) absorb(out, r, "fusion");
  if (out.pass) out.detail = "(1,1), (1,2), (2,1) and re-association, " + std::to_string(kMapPairs) + " pairs each";
  return out;
}

Outcome c6() {
  Outcome out;
  RepresentationSpec spec = load_spec(ODDCHAIN_SPECS "/mixed_tower.json").representation.value();
  auto iii = build_representation(spec, TowerMode::III_IV);
  auto i_ii = build_representation(spec, TowerMode::I_II);
  for (std::size_t i = 0; i < iii.stages.size(); ++i)
    absorb(out, check_inclusion(iii.stages[i], i_ii.stages[i], "stage " + std::to_string(i + 1), opts(kTriples)), "");
  if (out.pass) out.detail = "3 stages, 0 violations";
  return out;
}

Outcome c7() {
  Outcome out;
  Rng rng(kSeed);
  for (const char *s : {"Q_2", "PLPI(Q,Z,Q_2)"}) {
    Algebra A = parse_algebra(s);
    std::size_t done = 0;
    while (done < kBetweenPairs) {
      Elem x = sample(A, rng), y = sample(A, rng);
      if (x == y) continue;
      if (less(A, y, x)) std::swap(x, y);
      ++done;
      try {
        Elem m = between(A, x, y);
        if (!(less(A, x, m) && less(A, m, y))) out.fail(std::string(s) + ": not strictly between");
      } catch (const Error &e) {
        out.fail(std::string(s) + ": " + e.what());
      }
    }
  }
  for (const char *s : {"Z", "Z_2", "PLPI(Q,Z,Z)"}) {
    Algebra A = parse_algebra(s);
    Elem x = sample(A, rng), y = sample(A, rng);
    while (x == y) y = sample(A, rng);
    if (less(A, y, x)) std::swap(x, y);
    try {
      between(A, x, y);
      out.fail(std::string(s) + ": no NotDense");
    } catch (const NotDense &) {
    }
  }
  if (out.pass) out.detail = std::to_string(2 * kBetweenPairs) + " pairs, Z-based inputs NotDense";
  return out;
}

Outcome c8() {
  Outcome out;
  const std::string clause = "group part not discretely embedded";
  auto rejected = [&](const std::string &text) {
    try {
      parse_algebra(text);
    } catch (const PreconditionViolation &e) {
      if (e.clause() != clause) out.fail(text + ": wrong clause " + e.clause());
      return;
    }
    out.fail(text + " accepted");
  };
  rejected("PLPII(Q,Z)");
  rejected("PLPIV(Q,Z,Z)");
  rejected("PLPII(Q_2,Z)");
  try {
    Algebra A = parse_algebra("PLPII(Z,Z)");
    if (!(to_string(A) == "PLPII(Z,Z)")) out.fail("unexpected name " + to_string(A));
  } catch (const Error &e) {
    out.fail(std::string("PLPII(Z,Z): ") + e.what());
  }
  if (out.pass) out.detail = "rejected with \"" + clause + "\"";
  return out;
}

Outcome c9() {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  RepresentationSpec spec = load_spec(ODDCHAIN_SPECS "/ranks_1_2_type3.json").representation.value();
  auto target = build_standard_target(spec);
  if (to_string(target.top()) != "PLPI(Q,Z,Q_2)") out.fail("X_2* is " + to_string(target.top()));
  absorb(out,
         check_homomorphism("X_2 -> X_2*", target.source.top(), target.top(),
                            [&](const Elem &e) { return target.embed(2, e); }, opts(kMapPairs)),
         "");

  Algebra B = adjoin_bounds(target.top());
  SearchOptions so;
  so.seed = kSeed;
  so.budget = kSearchBudget;
  auto contraction = parse_formula("(p*p)->p");
  auto res = check_consequence(B, {}, contraction, so);
  if (!res.found()) {
    out.fail("(p*p)->p not falsified");
  } else {
    auto j = countermodel_json(B, {}, contraction, *res.countermodel, true);
    // every rendered pair must agree with the chain order, strictly, inside (0,1)
    std::vector<std::pair<Elem, Rational>> pts;
    UnitIntervalRenderer r(B);
    r.insert(B.unit());
    std::vector<FormulaPtr> subs;
    subformulas(contraction, subs);
    for (const auto &s : subs) r.value(eval(B, *s, res.countermodel->assignment));
    for (const auto &row : j["render"]["subformulas"]) {
      Elem v = parse_elem(B, row["value"].get<std::string>());
      auto q = r.find(v);
      if (!q || q->str() != row["unit"].get<std::string>()) out.fail("render mismatch for " + row["formula"].get<std::string>());
      pts.emplace_back(v, *q);
    }
    for (const auto &[a, qa] : pts) {
      if (!(Rational(0) < qa && qa < Rational(1))) out.fail("rendered value outside (0,1)");
      for (const auto &[b, qb] : pts)
        if (less(B, a, b) != (qa < qb)) out.fail("rendering not order-consistent");
    }
  }
  for (const char *g : {"p->p", "t<->f"})
    if (check_consequence(B, {}, parse_formula(g), so).found()) out.fail(std::string(g) + " falsified");
  double t = seconds_since(t0);
  if (t >= kLimit9) out.fail("took " + std::to_string(t) + " s");
  if (out.pass)
    out.detail = "X_2* = " + to_string(target.top()) + ", (p*p)->p falsified, p->p and t<->f survive " +
                 std::to_string(kSearchBudget) + " assignments, " + std::to_string(t) + " s";
  return out;
}

Outcome c10() {
  Outcome out;
  Algebra Z2 = make_Zj(2);
  std::vector<Elem> gens{parse_elem(Z2, "(0, 1)"), parse_elem(Z2, "(1, T)")};
  auto fast = closure_tau_count(Z2, gens, kClosureDepth);
  auto slow = oracle::closure_taus(Z2, gens, kClosureDepth);
  if (!fast.complete) out.fail("closure hit its element budget");
  if (fast.distinct_tau() > kClosureMax) out.fail(std::to_string(fast.distinct_tau()) + " tau-values");
  if (fast.tau_values.size() != slow.size()) out.fail("oracle found " + std::to_string(slow.size()));
  for (const auto &t : slow)
    if (std::find(fast.tau_values.begin(), fast.tau_values.end(), t) == fast.tau_values.end())
      out.fail("oracle tau-value " + to_string(t) + " missing");
  if (out.pass) {
    out.detail = std::to_string(fast.distinct_tau()) + " tau-values over " + std::to_string(fast.elements) + " elements:";
    for (const auto &t : fast.tau_values) out.detail += " " + to_string(t);
  }
  return out;
}

} // namespace

int main() {
  const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
      {"adjointness", c1},       {"involution and oddness", c2}, {"tau-values are positive idempotents", c3},
      {"tau of terms", c4},      {"type II maps", c5},           {"III-IV inside I-II", c6},
      {"density", c7},           {"well-definedness gate", c8},  {"standard target pipeline", c9},
      {"closure tau count", c10}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
