#ifndef ODDCHAIN_VERIFY_HPP
#define ODDCHAIN_VERIFY_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "literals.hpp"
#include "logic.hpp"
#include "sampling.hpp"
#include "towers.hpp"

namespace oddchain {

/// Outcome of one sampled property.
struct PropertyResult {
  explicit PropertyResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> witnesses; // first few failures
  std::string note;

  bool ok() const { return failed == 0; }

  void record(bool pass, const std::function<std::string()> &witness) {
    ++checked;
    if (pass) return;
    ++failed;
    if (witnesses.size() < 5) witnesses.push_back(witness());
  }
};

inline nlohmann::json to_json(const PropertyResult &r) {
  nlohmann::json j{{"property", r.name}, {"checked", r.checked}, {"failed", r.failed}, {"pass", r.ok()}};
  if (!r.witnesses.empty()) j["witnesses"] = r.witnesses;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

struct VerifyOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  std::int64_t radius = 4;
};

namespace detail {
inline std::string show(std::initializer_list<Elem> es) {
  std::string s;
  for (const auto &e : es) s += (s.empty() ? "" : " ; ") + to_string(e);
  return s;
}
} // namespace detail

/// a ∘ v ≤ b  ⟺  v ≤ a → b, on random triples; half of the v are drawn next
/// to the residuum so both sides of the boundary are exercised.
inline PropertyResult check_adjointness(const Algebra &A, const VerifyOptions &o) {
  PropertyResult r{"adjointness"};
  Rng rng(o.seed);
  for (std::size_t i = 0; i < o.samples; ++i) {
    Elem a = sample(A, rng, o.radius), b = sample(A, rng, o.radius);
    Elem res = detail::residuum(A, a, b);
    Elem v = sample(A, rng, o.radius);
    switch (draw(rng, 0, 3)) {
    case 0: v = res; break;
    case 1:
      if (auto up = detail::above(A, res)) v = *up;
      break;
    default: break;
    }
    bool lhs = detail::compare(A, detail::mult(A, a, v), b) <= 0;
    bool rhs = detail::compare(A, v, res) <= 0;
    r.record(lhs == rhs && contains(A, res), [&] { return detail::show({a, b, v}); });
  }
  return r;
}

/// ¬¬a = a, ¬ reverses the order, ¬t = t.
inline PropertyResult check_involution(const Algebra &A, const VerifyOptions &o) {
  PropertyResult r{"involution"};
  Rng rng(o.seed + 1);
  r.record(detail::neg(A, A.unit()) == A.unit(), [&] { return "~t = " + to_string(detail::neg(A, A.unit())); });
  for (std::size_t i = 0; i < o.samples; ++i) {
    Elem a = sample(A, rng, o.radius), b = sample(A, rng, o.radius);
    Elem na = detail::neg(A, a), nb = detail::neg(A, b);
    bool ok = contains(A, na) && detail::neg(A, na) == a &&
              (detail::compare(A, a, b) <= 0) == (detail::compare(A, nb, na) <= 0);
    r.record(ok, [&] { return detail::show({a, b}); });
  }
  return r;
}

/// Commutativity, associativity, unit and monotonicity of ∘.
inline PropertyResult check_monoid(const Algebra &A, const VerifyOptions &o) {
  PropertyResult r{"monoid"};
  Rng rng(o.seed + 2);
  for (std::size_t i = 0; i < o.samples; ++i) {
    Elem a = sample(A, rng, o.radius), b = sample(A, rng, o.radius), c = sample(A, rng, o.radius);
    Elem ab = detail::mult(A, a, b);
    bool ok = contains(A, ab) && ab == detail::mult(A, b, a) &&
              detail::mult(A, ab, c) == detail::mult(A, a, detail::mult(A, b, c)) &&
              detail::mult(A, a, A.unit()) == a;
    if (detail::compare(A, b, c) <= 0) ok = ok && detail::compare(A, ab, detail::mult(A, a, c)) <= 0;
    r.record(ok, [&] { return detail::show({a, b, c}); });
  }
  return r;
}

inline bool is_positive_idempotent(const Algebra &A, const Elem &p) {
  return detail::compare(A, p, A.unit()) >= 0 && detail::mult(A, p, p) == p;
}

/// Distinct values of τ over a set, in first-seen order.
inline std::vector<Elem> tau_values(const Algebra &A, const std::vector<Elem> &xs) {
  std::vector<Elem> out;
  std::unordered_set<Elem, ElemHash> seen;
  for (const auto &x : xs) {
    Elem t = detail::residuum(A, x, x);
    if (seen.insert(t).second) out.push_back(t);
  }
  return out;
}

/// τ-values are positive idempotents and every sampled positive idempotent
/// is its own τ-value; the distinct τ-values found are listed in the note.
inline PropertyResult check_tau(const Algebra &A, const VerifyOptions &o) {
  PropertyResult r{"tau"};
  Rng rng(o.seed + 3);
  std::vector<Elem> xs;
  for (std::size_t i = 0; i < o.samples; ++i) xs.push_back(sample(A, rng, o.radius));
  for (const auto &x : xs) {
    Elem t = detail::residuum(A, x, x);
    r.record(is_positive_idempotent(A, t) && detail::residuum(A, t, t) == t,
             [&] { return detail::show({x, t}); });
    if (is_positive_idempotent(A, x))
      r.record(detail::residuum(A, x, x) == x, [&] { return "idempotent not a tau-value: " + to_string(x); });
  }
  auto taus = tau_values(A, xs);
  r.note = std::to_string(taus.size()) + " distinct tau-values:";
  for (const auto &t : taus) r.note += " " + to_string(t);
  return r;
}

/// Random {∘, →, ¬}-term over the given variables.
inline FormulaPtr random_term(Rng &rng, const std::vector<std::string> &vars, int depth) {
  if (depth == 0 || draw(rng, 0, 3) == 0) return Formula::var(vars[static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(vars.size()) - 1))]);
  switch (draw(rng, 0, 2)) {
  case 0: return Formula::binary(Formula::Op::Fuse, random_term(rng, vars, depth - 1), random_term(rng, vars, depth - 1));
  case 1: return Formula::binary(Formula::Op::Imp, random_term(rng, vars, depth - 1), random_term(rng, vars, depth - 1));
  default: return Formula::neg(random_term(rng, vars, depth - 1));
  }
}

/// τ of a term's value is the largest τ of its variables' values.
inline PropertyResult check_tau_terms(const Algebra &A, const VerifyOptions &o, std::size_t terms = 1000) {
  PropertyResult r{"tau-terms"};
  Rng rng(o.seed + 4);
  const std::vector<std::string> vars{"p", "q", "r"};
  for (std::size_t i = 0; i < terms; ++i) {
    auto phi = random_term(rng, vars, 4);
    Assignment e;
    for (const auto &v : vars) e[v] = sample(A, rng, o.radius);
    std::set<std::string> used;
    collect_vars(*phi, used);
    std::optional<Elem> best;
    for (const auto &v : used) {
      Elem t = detail::residuum(A, e[v], e[v]);
      if (!best || detail::compare(A, *best, t) < 0) best = t;
    }
    Elem val = detail::eval(A, *phi, e);
    r.record(detail::residuum(A, val, val) == *best, [&] {
      std::string s = to_string(*phi) + " with";
      for (const auto &v : used) s += " " + v + "=" + to_string(e[v]);
      return s;
    });
  }
  return r;
}

/// between() gives strict intermediates when the order is dense and reports
/// NotDense otherwise.
inline PropertyResult check_density(const Algebra &A, const VerifyOptions &o) {
  PropertyResult r{"density"};
  Rng rng(o.seed + 5);
  if (!A.dense()) {
    Elem a = A.unit();
    Elem b = detail::above(A, a).value_or(a);
    bool threw = false;
    try {
      between(A, a, b);
    } catch (const NotDense &) {
      threw = true;
    }
    r.record(threw, [&] { return "between did not report NotDense"; });
    r.note = "not dense: " + detail::density_blocker(A);
    return r;
  }
  for (std::size_t i = 0; i < o.samples; ++i) {
    Elem a = sample(A, rng, o.radius), b = sample(A, rng, o.radius);
    auto c = detail::compare(A, a, b);
    if (c == 0) continue;
    if (c > 0) std::swap(a, b);
    bool ok = false;
    try {
      Elem z = between(A, a, b);
      ok = contains(A, z) && detail::compare(A, a, z) < 0 && detail::compare(A, z, b) < 0;
    } catch (const Error &) {
    }
    r.record(ok, [&] { return detail::show({a, b}); });
  }
  return r;
}

/// Covers of group elements: cover_up(cover_down(a)) = a, the covers are in
/// the group part, and no sampled element sits strictly between a and its
/// upper cover.
inline PropertyResult check_covers(const Algebra &A, const VerifyOptions &o) {
  PropertyResult r{"covers"};
  if (!A.discrete_gr()) {
    r.note = "group part not discretely embedded";
    return r;
  }
  Rng rng(o.seed + 6);
  std::vector<Elem> pool;
  for (std::size_t i = 0; i < 200; ++i) pool.push_back(sample(A, rng, o.radius));
  for (std::size_t i = 0; i < o.samples / 10 + 1; ++i) {
    Elem a = sample_group(A, A.gr_desc(), rng, o.radius);
    Elem up = cover_up(A, a), down = cover_down(A, a);
    bool ok = cover_down(A, up) == a && cover_up(A, down) == a && in_group_part(A, up) && in_group_part(A, down);
    for (const auto &s : pool)
      if (detail::compare(A, a, s) < 0 && detail::compare(A, s, up) < 0) ok = false;
    if (detail::try_between(A, a, up)) ok = false;
    r.record(ok, [&] { return to_string(a); });
  }
  return r;
}

/// f preserves order, ∘, ¬ and the unit on sampled pairs.
inline PropertyResult check_homomorphism(const std::string &name, const Algebra &A, const Algebra &B,
                                         const std::function<Elem(const Elem &)> &f, const VerifyOptions &o,
                                         bool order_embedding = true) {
  PropertyResult r{name};
  Rng rng(o.seed + 7);
  r.record(f(A.unit()) == B.unit(), [&] { return "unit maps to " + to_string(f(A.unit())); });
  for (std::size_t i = 0; i < o.samples; ++i) {
    Elem a = sample(A, rng, o.radius), b = sample(A, rng, o.radius);
    Elem fa = f(a), fb = f(b);
    bool ok = contains(B, fa) && contains(B, fb);
    if (ok) {
      auto ca = detail::compare(A, a, b);
      auto cb = detail::compare(B, fa, fb);
      ok = order_embedding ? ca == cb : (ca <= 0) <= (cb <= 0);
      ok = ok && f(detail::mult(A, a, b)) == detail::mult(B, fa, fb);
      ok = ok && f(detail::neg(A, a)) == detail::neg(B, fa);
    }
    r.record(ok, [&] { return detail::show({a, b}); });
  }
  return r;
}

/// Every sampled element of the III-IV stage lies in the I-II stage and the
/// two structures agree on order, ∘ and ¬ there.
inline PropertyResult check_inclusion(const Algebra &sub, const Algebra &sup, const std::string &name,
                                      const VerifyOptions &o) {
  PropertyResult r{name};
  Rng rng(o.seed + 8);
  for (std::size_t i = 0; i < o.samples; ++i) {
    Elem a = sample(sub, rng, o.radius), b = sample(sub, rng, o.radius);
    bool ok = contains(sup, a) && contains(sup, b) &&
              detail::compare(sub, a, b) == detail::compare(sup, a, b) &&
              detail::mult(sub, a, b) == detail::mult(sup, a, b) && detail::neg(sub, a) == detail::neg(sup, a);
    r.record(ok, [&] { return detail::show({a, b}); });
  }
  return r;
}

/// PLPII(Z_j, Z_k) -> Z_{j+k} is an order isomorphism preserving ∘ and ¬.
inline std::vector<PropertyResult> check_zjk(int j, int k, const VerifyOptions &o) {
  Algebra src = plp_II(make_Zj(j), make_Zj(k));
  Algebra dst = make_Zj(j + k);
  std::string tag = "PLPII(Z_" + std::to_string(j) + ",Z_" + std::to_string(k) + ") -> Z_" + std::to_string(j + k);
  std::vector<PropertyResult> out;
  out.push_back(check_homomorphism(tag, src, dst, [&](const Elem &e) { return zjk_iso(j, k, e); }, o));
  PropertyResult back{tag + " inverse"};
  Rng rng(o.seed + 9);
  for (std::size_t i = 0; i < o.samples; ++i) {
    Elem x = sample(dst, rng, o.radius);
    Elem y = zjk_iso_inverse(j, k, x);
    back.record(contains(src, y) && zjk_iso(j, k, y) == x, [&] { return to_string(x); });
  }
  out.push_back(back);
  return out;
}

/// Re-association PLPII(PLPII(A,B),C) -> PLPII(A,PLPII(B,C)) and back.
inline std::vector<PropertyResult> check_fusion(const Algebra &A, const Algebra &B, const Algebra &C,
                                                const VerifyOptions &o) {
  auto fu = fuse_type2_iso(A, B, C);
  std::string tag = to_string(fu.left) + " -> " + to_string(fu.right);
  std::vector<PropertyResult> out;
  out.push_back(check_homomorphism(tag, fu.left, fu.right, [&](const Elem &e) { return fu.to_right(e); }, o));
  out.push_back(check_homomorphism(tag + " inverse", fu.right, fu.left, [&](const Elem &e) { return fu.to_left(e); }, o));
  return out;
}

/// Tower-level isomorphism checks: III-IV into I-II stage by stage, the
/// embeddings into the standard target, and the fused target.
inline std::vector<PropertyResult> check_tower_maps(const RepresentationSpec &spec, const VerifyOptions &o) {
  std::vector<PropertyResult> out;
  auto iii = build_representation(spec, TowerMode::III_IV);
  auto i_ii = build_representation(spec, TowerMode::I_II);
  for (std::size_t i = 0; i < iii.stages.size(); ++i)
    out.push_back(check_inclusion(iii.stages[i], i_ii.stages[i], "stage " + std::to_string(i + 1) + " III-IV in I-II", o));
  bool standard = spec.rational_stage.empty() ||
                  std::none_of(spec.rational_stage.begin(), spec.rational_stage.end(), [](bool q) { return q; });
  if (!standard) return out;
  auto t = build_standard_target(spec);
  for (std::size_t i = 1; i <= spec.n(); ++i)
    out.push_back(check_homomorphism("stage " + std::to_string(i) + " embedding", t.source.stages[i - 1], t.stages[i - 1],
                                     [&](const Elem &e) { return t.embed_unchecked(i, e); }, o));
  if (!(t.fused.algebra == t.top()))
    out.push_back(check_homomorphism("fused target", t.top(), t.fused.algebra, t.fused.map, o));
  return out;
}

/// The single-algebra suites.
inline std::vector<PropertyResult> run_suite(const Algebra &A, const std::string &suite, const VerifyOptions &o) {
  std::vector<PropertyResult> out;
  const bool all = suite == "all";
  if (all || suite == "adjoint") out.push_back(check_adjointness(A, o));
  if (all || suite == "involution") out.push_back(check_involution(A, o));
  if (all) out.push_back(check_monoid(A, o));
  if (all || suite == "tau") {
    out.push_back(check_tau(A, o));
    out.push_back(check_tau_terms(A, o, std::min<std::size_t>(o.samples, 1000)));
  }
  if (all || suite == "density") {
    out.push_back(check_density(A, o));
    if (A.discrete_gr()) out.push_back(check_covers(A, o));
  }
  return out;
}

inline const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"all", "adjoint", "involution", "tau", "iso", "density"};
  return names;
}

} // namespace oddchain

#endif // ODDCHAIN_VERIFY_HPP
