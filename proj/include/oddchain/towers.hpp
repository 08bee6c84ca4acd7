#ifndef ODDCHAIN_TOWERS_HPP
#define ODDCHAIN_TOWERS_HPP

#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "core.hpp"
#include "literals.hpp"
#include "plp.hpp"

namespace oddchain {

// ---------------------------------------------------------------------------
// Z_j and Q_j

/// Z_1 = Z, Z_{j+1} = PLPII(Z, Z_j).
inline Algebra make_Zj(int j) {
  if (j < 1) throw ValidationError("Z_j needs j >= 1");
  Algebra Z = Algebra::base(GroupChain::zlex(1));
  Algebra acc = Z.named("Z");
  for (int i = 2; i <= j; ++i) acc = plp_II(Z, acc).named("Z_" + std::to_string(i));
  return acc;
}

/// Q_1 = Q, Q_{j+1} = PLPI(Q, Z, Q_j). Also the computable stand-in for the
/// real towers R_j: countable, densely ordered and unbounded.
inline Algebra make_Qj(int j) {
  if (j < 1) throw ValidationError("Q_j needs j >= 1");
  Algebra Q = Algebra::base(GroupChain::rationals());
  Algebra acc = Q.named("Q");
  const SubgroupDescriptor integers{CoordConstraint::multiples_of(1)};
  for (int i = 2; i <= j; ++i) acc = plp_I(Q, integers, acc).named("Q_" + std::to_string(i));
  return acc;
}

// ---------------------------------------------------------------------------
// Representation towers

enum class TowerMode { III_IV, I_II };

/// Input of the tower construction: stage groups G_i = Z^{k_i} (or Q when
/// requested), the construction sequence ι_2..ι_n, and the subgroups
/// Z_i, V_i (i = 1..n-1) over the group part of stage i. Missing Z_i default
/// to the whole group part, missing V_i to Z_i.
struct RepresentationSpec {
  std::vector<int> ranks;
  std::vector<PlpKind> iota;
  std::vector<std::optional<SubgroupDescriptor>> zdescs;
  std::vector<std::optional<SubgroupDescriptor>> vdescs;
  /// Optional per-stage override: true makes G_i = Q (rank must be 1).
  std::vector<bool> rational_stage;

  std::size_t n() const { return ranks.size(); }

  void validate() const {
    if (ranks.empty()) throw ValidationError("ranks: at least one stage is required");
    for (int k : ranks)
      if (k < 0) throw ValidationError("ranks: entries must be non-negative");
    if (iota.size() != ranks.size() - 1)
      throw ValidationError("iota: expected " + std::to_string(ranks.size() - 1) + " entries, got " +
                            std::to_string(iota.size()));
    for (auto t : iota)
      if (t != PlpKind::III && t != PlpKind::IV) throw ValidationError("iota: entries must be III or IV");
    if (zdescs.size() > ranks.size() - 1) throw ValidationError("zdescs: too many entries");
    if (vdescs.size() > ranks.size() - 1) throw ValidationError("vdescs: too many entries");
    if (!rational_stage.empty() && rational_stage.size() != ranks.size())
      throw ValidationError("groups: expected one entry per stage");
    for (std::size_t i = 0; i < rational_stage.size(); ++i)
      if (rational_stage[i] && ranks[i] != 1) throw ValidationError("groups: a Q stage must have rank 1");
  }

  /// ι_i for stage i (2-based, as in the construction).
  PlpKind iota_at(std::size_t i) const { return iota.at(i - 2); }
  bool is_rational(std::size_t i) const { return !rational_stage.empty() && rational_stage.at(i - 1); }

  GroupChain group(std::size_t i) const {
    if (is_rational(i)) return GroupChain::rationals();
    return GroupChain::integers_pow(ranks.at(i - 1));
  }
};

/// Stages X_1..X_n plus the resolved Z_i, V_i (i = 1..n-1).
struct Countertower {
  TowerMode mode = TowerMode::III_IV;
  std::vector<Algebra> stages;
  std::vector<SubgroupDescriptor> zdescs;
  std::vector<SubgroupDescriptor> vdescs;

  const Algebra &top() const { return stages.back(); }
};

namespace detail {

inline std::string stage_ctx(std::size_t i) { return "stage " + std::to_string(i); }

template <class F> auto at_stage(std::size_t i, F &&f) {
  try {
    return f();
  } catch (const PreconditionViolation &e) {
    throw PreconditionViolation(e.clause(), stage_ctx(i));
  }
}

} // namespace detail

/// Build the tower: X_1 = G_1, then X_i = PLPIII(X_{i-1}, Z_{i-1}, V_{i-1}, G_i)
/// or PLPIV(X_{i-1}, V_{i-1}, G_i) by ι_i (III-IV mode), or the type I / II
/// products with Z_{i-1} alone (I-II mode). In I-II mode the III-IV tower is
/// built first to resolve defaults and verify the hypotheses, so each I-II
/// stage contains the corresponding III-IV stage.
inline Countertower build_representation(const RepresentationSpec &spec, TowerMode mode) {
  spec.validate();
  Countertower iii;
  iii.mode = TowerMode::III_IV;
  iii.stages.push_back(Algebra::base(spec.group(1)));
  for (std::size_t i = 2; i <= spec.n(); ++i) {
    const Algebra &prev = iii.stages.back();
    const auto &kinds = prev.gr_kinds();
    const SubgroupDescriptor full = prev.gr_desc();
    const std::size_t j = i - 2; // index of Z_{i-1}, V_{i-1}
    auto resolve = [&](const std::optional<SubgroupDescriptor> &d, const SubgroupDescriptor &dflt,
                       const char *field) {
      if (!d) return dflt;
      try {
        return canonicalize(*d, kinds);
      } catch (const Error &e) {
        throw ValidationError(std::string(field) + "[" + std::to_string(j) + "]: " + e.what());
      }
    };
    SubgroupDescriptor z = resolve(j < spec.zdescs.size() ? spec.zdescs[j] : std::nullopt, full, "zdescs");
    SubgroupDescriptor v = resolve(j < spec.vdescs.size() ? spec.vdescs[j] : std::nullopt, z, "vdescs");
    if (spec.iota_at(i) == PlpKind::IV && z != full)
      throw PreconditionViolation("a type IV step requires Z to be the whole group part",
                                  detail::stage_ctx(i));
    Algebra G = Algebra::base(spec.group(i));
    Algebra next = detail::at_stage(i, [&] {
      return spec.iota_at(i) == PlpKind::III ? plp_III(prev, z, v, G) : plp_IV(prev, v, G);
    });
    iii.zdescs.push_back(std::move(z));
    iii.vdescs.push_back(std::move(v));
    iii.stages.push_back(std::move(next));
  }
  if (mode == TowerMode::III_IV) return iii;

  Countertower out;
  out.mode = TowerMode::I_II;
  out.zdescs = iii.zdescs;
  out.vdescs = iii.zdescs;
  out.stages.push_back(Algebra::base(spec.group(1)));
  for (std::size_t i = 2; i <= spec.n(); ++i) {
    const Algebra &prev = out.stages.back();
    Algebra G = Algebra::base(spec.group(i));
    Algebra next = detail::at_stage(i, [&] {
      return spec.iota_at(i) == PlpKind::III ? plp_I(prev, iii.zdescs[i - 2], G) : plp_II(prev, G);
    });
    out.stages.push_back(std::move(next));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Re-association of consecutive type II products

/// The canonical bijection between PLPII(PLPII(A,B),C) and PLPII(A,PLPII(B,C)):
/// ((a,T),T) <-> (a,T) and ((a,b),c) <-> (a,(b,c)) for b a value.
struct Type2Fusion {
  Algebra left;  // PLPII(PLPII(A,B),C)
  Algebra right; // PLPII(A,PLPII(B,C))

  Elem to_right(const Elem &e) const {
    if (!contains(left, e)) throw MembershipError("element is not in PLPII(PLPII(A,B),C)");
    return rotate_right(e);
  }
  Elem to_left(const Elem &e) const {
    if (!contains(right, e)) throw MembershipError("element is not in PLPII(A,PLPII(B,C))");
    return rotate_left(e);
  }

  static Elem rotate_right(const Elem &e) {
    const Elem &ab = e.first();
    if (ab.mark() == Mark::Top) return Elem::pair_top(ab.first()); // c is Top here
    return Elem::pair_val(ab.first(), Elem::pair(ab.second(), e.mark(),
                                                 e.mark() == Mark::Val ? &e.second() : nullptr));
  }
  static Elem rotate_left(const Elem &e) {
    if (e.mark() == Mark::Top) return Elem::pair_top(Elem::pair_top(e.first()));
    const Elem &bc = e.second();
    return Elem::pair(Elem::pair_val(e.first(), bc.first()), bc.mark(),
                      bc.mark() == Mark::Val ? &bc.second() : nullptr);
  }
};

/// Build both sides. Either side is well-defined exactly when the other is;
/// a disagreement is reported as an error.
inline Type2Fusion fuse_type2_iso(const Algebra &A, const Algebra &B, const Algebra &C) {
  std::optional<Algebra> left, right;
  std::string why_left, why_right;
  try {
    left = plp_II(plp_II(A, B), C);
  } catch (const PreconditionViolation &e) {
    why_left = e.what();
  }
  try {
    right = plp_II(A, plp_II(B, C));
  } catch (const PreconditionViolation &e) {
    why_right = e.what();
  }
  if (!left && !right)
    throw PreconditionViolation("neither side is well-defined (" + why_left + "; " + why_right + ")");
  if (!left || !right)
    throw Error("well-definedness of the two associations disagrees: " +
                (left ? why_right : why_left));
  return {*left, *right};
}

/// Result of rotating every left-nested chain of type II products to the right.
struct Reassociated {
  Algebra algebra;
  std::function<Elem(const Elem &)> map;
};

namespace detail {
inline Elem map_second(const Elem &e, const std::function<Elem(const Elem &)> &fy) {
  return e.mark() == Mark::Val ? Elem::pair_val(e.first(), fy(e.second()))
                               : Elem::pair(e.first(), e.mark(), nullptr);
}
} // namespace detail

inline Reassociated fuse_type2_chains(const Algebra &A) {
  using F = std::function<Elem(const Elem &)>;
  switch (A.kind()) {
  case Algebra::Kind::Base: return {A, [](const Elem &e) { return e; }};
  case Algebra::Kind::Bounded: {
    auto r = fuse_type2_chains(A.inner());
    return {adjoin_bounds(r.algebra), [m = r.map](const Elem &e) { return e.is_bound() ? e : m(e); }};
  }
  default: break;
  }
  auto rx = fuse_type2_chains(A.x());
  auto ry = fuse_type2_chains(A.y());
  F fx = rx.map, fy = ry.map;
  F componentwise = [fx, fy](const Elem &e) {
    return detail::map_second(Elem::pair(fx(e.first()), e.mark(), e.mark() == Mark::Val ? &e.second() : nullptr), fy);
  };
  const bool same = rx.algebra == A.x() && ry.algebra == A.y();
  if (A.kind() == Algebra::Kind::PlpIII)
    return {same ? A : make_plp3_unchecked(rx.algebra, A.z(), A.v(), ry.algebra), componentwise};
  if (!A.is_type_II() || !rx.algebra.is_type_II())
    return {same ? A : make_plp4_unchecked(rx.algebra, A.v(), ry.algebra), componentwise};

  // PLPII(PLPII(P,B),C) -> PLPII(P, fused PLPII(B,C))
  const Algebra &P = rx.algebra.x();
  auto inner = fuse_type2_chains(plp_II(rx.algebra.y(), ry.algebra));
  Algebra out = plp_II(P, inner.algebra);
  F fin = inner.map;
  return {out, [componentwise, fin](const Elem &e) {
            Elem lhs = componentwise(e); // element of PLPII(PLPII(P,B),C)
            Elem rot = Type2Fusion::rotate_right(lhs);
            return rot.mark() == Mark::Val ? Elem::pair_val(rot.first(), fin(rot.second())) : rot;
          }};
}

/// Canonical flattening PLPII(Z_j, Z_k) -> Z_{j+k}.
inline Elem zjk_iso(int j, int k, const Elem &e) {
  static thread_local std::optional<std::pair<std::pair<int, int>, Algebra>> cache;
  if (!cache || cache->first != std::make_pair(j, k)) cache.emplace(std::make_pair(j, k), plp_II(make_Zj(j), make_Zj(k)));
  if (!contains(cache->second, e)) throw MembershipError("element is not in PLPII(Z_j, Z_k)");
  std::function<Elem(int, const Elem &)> go = [&](int jj, const Elem &p) -> Elem {
    if (jj == 1) return p;
    const Elem &x = p.first(); // (a, s') in Z_jj
    if (x.mark() == Mark::Top) return Elem::pair_top(x.first());
    return Elem::pair_val(x.first(), go(jj - 1, Elem::pair(x.second(), p.mark(),
                                                          p.mark() == Mark::Val ? &p.second() : nullptr)));
  };
  return go(j, e);
}

/// Inverse of zjk_iso: Z_{j+k} -> PLPII(Z_j, Z_k).
inline Elem zjk_iso_inverse(int j, int k, const Elem &e) {
  if (!contains(make_Zj(j + k), e)) throw MembershipError("element is not in Z_{j+k}");
  std::function<Elem(int, const Elem &)> go = [&](int jj, const Elem &p) -> Elem {
    if (jj == 1) return p;
    // p = (a, s) in Z_{jj+k}
    if (p.mark() == Mark::Top) return Elem::pair_top(Elem::pair_top(p.first()));
    Elem rest = go(jj - 1, p.second()); // (x', s'') in PLPII(Z_{jj-1}, Z_k)
    return Elem::pair(Elem::pair_val(p.first(), rest.first()), rest.mark(),
                      rest.mark() == Mark::Val ? &rest.second() : nullptr);
  };
  return go(j, e);
}

// ---------------------------------------------------------------------------
// Standard target

/// X_1*..X_n* with Q_k standing in for the real towers R_k, the stage-wise
/// embeddings X_i -> X_i* of the I-II tower, and the top stage with every
/// chain of consecutive type II products re-associated into one.
struct StandardTarget {
  RepresentationSpec spec;
  Countertower source; // I-II tower
  std::vector<Algebra> stages;
  Reassociated fused;

  const Algebra &top() const { return stages.back(); }

  /// Embedding of stage i (1-based) of the I-II tower into X_i*.
  Elem embed(std::size_t i, const Elem &e) const {
    if (!contains(source.stages.at(i - 1), e)) throw MembershipError("element is not in the source stage");
    return embed_unchecked(i, e);
  }

  /// Map from X_n* into the fused top stage.
  Elem to_fused(const Elem &e) const {
    if (!contains(top(), e)) throw MembershipError("element is not in the target");
    return fused.map(e);
  }

  /// Target chain hosting G_i: Q_k when the stage is followed by a type III
  /// step (or is last), Z_k otherwise. The trivial group sits in Z_1 / Q_1.
  Algebra stage_group(std::size_t i) const {
    int k = std::max(spec.ranks.at(i - 1), 1);
    bool dense = i == spec.n() || spec.iota_at(i + 1) == PlpKind::III;
    return dense ? make_Qj(k) : make_Zj(k);
  }

  Elem embed_group(std::size_t i, const Elem &g) const {
    auto coords = group_coords(g.group());
    if (coords.empty()) coords.push_back(Rational(0));
    return from_gr_coords(stage_group(i), coords);
  }

  Elem embed_unchecked(std::size_t i, const Elem &e) const {
    if (i == 1) return embed_group(1, e);
    Elem first = embed_unchecked(i - 1, e.first());
    if (e.mark() != Mark::Val) return Elem::pair(std::move(first), e.mark(), nullptr);
    return Elem::pair_val(std::move(first), embed_group(i, e.second()));
  }
};

/// Insert a ZeroOnly coordinate for every trivial stage so a descriptor over
/// the group part of X_i addresses the group part of X_i*.
inline SubgroupDescriptor lift_descriptor(const SubgroupDescriptor &d, const std::vector<int> &ranks,
                                          std::size_t stages) {
  SubgroupDescriptor out;
  std::size_t at = 0;
  for (std::size_t s = 0; s < stages; ++s) {
    if (ranks[s] == 0) {
      out.push_back(CoordConstraint::zero_only());
      continue;
    }
    for (int c = 0; c < ranks[s]; ++c) out.push_back(d.at(at++));
  }
  return out;
}

inline StandardTarget build_standard_target(const RepresentationSpec &spec) {
  spec.validate();
  if (!spec.rational_stage.empty())
    for (bool q : spec.rational_stage)
      if (q) throw ValidationError("groups: the standard target needs finitely generated (Z^k) stage groups");
  StandardTarget t;
  t.spec = spec;
  t.source = build_representation(spec, TowerMode::I_II);
  t.stages.push_back(t.stage_group(1));
  for (std::size_t i = 2; i <= spec.n(); ++i) {
    const Algebra &prev = t.stages.back();
    Algebra G = t.stage_group(i);
    Algebra next = detail::at_stage(i, [&] {
      if (spec.iota_at(i) == PlpKind::III)
        return plp_I(prev, lift_descriptor(t.source.zdescs[i - 2], spec.ranks, i - 1), G);
      return plp_II(prev, G);
    });
    t.stages.push_back(std::move(next));
  }
  t.fused = fuse_type2_chains(t.stages.back());
  return t;
}

// ---------------------------------------------------------------------------
// Density witnesses

namespace detail {

inline bool fiber_allows(const Algebra &P, const Elem &f, Mark m) {
  switch (m) {
  case Mark::Bot: return P.kind() == Algebra::Kind::PlpIII;
  case Mark::Top: return P.kind() == Algebra::Kind::PlpIV || in_subgroup(P.x(), f, P.z());
  case Mark::Val: return in_subgroup(P.x(), f, P.v());
  }
  return false;
}

std::optional<Elem> above(const Algebra &A, const Elem &x);
std::optional<Elem> below(const Algebra &A, const Elem &y);

inline std::optional<Elem> above_in_fiber(const Algebra &P, const Elem &e) {
  const Elem &f = e.first();
  switch (e.mark()) {
  case Mark::Bot:
    if (fiber_allows(P, f, Mark::Val)) return Elem::pair_val(f, P.y().unit());
    if (fiber_allows(P, f, Mark::Top)) return Elem::pair_top(f);
    return std::nullopt;
  case Mark::Val:
    if (auto b = above(P.y(), e.second())) return Elem::pair_val(f, *b);
    return Elem::pair_top(f);
  case Mark::Top: return std::nullopt;
  }
  return std::nullopt;
}

inline std::optional<Elem> below_in_fiber(const Algebra &P, const Elem &e) {
  const Elem &f = e.first();
  switch (e.mark()) {
  case Mark::Top:
    if (fiber_allows(P, f, Mark::Val)) return Elem::pair_val(f, P.y().unit());
    if (fiber_allows(P, f, Mark::Bot)) return Elem::pair_bot(f);
    return std::nullopt;
  case Mark::Val:
    if (auto b = below(P.y(), e.second())) return Elem::pair_val(f, *b);
    if (fiber_allows(P, f, Mark::Bot)) return Elem::pair_bot(f);
    return std::nullopt;
  case Mark::Bot: return std::nullopt;
  }
  return std::nullopt;
}

inline Elem fiber_any(const Algebra &P, Elem f) {
  return P.kind() == Algebra::Kind::PlpIII ? Elem::pair_bot(std::move(f)) : Elem::pair_top(std::move(f));
}

/// Some element strictly above x, if any.
inline std::optional<Elem> above(const Algebra &A, const Elem &x) {
  switch (A.kind()) {
  case Algebra::Kind::Base:
    switch (A.chain().kind()) {
    case GroupChain::Kind::Trivial: return std::nullopt;
    case GroupChain::Kind::QChain: return Elem::leaf(x.group().rat() + Rational(1));
    case GroupChain::Kind::ZLex: return Elem::leaf(group_succ(A.chain(), x.group()));
    }
    return std::nullopt;
  case Algebra::Kind::Bounded:
    if (x.kind() == Elem::Kind::TopBound) return std::nullopt;
    if (x.kind() == Elem::Kind::BotBound) return A.unit();
    if (auto a = above(A.inner(), x)) return a;
    return Elem::top_bound();
  default:
    if (auto a = above_in_fiber(A, x)) return a;
    if (auto a = above(A.x(), x.first())) return fiber_any(A, *a);
    return std::nullopt;
  }
}

/// Some element strictly below y, if any.
inline std::optional<Elem> below(const Algebra &A, const Elem &y) {
  switch (A.kind()) {
  case Algebra::Kind::Base:
    switch (A.chain().kind()) {
    case GroupChain::Kind::Trivial: return std::nullopt;
    case GroupChain::Kind::QChain: return Elem::leaf(y.group().rat() - Rational(1));
    case GroupChain::Kind::ZLex: return Elem::leaf(group_pred(A.chain(), y.group()));
    }
    return std::nullopt;
  case Algebra::Kind::Bounded:
    if (y.kind() == Elem::Kind::BotBound) return std::nullopt;
    if (y.kind() == Elem::Kind::TopBound) return A.unit();
    if (auto b = below(A.inner(), y)) return b;
    return Elem::bot_bound();
  default:
    if (auto b = below_in_fiber(A, y)) return b;
    if (auto b = below(A.x(), y.first())) return fiber_any(A, *b);
    return std::nullopt;
  }
}

/// Some z with x < z < y, or nullopt when y covers x. Requires x < y.
inline std::optional<Elem> try_between(const Algebra &A, const Elem &x, const Elem &y) {
  switch (A.kind()) {
  case Algebra::Kind::Base:
    switch (A.chain().kind()) {
    case GroupChain::Kind::Trivial: return std::nullopt;
    case GroupChain::Kind::QChain: return Elem::leaf(midpoint(x.group().rat(), y.group().rat()));
    case GroupChain::Kind::ZLex: {
      GroupElem s = group_succ(A.chain(), x.group());
      if (s == y.group()) return std::nullopt;
      return Elem::leaf(std::move(s));
    }
    }
    return std::nullopt;
  case Algebra::Kind::Bounded:
    if (x.kind() == Elem::Kind::BotBound) {
      if (y.kind() == Elem::Kind::TopBound) return A.unit();
      return below(A.inner(), y);
    }
    if (y.kind() == Elem::Kind::TopBound) return above(A.inner(), x);
    return try_between(A.inner(), x, y);
  default: break;
  }
  const Elem &x1 = x.first();
  const Elem &y1 = y.first();
  if (detail::compare(A.x(), x1, y1) < 0) {
    // first-coordinate gap: a dense witness there, else the edges of the fibers
    if (auto z = try_between(A.x(), x1, y1)) return fiber_any(A, *z);
    if (auto a = above_in_fiber(A, x)) return a;
    if (auto b = below_in_fiber(A, y)) return b;
    return std::nullopt;
  }
  const Mark s1 = x.mark(), s2 = y.mark();
  if (s1 == Mark::Val && s2 == Mark::Val) {
    if (auto c = try_between(A.y(), x.second(), y.second())) return Elem::pair_val(x1, *c);
    return std::nullopt;
  }
  if (s1 == Mark::Bot && s2 == Mark::Val) {
    if (auto c = below(A.y(), y.second())) return Elem::pair_val(x1, *c);
    return std::nullopt;
  }
  if (s1 == Mark::Val && s2 == Mark::Top) {
    if (auto c = above(A.y(), x.second())) return Elem::pair_val(x1, *c);
    return std::nullopt;
  }
  // (f, Bot) < (f, Top): only a value second can sit in between
  if (fiber_allows(A, x1, Mark::Val)) return Elem::pair_val(x1, A.y().unit());
  return std::nullopt;
}

/// Human-readable reason why A's order has covers.
inline std::string density_blocker(const Algebra &A) {
  switch (A.kind()) {
  case Algebra::Kind::Base:
    return A.chain().kind() == GroupChain::Kind::ZLex ? "Z^k is discretely ordered" : "";
  case Algebra::Kind::Bounded:
    if (!A.inner().unbounded()) return "inner chain is bounded";
    return density_blocker(A.inner());
  case Algebra::Kind::PlpIII:
    if (A.z() != A.v()) return "Z \\ V carries only the markers Bot < Top, which form a gap";
    if (!A.x().dense()) return "first factor has covers: " + density_blocker(A.x());
    if (!A.y().unbounded()) return "second factor is bounded, so Bot or Top is a cover";
    return "second factor has covers: " + density_blocker(A.y());
  case Algebra::Kind::PlpIV:
    if (!A.y().unbounded()) return "second factor is bounded, so Top is a cover";
    if (!A.y().dense()) return "second factor has covers: " + density_blocker(A.y());
    return "a cover of first coordinates leaves (x, Top) covered by (y, Top)";
  }
  return "";
}

} // namespace detail

/// Some z with x < z < y in a densely ordered chain.
inline Elem between(const Algebra &A, const Elem &x, const Elem &y) {
  if (!less(A, x, y)) throw ValidationError("between requires x < y");
  if (!A.dense()) throw NotDense("order has covers: " + detail::density_blocker(A));
  if (auto z = detail::try_between(A, x, y)) return *z;
  throw NotDense("no element strictly between the given pair");
}

// ---------------------------------------------------------------------------
// Closure experiment

struct ClosureResult {
  std::vector<Elem> tau_values; // distinct, in discovery order
  std::size_t elements = 0;     // size of the closed set
  bool complete = true;         // false when the element budget was hit
  std::size_t distinct_tau() const { return tau_values.size(); }
};

/// Close the generators under ∘, →, ¬, ∧, ∨ for `depth` rounds and collect
/// the τ-values of everything reached.
inline ClosureResult closure_tau_count(const Algebra &A, const std::vector<Elem> &generators, int depth,
                                       std::size_t budget = 200000) {
  if (depth < 0) throw ValidationError("depth must be non-negative");
  std::vector<Elem> all;
  std::unordered_set<Elem, ElemHash> seen;
  ClosureResult res;
  auto add = [&](const Elem &e) {
    if (seen.insert(e).second) all.push_back(e);
  };
  for (const auto &g : generators) {
    detail::require(A, g);
    add(g);
  }
  for (int d = 0; d < depth && res.complete; ++d) {
    const std::size_t n = all.size();
    for (std::size_t i = 0; i < n && res.complete; ++i) {
      add(detail::neg(A, Elem(all[i])));
      for (std::size_t j = 0; j < n; ++j) {
        const Elem a = all[i], b = all[j];
        if (j >= i) add(detail::mult(A, a, b));
        add(detail::residuum(A, a, b));
        if (j > i) {
          bool le = detail::compare(A, a, b) <= 0;
          add(le ? a : b);
          add(le ? b : a);
        }
        if (all.size() > budget) {
          res.complete = false;
          break;
        }
      }
    }
  }
  std::unordered_set<Elem, ElemHash> taus;
  for (const auto &e : all) {
    Elem t = detail::residuum(A, e, e);
    if (taus.insert(t).second) res.tau_values.push_back(t);
  }
  res.elements = all.size();
  return res;
}

} // namespace oddchain

#endif // ODDCHAIN_TOWERS_HPP
