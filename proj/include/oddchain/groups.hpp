#ifndef ODDCHAIN_GROUPS_HPP
#define ODDCHAIN_GROUPS_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace oddchain {

using IntVector = std::vector<std::int64_t>;

/// Element of Z^k (lexicographic) or of Q. The trivial group's single
/// element is the zero-length IntVector.
class GroupElem {
public:
  GroupElem() = default;
  GroupElem(IntVector v) : value_(std::move(v)) {} // NOLINT
  GroupElem(Rational q) : value_(q) {}             // NOLINT

  static GroupElem integer(std::int64_t n) { return GroupElem(IntVector{n}); }

  bool is_vector() const noexcept { return std::holds_alternative<IntVector>(value_); }
  bool is_rational() const noexcept { return std::holds_alternative<Rational>(value_); }
  const IntVector &vec() const { return std::get<IntVector>(value_); }
  const Rational &rat() const { return std::get<Rational>(value_); }

  friend bool operator==(const GroupElem &, const GroupElem &) = default;

  std::size_t hash() const noexcept {
    if (is_rational()) return std::hash<Rational>{}(rat()) * 31 + 7;
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto c : vec()) h = (h ^ std::hash<std::int64_t>{}(c)) * 0x100000001b3ULL;
    return h;
  }

private:
  std::variant<IntVector, Rational> value_{IntVector{}};
};

/// A linearly ordered abelian group viewed as an odd FL_e-chain:
/// product is +, negation is -, t = f = 0.
class GroupChain {
public:
  enum class Kind { ZLex, QChain, Trivial };

  static GroupChain zlex(int rank) {
    if (rank < 1) throw ShapeError("ZLex rank must be at least 1");
    return GroupChain(Kind::ZLex, rank);
  }
  static GroupChain rationals() { return GroupChain(Kind::QChain, 1); }
  static GroupChain trivial() { return GroupChain(Kind::Trivial, 0); }
  /// ZLex(k) for k >= 1, Trivial for k = 0.
  static GroupChain integers_pow(int k) { return k == 0 ? trivial() : zlex(k); }

  Kind kind() const noexcept { return kind_; }
  /// Number of coordinates (k for ZLex, 1 for Q, 0 for Trivial).
  int rank() const noexcept { return rank_; }
  bool discretely_ordered() const noexcept { return kind_ == Kind::ZLex; }

  friend bool operator==(const GroupChain &, const GroupChain &) = default;

  bool has(const GroupElem &a) const {
    if (kind_ == Kind::QChain) return a.is_rational();
    return a.is_vector() && static_cast<int>(a.vec().size()) == rank_;
  }

private:
  GroupChain(Kind k, int r) : kind_(k), rank_(r) {}
  Kind kind_;
  int rank_;
};

namespace detail {
inline void require_member(const GroupChain &g, const GroupElem &a) {
  if (!g.has(a)) throw ShapeError("group element does not match the group's shape");
}
} // namespace detail

inline std::strong_ordering group_compare(const GroupChain &g, const GroupElem &a,
                                          const GroupElem &b) {
  detail::require_member(g, a);
  detail::require_member(g, b);
  if (g.kind() == GroupChain::Kind::QChain) return a.rat() <=> b.rat();
  // leftmost differing coordinate decides
  const auto &x = a.vec();
  const auto &y = b.vec();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return x[i] <=> y[i];
  return std::strong_ordering::equal;
}

inline GroupElem group_unit(const GroupChain &g) {
  if (g.kind() == GroupChain::Kind::QChain) return Rational(0);
  return IntVector(static_cast<std::size_t>(g.rank()), 0);
}

inline GroupElem group_op(const GroupChain &g, const GroupElem &a, const GroupElem &b) {
  detail::require_member(g, a);
  detail::require_member(g, b);
  if (g.kind() == GroupChain::Kind::QChain) return a.rat() + b.rat();
  IntVector r(a.vec().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = detail::checked_add(a.vec()[i], b.vec()[i]);
  return r;
}

inline GroupElem group_inv(const GroupChain &g, const GroupElem &a) {
  detail::require_member(g, a);
  if (g.kind() == GroupChain::Kind::QChain) return -a.rat();
  IntVector r(a.vec().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = detail::checked_neg(a.vec()[i]);
  return r;
}

namespace detail {
inline GroupElem shift_last(const GroupChain &g, const GroupElem &a, std::int64_t by) {
  require_member(g, a);
  if (!g.discretely_ordered())
    throw NotDiscretelyOrdered(g.kind() == GroupChain::Kind::QChain
                                   ? "Q is densely ordered and has no covers"
                                   : "the trivial group has no covers");
  IntVector r = a.vec();
  r.back() = checked_add(r.back(), by);
  return r;
}
} // namespace detail

/// Upper cover in a discretely ordered group: last coordinate + 1.
inline GroupElem group_succ(const GroupChain &g, const GroupElem &a) {
  return detail::shift_last(g, a, 1);
}

/// Lower cover in a discretely ordered group: last coordinate - 1.
inline GroupElem group_pred(const GroupChain &g, const GroupElem &a) {
  return detail::shift_last(g, a, -1);
}

// ---------------------------------------------------------------------------
// Subgroup descriptors

/// Kind of a flattened group-part coordinate.
enum class CoordKind { Int, Rat };

struct CoordConstraint {
  enum class Kind { MultiplesOf, ZeroOnly, All };

  Kind kind = Kind::All;
  Rational step = 1; // meaningful for MultiplesOf only; positive

  static CoordConstraint multiples_of(Rational d) {
    if (d.sign() <= 0) throw ValidationError("subgroup step must be positive");
    return {Kind::MultiplesOf, d};
  }
  static CoordConstraint zero_only() { return {Kind::ZeroOnly, 1}; }
  static CoordConstraint all() { return {Kind::All, 1}; }

  bool accepts(const Rational &c) const {
    switch (kind) {
    case Kind::All: return true;
    case Kind::ZeroOnly: return c.sign() == 0;
    case Kind::MultiplesOf: return (c / step).is_integer();
    }
    return false;
  }

  friend bool operator==(const CoordConstraint &a, const CoordConstraint &b) {
    if (a.kind != b.kind) return false;
    return a.kind != Kind::MultiplesOf || a.step == b.step;
  }
};

/// Coordinatewise subgroup of a group part (one entry per flattened
/// coordinate). The accepted set is always a subgroup.
using SubgroupDescriptor = std::vector<CoordConstraint>;

inline SubgroupDescriptor full_descriptor(std::size_t n) {
  return SubgroupDescriptor(n, CoordConstraint::all());
}

/// Flattened coordinates of a bare group element.
inline std::vector<Rational> group_coords(const GroupElem &a) {
  if (a.is_rational()) return {a.rat()};
  std::vector<Rational> out;
  out.reserve(a.vec().size());
  for (auto c : a.vec()) out.emplace_back(c);
  return out;
}

inline bool descriptor_accepts(const SubgroupDescriptor &d, const std::vector<Rational> &coords) {
  if (d.size() != coords.size())
    throw ShapeError("descriptor length " + std::to_string(d.size()) +
                     " does not match element with " + std::to_string(coords.size()) +
                     " coordinates");
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!d[i].accepts(coords[i])) return false;
  return true;
}

inline bool subgroup_contains(const SubgroupDescriptor &d, const GroupElem &a) {
  return descriptor_accepts(d, group_coords(a));
}

/// Normal form relative to coordinate kinds: All on an integer coordinate
/// becomes MultiplesOf(1). Validates steps (integral on integer coordinates).
inline SubgroupDescriptor canonicalize(const SubgroupDescriptor &d,
                                       const std::vector<CoordKind> &kinds) {
  if (d.size() != kinds.size())
    throw ShapeError("descriptor has " + std::to_string(d.size()) + " entries, group part has " +
                     std::to_string(kinds.size()) + " coordinates");
  SubgroupDescriptor out = d;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (kinds[i] != CoordKind::Int) continue;
    if (out[i].kind == CoordConstraint::Kind::All)
      out[i] = CoordConstraint::multiples_of(1);
    else if (out[i].kind == CoordConstraint::Kind::MultiplesOf && !out[i].step.is_integer())
      throw ValidationError("non-integral step " + out[i].step.str() + " on an integer coordinate");
  }
  return out;
}

/// Whether the subgroup described by `sub` is contained in the one described
/// by `super`. Both must already be canonical for `kinds`.
inline bool refines(const SubgroupDescriptor &sub, const SubgroupDescriptor &super) {
  if (sub.size() != super.size()) throw ShapeError("descriptor length mismatch");
  using K = CoordConstraint::Kind;
  for (std::size_t i = 0; i < sub.size(); ++i) {
    const auto &a = sub[i];
    const auto &b = super[i];
    if (a.kind == K::ZeroOnly || b.kind == K::All) continue;
    if (b.kind == K::ZeroOnly) return false;
    if (a.kind == K::All) return false; // b is MultiplesOf, coordinate is rational
    if (!(a.step / b.step).is_integer()) return false;
  }
  return true;
}

namespace detail {
inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  return narrow(static_cast<__int128>(a / std::gcd(a, b)) * b);
}
} // namespace detail

/// Coordinatewise intersection of two subgroups.
inline SubgroupDescriptor intersect(const SubgroupDescriptor &a, const SubgroupDescriptor &b) {
  if (a.size() != b.size()) throw ShapeError("descriptor length mismatch");
  using K = CoordConstraint::Kind;
  SubgroupDescriptor out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].kind == K::ZeroOnly || b[i].kind == K::ZeroOnly) out[i] = CoordConstraint::zero_only();
    else if (a[i].kind == K::All) out[i] = b[i];
    else if (b[i].kind == K::All) out[i] = a[i];
    else {
      // lcm(p/q, r/s) = lcm(p, r) / gcd(q, s) for fractions in lowest terms
      const Rational &x = a[i].step;
      const Rational &y = b[i].step;
      out[i] = CoordConstraint::multiples_of(
          Rational(detail::lcm64(x.num(), y.num()), std::gcd(x.den(), y.den())));
    }
  }
  return out;
}

} // namespace oddchain

#endif // ODDCHAIN_GROUPS_HPP
