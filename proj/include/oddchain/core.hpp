#ifndef ODDCHAIN_CORE_HPP
#define ODDCHAIN_CORE_HPP

#include <compare>

#include "algebra.hpp"
#include "error.hpp"

namespace oddchain {

// Unchecked recursive kernels. Arguments are assumed to be carrier members.
namespace detail {

inline std::strong_ordering compare(const Algebra &A, const Elem &a, const Elem &b) {
  switch (A.kind()) {
  case Algebra::Kind::Base: return group_compare(A.chain(), a.group(), b.group());
  case Algebra::Kind::Bounded: {
    auto rank = [](const Elem &e) { return e.kind() == Elem::Kind::BotBound ? 0 : e.kind() == Elem::Kind::TopBound ? 2 : 1; };
    int ra = rank(a), rb = rank(b);
    if (ra != 1 || rb != 1) return ra <=> rb;
    return compare(A.inner(), a, b);
  }
  default: {
    auto c = compare(A.x(), a.first(), b.first());
    if (c != 0) return c;
    if (a.mark() != b.mark()) return a.mark() <=> b.mark();
    if (a.mark() != Mark::Val) return std::strong_ordering::equal;
    return compare(A.y(), a.second(), b.second());
  }
  }
}

inline Elem mult(const Algebra &A, const Elem &a, const Elem &b) {
  switch (A.kind()) {
  case Algebra::Kind::Base: return Elem::leaf(group_op(A.chain(), a.group(), b.group()));
  case Algebra::Kind::Bounded:
    // Bot was adjoined last, so it annihilates Top as well.
    if (a.kind() == Elem::Kind::BotBound || b.kind() == Elem::Kind::BotBound) return Elem::bot_bound();
    if (a.kind() == Elem::Kind::TopBound || b.kind() == Elem::Kind::TopBound) return Elem::top_bound();
    return mult(A.inner(), a, b);
  default: {
    Elem first = mult(A.x(), a.first(), b.first());
    if (a.mark() == Mark::Bot || b.mark() == Mark::Bot) return Elem::pair_bot(std::move(first));
    if (a.mark() == Mark::Top || b.mark() == Mark::Top) return Elem::pair_top(std::move(first));
    return Elem::pair_val(std::move(first), mult(A.y(), a.second(), b.second()));
  }
  }
}

inline Elem cover_shift(const Algebra &A, const Elem &a, bool down) {
  switch (A.kind()) {
  case Algebra::Kind::Base:
    if (!A.chain().discretely_ordered())
      throw UndefinedCover("group part of a densely ordered or trivial chain has no covers");
    return Elem::leaf(down ? group_pred(A.chain(), a.group()) : group_succ(A.chain(), a.group()));
  case Algebra::Kind::Bounded:
    if (a.is_bound()) throw UndefinedCover("global bounds are not in the group part");
    return cover_shift(A.inner(), a, down);
  default:
    if (!a.is_pair() || a.mark() != Mark::Val)
      throw UndefinedCover("element is not in the group part");
    // the cover stays at the same first coordinate
    return Elem::pair_val(a.first(), cover_shift(A.y(), a.second(), down));
  }
}

inline Elem neg(const Algebra &A, const Elem &a) {
  switch (A.kind()) {
  case Algebra::Kind::Base: return Elem::leaf(group_inv(A.chain(), a.group()));
  case Algebra::Kind::Bounded:
    if (a.kind() == Elem::Kind::TopBound) return Elem::bot_bound();
    if (a.kind() == Elem::Kind::BotBound) return Elem::top_bound();
    return neg(A.inner(), a);
  case Algebra::Kind::PlpIII: {
    Elem nx = neg(A.x(), a.first());
    if (!in_subgroup(A.x(), a.first(), A.z())) return Elem::pair_bot(std::move(nx));
    switch (a.mark()) {
    case Mark::Top: return Elem::pair_bot(std::move(nx));
    case Mark::Bot: return Elem::pair_top(std::move(nx));
    case Mark::Val: return Elem::pair_val(std::move(nx), neg(A.y(), a.second()));
    }
    break;
  }
  case Algebra::Kind::PlpIV: {
    Elem nx = neg(A.x(), a.first());
    if (a.mark() == Mark::Val) return Elem::pair_val(std::move(nx), neg(A.y(), a.second()));
    // (x, Top): shift down by one cover when x is in the group part
    if (gr_coords(A.x(), a.first())) return Elem::pair_top(cover_shift(A.x(), nx, true));
    return Elem::pair_top(std::move(nx));
  }
  }
  throw ShapeError("malformed element");
}

inline Elem residuum(const Algebra &A, const Elem &a, const Elem &b) {
  return neg(A, mult(A, a, neg(A, b)));
}

} // namespace detail

namespace detail {
inline void require(const Algebra &A, const Elem &e) {
  if (!contains(A, e)) throw MembershipError("element is not in the carrier of the algebra");
}
} // namespace detail

/// Three-way comparison in the chain order.
inline std::strong_ordering compare(const Algebra &A, const Elem &a, const Elem &b) {
  detail::require(A, a);
  detail::require(A, b);
  return detail::compare(A, a, b);
}

inline bool leq(const Algebra &A, const Elem &a, const Elem &b) { return compare(A, a, b) <= 0; }
inline bool less(const Algebra &A, const Elem &a, const Elem &b) { return compare(A, a, b) < 0; }

/// Lattice meet; chains only.
inline Elem meet(const Algebra &A, const Elem &a, const Elem &b) { return leq(A, a, b) ? a : b; }
inline Elem join(const Algebra &A, const Elem &a, const Elem &b) { return leq(A, a, b) ? b : a; }

/// Monoidal product, coordinatewise on pairs.
inline Elem mult(const Algebra &A, const Elem &a, const Elem &b) {
  detail::require(A, a);
  detail::require(A, b);
  return detail::mult(A, a, b);
}

/// Residual complement ¬a = a → f.
inline Elem neg(const Algebra &A, const Elem &a) {
  detail::require(A, a);
  return detail::neg(A, a);
}

/// a → b, computed as ¬(a ∘ ¬b).
inline Elem residuum(const Algebra &A, const Elem &a, const Elem &b) {
  detail::require(A, a);
  detail::require(A, b);
  return detail::residuum(A, a, b);
}

/// τ(a) = a → a. Its range is exactly the positive idempotents.
inline Elem tau(const Algebra &A, const Elem &a) {
  detail::require(A, a);
  return detail::residuum(A, a, a);
}

/// a ∈ X_gr, i.e. a ∘ ¬a = t.
inline bool group_part_contains(const Algebra &A, const Elem &a) {
  detail::require(A, a);
  return detail::mult(A, a, detail::neg(A, a)) == A.unit();
}

namespace detail {
inline void require_cover_domain(const Algebra &A, const Elem &a) {
  require(A, a);
  if (!A.discrete_gr()) throw UndefinedCover("group part is not discretely embedded");
  if (!gr_coords(A, a)) throw UndefinedCover("element is not in the group part");
}
} // namespace detail

/// Unique lower cover of a group-part element.
inline Elem cover_down(const Algebra &A, const Elem &a) {
  detail::require_cover_domain(A, a);
  return detail::cover_shift(A, a, true);
}

/// Unique upper cover of a group-part element.
inline Elem cover_up(const Algebra &A, const Elem &a) {
  detail::require_cover_domain(A, a);
  return detail::cover_shift(A, a, false);
}

/// Adjoin a top and then a bottom annihilator; negation swaps them.
inline Algebra adjoin_bounds(const Algebra &A) {
  if (A.is_bounded()) throw PreconditionViolation("algebra is already bounded");
  return make_bounded_unchecked(A);
}

/// Sign of t compared with f: 0 for every odd chain.
inline int rank(const Algebra &A) {
  auto c = detail::compare(A, A.unit(), detail::neg(A, A.unit()));
  return c < 0 ? -1 : c > 0 ? 1 : 0;
}

} // namespace oddchain

#endif // ODDCHAIN_CORE_HPP
