#ifndef ODDCHAIN_ALGEBRA_HPP
#define ODDCHAIN_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "elem.hpp"
#include "groups.hpp"

namespace oddchain {

namespace detail {
struct AlgebraNode;
}

/// Recursive descriptor of an odd FL_e-chain.
///
///   Base(G)             a linearly ordered abelian group
///   PlpIII(X, Z, V, Y)  type III partial lexicographic product (type I when V = Z)
///   PlpIV(X, V, Y)      type IV partial lexicographic product (type II when V = X_gr)
///   Bounded(A)          A with a top and a bottom annihilator adjoined
///
/// Subgroup descriptors are stored canonicalized against the group part of X.
/// Structural order facts (unit, group-part shape, density, discrete
/// embedding of the group part) are computed once at construction.
/// Descriptors are immutable and cheap to copy.
class Algebra {
public:
  enum class Kind { Base, PlpIII, PlpIV, Bounded };

  Algebra(); // Base(Trivial)

  static Algebra base(GroupChain g);

  Kind kind() const;
  const GroupChain &chain() const;
  const Algebra &x() const;
  const Algebra &y() const;
  const Algebra &inner() const;
  const SubgroupDescriptor &z() const;
  const SubgroupDescriptor &v() const;

  bool is_plp() const { return kind() == Kind::PlpIII || kind() == Kind::PlpIV; }
  bool is_bounded() const { return kind() == Kind::Bounded; }
  bool is_type_I() const;
  bool is_type_II() const;

  /// Display name ("Z_3", "Q_2"); empty for anonymous descriptors.
  const std::string &name() const;
  Algebra named(std::string name) const;

  const Elem &unit() const;
  /// Kinds of the flattened coordinates of the group part.
  const std::vector<CoordKind> &gr_kinds() const;
  /// The group part as a subgroup of the flattened coordinate space.
  const SubgroupDescriptor &gr_desc() const;
  /// Group part discretely embedded into the carrier (structural criterion).
  bool discrete_gr() const;
  /// The order has no covers at all.
  bool dense() const;
  /// No least and no greatest element.
  bool unbounded() const;
  /// Every element that is an end of a covering pair lies in the group part.
  bool covers_in_gr() const;

  /// Structural equality; display names are ignored.
  friend bool operator==(const Algebra &a, const Algebra &b);

private:
  friend struct detail::AlgebraNode;
  explicit Algebra(std::shared_ptr<const detail::AlgebraNode> n) : node_(std::move(n)) {}
  friend Algebra make_plp3_unchecked(Algebra, SubgroupDescriptor, SubgroupDescriptor, Algebra);
  friend Algebra make_plp4_unchecked(Algebra, SubgroupDescriptor, Algebra);
  friend Algebra make_bounded_unchecked(Algebra);

  std::shared_ptr<const detail::AlgebraNode> node_;
};

namespace detail {

struct AlgebraNode {
  Algebra::Kind kind = Algebra::Kind::Base;
  GroupChain chain = GroupChain::trivial();
  std::optional<Algebra> x, y; // PlpIII/PlpIV: X, Y; Bounded: inner in x
  SubgroupDescriptor z, v;
  std::string name;

  Elem unit;
  std::vector<CoordKind> gr_kinds;
  SubgroupDescriptor gr_desc;
  bool discrete_gr = false;
  bool dense = false;
  bool unbounded = false;
  bool covers_in_gr = true;
};

inline void finish_base(AlgebraNode &n) {
  const auto &g = n.chain;
  n.unit = Elem::leaf(group_unit(g));
  if (g.kind() == GroupChain::Kind::QChain) n.gr_kinds = {CoordKind::Rat};
  else n.gr_kinds.assign(static_cast<std::size_t>(g.rank()), CoordKind::Int);
  n.gr_desc = canonicalize(full_descriptor(n.gr_kinds.size()), n.gr_kinds);
  n.discrete_gr = g.kind() == GroupChain::Kind::ZLex;
  n.dense = g.kind() != GroupChain::Kind::ZLex;
  n.unbounded = g.kind() != GroupChain::Kind::Trivial;
  n.covers_in_gr = true;
}

inline void finish_plp(AlgebraNode &n) {
  const Algebra &X = *n.x;
  const Algebra &Y = *n.y;
  n.unit = Elem::pair_val(X.unit(), Y.unit());
  n.gr_kinds = X.gr_kinds();
  n.gr_kinds.insert(n.gr_kinds.end(), Y.gr_kinds().begin(), Y.gr_kinds().end());
  n.gr_desc = n.v;
  n.gr_desc.insert(n.gr_desc.end(), Y.gr_desc().begin(), Y.gr_desc().end());
  // Covers of a group element (v, y) stay at first coordinate v.
  n.discrete_gr = Y.discrete_gr();
  n.unbounded = X.unbounded();
  if (n.kind == Algebra::Kind::PlpIII) {
    // Z \ V carries only {Bot, Top}, which always form a gap; a cover of
    // first coordinates leaves (x, max) covered by (y, Bot).
    const bool type_one = n.z == n.v;
    n.dense = X.dense() && Y.dense() && Y.unbounded() && type_one;
    n.covers_in_gr = X.dense() && type_one && Y.unbounded() && Y.covers_in_gr();
  } else {
    // (x, Top) is followed by (y, Top) when y covers x and y is outside V.
    const bool first_ok = X.dense() || (X.covers_in_gr() && n.v == X.gr_desc());
    n.dense = Y.dense() && Y.unbounded() && first_ok;
    n.covers_in_gr = Y.unbounded() && Y.covers_in_gr() && first_ok;
  }
}

inline void finish_bounded(AlgebraNode &n) {
  const Algebra &A = *n.x;
  n.unit = A.unit();
  n.gr_kinds = A.gr_kinds();
  n.gr_desc = A.gr_desc();
  n.discrete_gr = A.discrete_gr() && A.unbounded();
  n.dense = A.dense() && A.unbounded();
  n.unbounded = false;
  n.covers_in_gr = A.covers_in_gr() && A.unbounded();
}

} // namespace detail

inline Algebra::Algebra() : Algebra(base(GroupChain::trivial())) {}

inline Algebra Algebra::base(GroupChain g) {
  auto n = std::make_shared<detail::AlgebraNode>();
  n->kind = Kind::Base;
  n->chain = g;
  detail::finish_base(*n);
  return Algebra(std::move(n));
}

/// Raw constructors; descriptors must already be canonical. Validation lives
/// in build_plp / adjoin_bounds.
inline Algebra make_plp3_unchecked(Algebra X, SubgroupDescriptor Z, SubgroupDescriptor V, Algebra Y) {
  auto n = std::make_shared<detail::AlgebraNode>();
  n->kind = Algebra::Kind::PlpIII;
  n->x = std::move(X);
  n->y = std::move(Y);
  n->z = std::move(Z);
  n->v = std::move(V);
  detail::finish_plp(*n);
  return Algebra(std::move(n));
}

inline Algebra make_plp4_unchecked(Algebra X, SubgroupDescriptor V, Algebra Y) {
  auto n = std::make_shared<detail::AlgebraNode>();
  n->kind = Algebra::Kind::PlpIV;
  n->x = std::move(X);
  n->y = std::move(Y);
  n->z = n->x->gr_desc();
  n->v = std::move(V);
  detail::finish_plp(*n);
  return Algebra(std::move(n));
}

inline Algebra make_bounded_unchecked(Algebra A) {
  auto n = std::make_shared<detail::AlgebraNode>();
  n->kind = Algebra::Kind::Bounded;
  n->x = std::move(A);
  detail::finish_bounded(*n);
  return Algebra(std::move(n));
}

inline Algebra::Kind Algebra::kind() const { return node_->kind; }
inline const GroupChain &Algebra::chain() const { return node_->chain; }
inline const Algebra &Algebra::x() const { return *node_->x; }
inline const Algebra &Algebra::y() const { return *node_->y; }
inline const Algebra &Algebra::inner() const { return *node_->x; }
inline const SubgroupDescriptor &Algebra::z() const { return node_->z; }
inline const SubgroupDescriptor &Algebra::v() const { return node_->v; }
inline const std::string &Algebra::name() const { return node_->name; }
inline const Elem &Algebra::unit() const { return node_->unit; }
inline const std::vector<CoordKind> &Algebra::gr_kinds() const { return node_->gr_kinds; }
inline const SubgroupDescriptor &Algebra::gr_desc() const { return node_->gr_desc; }
inline bool Algebra::discrete_gr() const { return node_->discrete_gr; }
inline bool Algebra::dense() const { return node_->dense; }
inline bool Algebra::unbounded() const { return node_->unbounded; }
inline bool Algebra::covers_in_gr() const { return node_->covers_in_gr; }

inline bool Algebra::is_type_I() const { return kind() == Kind::PlpIII && z() == v(); }
inline bool Algebra::is_type_II() const { return kind() == Kind::PlpIV && v() == x().gr_desc(); }

inline Algebra Algebra::named(std::string name) const {
  auto n = std::make_shared<detail::AlgebraNode>(*node_);
  n->name = std::move(name);
  return Algebra(std::move(n));
}

inline bool operator==(const Algebra &a, const Algebra &b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
  case Algebra::Kind::Base: return a.chain() == b.chain();
  case Algebra::Kind::Bounded: return a.inner() == b.inner();
  case Algebra::Kind::PlpIII:
    return a.z() == b.z() && a.v() == b.v() && a.x() == b.x() && a.y() == b.y();
  case Algebra::Kind::PlpIV: return a.v() == b.v() && a.x() == b.x() && a.y() == b.y();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Carrier membership and group-part coordinates

/// Flattened coordinates of `e` if it has the shape of a group-part element
/// of A (leaf, or pair with a value second, recursively). Assumes e ∈ A.
inline std::optional<std::vector<Rational>> gr_coords(const Algebra &A, const Elem &e) {
  switch (A.kind()) {
  case Algebra::Kind::Base:
    if (!e.is_leaf()) return std::nullopt;
    return group_coords(e.group());
  case Algebra::Kind::Bounded:
    if (e.is_bound()) return std::nullopt;
    return gr_coords(A.inner(), e);
  default: {
    if (!e.is_pair() || e.mark() != Mark::Val) return std::nullopt;
    auto a = gr_coords(A.x(), e.first());
    if (!a) return std::nullopt;
    auto b = gr_coords(A.y(), e.second());
    if (!b) return std::nullopt;
    a->insert(a->end(), b->begin(), b->end());
    return a;
  }
  }
}

/// Whether x (a member of X) lies in the subgroup of X_gr described by d.
inline bool in_subgroup(const Algebra &X, const Elem &x, const SubgroupDescriptor &d) {
  auto c = gr_coords(X, x);
  return c && descriptor_accepts(d, *c);
}

/// Carrier membership, recursively validating components.
inline bool contains(const Algebra &A, const Elem &e) {
  switch (A.kind()) {
  case Algebra::Kind::Base: return e.is_leaf() && A.chain().has(e.group());
  case Algebra::Kind::Bounded: return e.is_bound() || contains(A.inner(), e);
  case Algebra::Kind::PlpIII:
    if (!e.is_pair() || !contains(A.x(), e.first())) return false;
    switch (e.mark()) {
    case Mark::Bot: return true;
    case Mark::Top: return in_subgroup(A.x(), e.first(), A.z());
    case Mark::Val: return contains(A.y(), e.second()) && in_subgroup(A.x(), e.first(), A.v());
    }
    return false;
  case Algebra::Kind::PlpIV:
    if (!e.is_pair() || !contains(A.x(), e.first())) return false;
    switch (e.mark()) {
    case Mark::Bot: return false;
    case Mark::Top: return true;
    case Mark::Val: return contains(A.y(), e.second()) && in_subgroup(A.x(), e.first(), A.v());
    }
    return false;
  }
  return false;
}

/// Structural group-part test: carrier member of group-part shape.
inline bool in_group_part(const Algebra &A, const Elem &e) {
  return contains(A, e) && gr_coords(A, e).has_value();
}

/// Group-part element of A with the given flattened coordinates.
inline Elem from_gr_coords(const Algebra &A, const std::vector<Rational> &coords) {
  if (coords.size() != A.gr_kinds().size()) throw ShapeError("coordinate count mismatch");
  switch (A.kind()) {
  case Algebra::Kind::Base: {
    if (A.chain().kind() == GroupChain::Kind::QChain) return Elem::leaf(coords[0]);
    IntVector v;
    for (const auto &c : coords) {
      if (!c.is_integer()) throw ShapeError("non-integral coordinate for Z^k");
      v.push_back(c.num());
    }
    return Elem::leaf(std::move(v));
  }
  case Algebra::Kind::Bounded: return from_gr_coords(A.inner(), coords);
  default: {
    auto split = coords.begin() + static_cast<std::ptrdiff_t>(A.x().gr_kinds().size());
    return Elem::pair_val(from_gr_coords(A.x(), {coords.begin(), split}),
                          from_gr_coords(A.y(), {split, coords.end()}));
  }
  }
}

} // namespace oddchain

#endif // ODDCHAIN_ALGEBRA_HPP
