#ifndef ODDCHAIN_PLP_HPP
#define ODDCHAIN_PLP_HPP

#include <optional>
#include <string>

#include "algebra.hpp"
#include "core.hpp"

namespace oddchain {

enum class PlpKind { I, II, III, IV };

inline const char *to_string(PlpKind k) {
  switch (k) {
  case PlpKind::I: return "I";
  case PlpKind::II: return "II";
  case PlpKind::III: return "III";
  case PlpKind::IV: return "IV";
  }
  return "?";
}

/// Structural discrete-embedding predicate for the group part.
///
/// Base(Z^k) is discrete, Base(Q) and Base(1) are not. For a product the
/// covers of a group element (v, y) live at the same first coordinate, so the
/// answer is inherited from the second factor (which is never bounded here).
inline bool is_grpart_discretely_embedded(const Algebra &A) {
  if (A.is_bounded()) throw PreconditionViolation("algebra is bounded");
  return A.discrete_gr();
}

/// Build a partial lexicographic product and check its well-definedness.
///
/// Type III needs V ≤ Z ≤ X_gr; type I is III with V = Z. Type IV needs
/// V ≤ X_gr and X_gr discretely embedded into X; type II is IV with V = X_gr.
/// Missing descriptors default to the full group part (and V to Z for III).
/// Descriptors are canonicalized: All on an integer coordinate becomes
/// MultiplesOf(1).
inline Algebra build_plp(PlpKind kind, const Algebra &X, std::optional<SubgroupDescriptor> Z,
                         std::optional<SubgroupDescriptor> V, const Algebra &Y) {
  if (X.is_bounded() || Y.is_bounded()) throw PreconditionViolation("operand is bounded");
  if (rank(X) != 0 || rank(Y) != 0) throw PreconditionViolation("operand is not odd");
  const auto &kinds = X.gr_kinds();
  auto canon = [&](const SubgroupDescriptor &d, const char *what) {
    try {
      return canonicalize(d, kinds);
    } catch (const Error &e) {
      throw PreconditionViolation(std::string(what) + " descriptor invalid (" + e.what() + ")");
    }
  };
  const SubgroupDescriptor full = X.gr_desc();

  switch (kind) {
  case PlpKind::I:
  case PlpKind::III: {
    SubgroupDescriptor z = Z ? canon(*Z, "Z") : full;
    SubgroupDescriptor v = kind == PlpKind::I ? z : (V ? canon(*V, "V") : z);
    if (kind == PlpKind::I && V && canon(*V, "V") != z)
      throw PreconditionViolation("type I requires V = Z");
    if (!refines(z, full)) throw PreconditionViolation("Z is not a subgroup of the group part");
    if (!refines(v, z)) throw PreconditionViolation("V is not a subgroup of Z");
    return make_plp3_unchecked(X, std::move(z), std::move(v), Y);
  }
  case PlpKind::II:
  case PlpKind::IV: {
    SubgroupDescriptor v = kind == PlpKind::II ? full : (V ? canon(*V, "V") : full);
    if (kind == PlpKind::II && V && canon(*V, "V") != full)
      throw PreconditionViolation("type II requires V = the full group part");
    if (!refines(v, full)) throw PreconditionViolation("V is not a subgroup of the group part");
    if (!X.discrete_gr()) throw PreconditionViolation("group part not discretely embedded");
    return make_plp4_unchecked(X, std::move(v), Y);
  }
  }
  throw PreconditionViolation("unknown product kind");
}

inline Algebra plp_I(const Algebra &X, const SubgroupDescriptor &Z, const Algebra &Y) {
  return build_plp(PlpKind::I, X, Z, std::nullopt, Y);
}
inline Algebra plp_II(const Algebra &X, const Algebra &Y) {
  return build_plp(PlpKind::II, X, std::nullopt, std::nullopt, Y);
}
inline Algebra plp_III(const Algebra &X, const SubgroupDescriptor &Z, const SubgroupDescriptor &V,
                       const Algebra &Y) {
  return build_plp(PlpKind::III, X, Z, V, Y);
}
inline Algebra plp_IV(const Algebra &X, const SubgroupDescriptor &V, const Algebra &Y) {
  return build_plp(PlpKind::IV, X, std::nullopt, V, Y);
}

/// Carrier test against the product's carrier equation.
inline bool plp_contains(const Algebra &P, const Elem &e) {
  if (!P.is_plp()) throw ShapeError("not a partial lexicographic product");
  if (!e.is_pair()) throw ShapeError("a product element must be a pair");
  return contains(P, e);
}

} // namespace oddchain

#endif // ODDCHAIN_PLP_HPP
