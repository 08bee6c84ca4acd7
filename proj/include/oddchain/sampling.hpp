#ifndef ODDCHAIN_SAMPLING_HPP
#define ODDCHAIN_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "core.hpp"

namespace oddchain {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]. Plain modulo keeps draws identical across
/// standard libraries, which std::uniform_int_distribution does not.
inline std::int64_t draw(Rng &rng, std::int64_t lo, std::int64_t hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

/// Random coordinates accepted by d, each numerator bounded by `radius` steps.
inline std::vector<Rational> sample_coords(const std::vector<CoordKind> &kinds, const SubgroupDescriptor &d,
                                           Rng &rng, std::int64_t radius) {
  std::vector<Rational> out;
  out.reserve(kinds.size());
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    const auto &c = d[i];
    switch (c.kind) {
    case CoordConstraint::Kind::ZeroOnly: out.emplace_back(0); break;
    case CoordConstraint::Kind::MultiplesOf: out.push_back(c.step * Rational(draw(rng, -radius, radius))); break;
    case CoordConstraint::Kind::All:
      if (kinds[i] == CoordKind::Int) {
        out.emplace_back(draw(rng, -radius, radius));
      } else {
        std::int64_t den = draw(rng, 1, 4);
        out.emplace_back(draw(rng, -radius * den, radius * den), den);
      }
      break;
    }
  }
  return out;
}

/// Random element of the subgroup of A_gr described by d (over A's coordinates).
inline Elem sample_group(const Algebra &A, const SubgroupDescriptor &d, Rng &rng, std::int64_t radius = 4) {
  return from_gr_coords(A, sample_coords(A.gr_kinds(), d, rng, radius));
}

/// Random carrier element. Group-part elements, markers and bounds all get a
/// fair share so products and negations hit every branch.
inline Elem sample(const Algebra &A, Rng &rng, std::int64_t radius = 4) {
  switch (A.kind()) {
  case Algebra::Kind::Base: return sample_group(A, A.gr_desc(), rng, radius);
  case Algebra::Kind::Bounded: {
    auto r = draw(rng, 0, 19);
    if (r == 0) return Elem::top_bound();
    if (r == 1) return Elem::bot_bound();
    return sample(A.inner(), rng, radius);
  }
  case Algebra::Kind::PlpIII: {
    const Algebra &X = A.x();
    auto r = draw(rng, 0, 9);
    if (r < 4) return Elem::pair_val(sample_group(X, A.v(), rng, radius), sample(A.y(), rng, radius));
    if (r < 6) return Elem::pair_top(sample_group(X, A.z(), rng, radius));
    if (r < 8) return Elem::pair_bot(sample_group(X, A.z(), rng, radius));
    return Elem::pair_bot(sample(X, rng, radius));
  }
  case Algebra::Kind::PlpIV: {
    const Algebra &X = A.x();
    auto r = draw(rng, 0, 9);
    if (r < 5) return Elem::pair_val(sample_group(X, A.v(), rng, radius), sample(A.y(), rng, radius));
    if (r < 7) return Elem::pair_top(sample_group(X, X.gr_desc(), rng, radius));
    return Elem::pair_top(sample(X, rng, radius));
  }
  }
  return A.unit();
}

namespace detail {

inline void window_coords(const std::vector<CoordKind> &kinds, const SubgroupDescriptor &d, std::int64_t radius,
                          std::size_t i, std::vector<Rational> &cur, std::vector<std::vector<Rational>> &out,
                          std::size_t cap) {
  if (out.size() >= cap) return;
  if (i == kinds.size()) {
    out.push_back(cur);
    return;
  }
  std::vector<Rational> vals;
  const auto &c = d[i];
  if (c.kind == CoordConstraint::Kind::ZeroOnly) {
    vals.emplace_back(0);
  } else if (c.kind == CoordConstraint::Kind::MultiplesOf) {
    for (std::int64_t n = -radius; n <= radius; ++n) vals.push_back(c.step * Rational(n));
  } else if (kinds[i] == CoordKind::Int) {
    for (std::int64_t n = -radius; n <= radius; ++n) vals.emplace_back(n);
  } else {
    for (std::int64_t n = -2 * radius; n <= 2 * radius; ++n) vals.emplace_back(n, 2);
  }
  for (const auto &v : vals) {
    cur.push_back(v);
    window_coords(kinds, d, radius, i + 1, cur, out, cap);
    cur.pop_back();
  }
}

inline std::vector<Elem> window_group(const Algebra &A, const SubgroupDescriptor &d, std::int64_t radius,
                                      std::size_t cap) {
  std::vector<std::vector<Rational>> coords;
  std::vector<Rational> cur;
  window_coords(A.gr_kinds(), d, radius, 0, cur, coords, cap);
  std::vector<Elem> out;
  out.reserve(coords.size());
  for (const auto &c : coords) out.push_back(from_gr_coords(A, c));
  return out;
}

inline std::vector<Elem> window(const Algebra &A, std::int64_t radius, int depth, int full_depth,
                                std::size_t cap) {
  const std::int64_t r = depth < full_depth ? radius : 0;
  switch (A.kind()) {
  case Algebra::Kind::Base: return window_group(A, A.gr_desc(), r, cap);
  case Algebra::Kind::Bounded: {
    std::vector<Elem> out{Elem::bot_bound()};
    for (auto &e : window(A.inner(), radius, depth, full_depth, cap)) out.push_back(std::move(e));
    out.push_back(Elem::top_bound());
    return out;
  }
  default: break;
  }
  std::vector<Elem> out;
  auto firsts = window(A.x(), radius, depth + 1, full_depth, cap);
  auto seconds = window(A.y(), radius, depth + 1, full_depth, cap);
  for (const auto &f : firsts) {
    if (A.kind() == Algebra::Kind::PlpIII) out.push_back(Elem::pair_bot(f));
    if (in_subgroup(A.x(), f, A.v()))
      for (const auto &s : seconds) {
        if (out.size() >= cap) break;
        out.push_back(Elem::pair_val(f, s));
      }
    if (A.kind() == Algebra::Kind::PlpIV || in_subgroup(A.x(), f, A.z())) out.push_back(Elem::pair_top(f));
    if (out.size() >= cap) break;
  }
  return out;
}

} // namespace detail

/// Finite window of the carrier: group coordinates in [-radius, radius]
/// (halves for rational coordinates) down to `full_depth` levels of nesting,
/// only zero below that, plus every admissible marker and bound. At most
/// `cap` elements, deterministic order.
inline std::vector<Elem> enumerate_window(const Algebra &A, std::int64_t radius, int full_depth = 2,
                                          std::size_t cap = 50000) {
  return detail::window(A, radius, 0, full_depth, cap);
}

} // namespace oddchain

#endif // ODDCHAIN_SAMPLING_HPP
