#pragma once

// Brute-force reference computations, deliberately independent of the
// closed-form kernels they check.

#include <algorithm>
#include <optional>
#include <vector>

#include "oddchain/oddchain.hpp"

namespace oracle {

using namespace oddchain;

/// max{ v in window : a∘v ≤ b }, by scanning. Only meaningful when the
/// true residuum lies in the window.
inline std::optional<Elem> residuum_by_scan(const Algebra &A, const std::vector<Elem> &window, const Elem &a,
                                            const Elem &b) {
  std::optional<Elem> best;
  for (const auto &v : window)
    if (leq(A, mult(A, a, v), b) && (!best || less(A, *best, v))) best = v;
  return best;
}

/// Positive idempotents in a finite window.
inline std::vector<Elem> positive_idempotents(const Algebra &A, const std::vector<Elem> &window) {
  std::vector<Elem> out;
  for (const auto &p : window)
    if (leq(A, A.unit(), p) && mult(A, p, p) == p) out.push_back(p);
  return out;
}

/// Naive closure under ∘, →, ¬, min, max with linear dedup; returns the
/// distinct τ-values.
inline std::vector<Elem> closure_taus(const Algebra &A, std::vector<Elem> set, int depth) {
  auto add = [&](std::vector<Elem> &s, const Elem &e) {
    if (std::find(s.begin(), s.end(), e) == s.end()) s.push_back(e);
  };
  for (int d = 0; d < depth; ++d) {
    std::vector<Elem> next = set;
    for (const auto &a : set) {
      add(next, neg(A, a));
      for (const auto &b : set) {
        add(next, mult(A, a, b));
        add(next, residuum(A, a, b));
        add(next, meet(A, a, b));
        add(next, join(A, a, b));
      }
    }
    set = std::move(next);
  }
  std::vector<Elem> taus;
  for (const auto &e : set) add(taus, residuum(A, e, e));
  return taus;
}

/// Lexicographic comparison of integer vectors, written out longhand.
inline int lex_compare(const std::vector<std::int64_t> &a, const std::vector<std::int64_t> &b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

} // namespace oracle
