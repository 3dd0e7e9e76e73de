#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nsmooth/polynomial.hpp"

namespace nsmooth {

// Interval endpoint; nullopt value means the infinite end of the real line.
struct RootBound {
  std::optional<Rat> value;
  static RootBound neg_inf() { return {}; }
  static RootBound pos_inf() { return {}; }
  static RootBound at(Rat v) { return {std::move(v)}; }
};

// Number of distinct real roots of p in the open interval (lo, hi).
// Exact, via a Sturm chain on the squarefree part; endpoint roots are
// divided out first so open-interval semantics hold. p must be nonzero.
int count_real_roots(const UniPoly& p, const RootBound& lo,
                     const RootBound& hi);

inline int count_real_roots(const UniPoly& p) {
  return count_real_roots(p, RootBound::neg_inf(), RootBound::pos_inf());
}

// Disjoint open rational intervals, one isolating each distinct real root,
// in increasing order. Rational roots appear as degenerate [r, r] intervals.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UniPoly& p);

// All roots lie in (-bound, bound).
Rat cauchy_root_bound(const UniPoly& p);

UniPoly squarefree_part(const UniPoly& p);

}  // namespace nsmooth
