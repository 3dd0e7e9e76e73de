#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsmooth/newton_data.hpp"

namespace nsmooth {

// Nonvanishing certificate for one tested polynomial.
// kind: edge-hessian | axis-t1 | axis-t2 | mixed-t2-on-P1 | mixed-t1-on-P2.
// On failure, witness_slice names the line (t1=1, t1=-1, t2=1, t2=-1) and
// witness_interval isolates a root of the sliced polynomial on it.
struct ConditionCheck {
  std::string kind;
  std::string edge;      // human-readable edge description
  std::string tested;    // the polynomial whose nonvanishing was tested
  bool pass = true;
  std::string witness_slice;
  std::optional<std::pair<Rat, Rat>> witness_interval;
};

struct ConditionReport {
  std::vector<ConditionCheck> checks;
  bool hessian_pass = true;  // edge-hessian + axis entries
  bool mixed_pass = true;    // mixed entries on P1/P2 edges
  bool all_pass = true;
  std::vector<std::string> notes;
};

// Decides the two curvature hypotheses exactly.
//  - Every E in the hull of P off the axes: det Hessian of P_E nonzero for
//    t1*t2 != 0, by Sturm root counts on the four slices t1 = +-1, t2 = +-1
//    (sufficient and necessary by quasi-homogeneity of P_E).
//  - Axis edges: second derivative of the pure part nonvanishing off 0.
//  - Edges of N(P1) (resp. N(P2)) that are not edges of N(P): second t2
//    (resp. t1) derivative of the edge polynomial nonzero for t1*t2 != 0.
// "off the origin" is read off the coordinate axes for the Hessian entries;
// axis behavior is carried by the axis entries (noted in the report).
ConditionReport check_conditions(const Polynomial& P, const NewtonData& data);

// Exact nonvanishing of Q on {t1*t2 != 0}. Uses the slice method when Q is
// quasi-homogeneous; otherwise falls back to an interval-arithmetic
// subdivision certificate on [-1,1]^2 minus the axes (depth-limited).
// On failure fills slice/interval with an isolating witness.
bool nonvanishing_off_axes(const Polynomial& Q, std::string* witness_slice,
                           std::optional<std::pair<Rat, Rat>>* witness_interval);

}  // namespace nsmooth
