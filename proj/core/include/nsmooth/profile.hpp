#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nsmooth/newton_data.hpp"

namespace nsmooth {

struct ProfileError : std::runtime_error {
  explicit ProfileError(const std::string& msg, int offending_k = -1)
      : std::runtime_error(msg), k(offending_k) {}
  int k;
};

struct LinePiece {
  Rat x_lo, x_hi;      // x = 1/p, within [0, 1/2]
  Rat slope, intercept;
  std::string label;   // "2/p", "1/delta", "l^{vk}", ...
  bool degenerate = false;  // zero-length interval, kept for traceability

  Rat value_at(const Rat& x) const { return slope * x + intercept; }
};

// Piecewise-linear exponent profile on x = 1/p in [0, 1/2]. The bound the
// profile represents is strict (alpha < profile(1/p)).
struct Profile {
  std::vector<LinePiece> pieces;  // abutting, x_lo increasing
  Rat delta;
  bool r_nonempty = false;
  RConvention convention = RConvention::literal;

  Rat evaluate(const Rat& x) const;

  // Exact structural checks: cover of [0,1/2], junction continuity,
  // nonincreasing slopes left to right... empty string when consistent.
  std::string validate() const;
};

// Piecewise display of the main profile, branching on R-emptiness under the
// chosen convention. Verifies the strict increase of the chain ray distances
// and junction continuity; throws ProfileError carrying the offending index.
Profile smoothing_profile(const NewtonData& data, RConvention convention);

// Two-monomial display for support {(m,0),(M,N)} along one direction v.
// equal_case selects the constant display when the two weighted distances
// coincide (otherwise coinciding distances are an error).
Profile strip_profile(const Polynomial& P, Normal v, bool equal_case = false);

// Two-direction display for support {(m,0),(M,N)}; slope(w) > slope(v).
// Membership of (M,N) in R is decided through the weighted-distance
// inequality characterization, evaluated exactly.
Profile strip_profile(const Polynomial& P, Normal v, Normal w);

// TSV polyline "x\talpha" sampled at all breakpoints.
std::string profile_tsv(const Profile& p);

}  // namespace nsmooth
