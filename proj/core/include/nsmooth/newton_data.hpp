#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsmooth/newton_polyhedron.hpp"
#include "nsmooth/polynomial.hpp"

namespace nsmooth {

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Frontier support point of P1, or the formal vertical-ray point (M, inf).
// ray_distance is the diagonal coordinate of the ray from (ms, 0) through the
// point; absent when the ray misses the diagonal (note says why).
struct Candidate {
  long m = 0;
  long n = 0;          // ignored when n_inf
  bool n_inf = false;  // the formal point (M, inf)
  std::optional<Rat> ray_distance;
  std::string note;

  bool same_point(const Candidate& o) const {
    return m == o.m && n_inf == o.n_inf && (n_inf || n == o.n);
  }
};

// Chain node (M_k, N_k). A formal start has n_inf; the formal terminal on the
// horizontal ray has m_inf.
struct ChainPoint {
  long m = 0;
  long n = 0;
  bool m_inf = false;
  bool n_inf = false;
};

enum class RConvention { literal, exclude_axis };

std::string to_string(RConvention c);

struct NewtonData {
  Polynomial P, P1, P2;
  NewtonPolyhedron hull;
  std::optional<NewtonPolyhedron> hull1;  // absent when P1 == 0
  Rat delta;
  std::optional<long> ms, ns;  // nullopt encodes infinity
  std::optional<long> M;       // min m over the support of P1
  bool swapped = false;        // t1 and t2 were exchanged during normalization

  std::vector<Candidate> candidates;
  std::optional<Candidate> start;  // (M_s, N_s); absent when P1 == 0

  // Membership sets under each convention. The chain does not depend on the
  // convention: past the start every chain vertex has m > 0.
  std::vector<Candidate> R_literal;
  std::vector<Candidate> R_exclude_axis;

  // (M_1, N_1) .. (M_{q+1}, N_{q+1}) with normals v_1 .. v_q; normals[k] is
  // orthogonal to the segment chain[k] .. chain[k+1].
  std::vector<ChainPoint> chain;
  std::vector<Normal> chain_normals;

  const std::vector<Candidate>& r_set(RConvention c) const {
    return c == RConvention::literal ? R_literal : R_exclude_axis;
  }
  bool r_nonempty(RConvention c) const { return !r_set(c).empty(); }
};

// Exchanges t1 and t2 when the pure-t2 minimal exponent is smaller than the
// pure-t1 one, so that ms = min(ms, ns) afterwards. Errors when the support
// has no pure monomial at all.
std::pair<Polynomial, bool> swap_normalize(const Polynomial& P);

// P1 keeps the terms with n > 0; P2 keeps the terms with m > 0.
std::pair<Polynomial, Polynomial> derive_P1_P2(const Polynomial& P);

// Diagonal coordinate of the ray from (ms, 0) through (m, n):
// n*ms/(n - m + ms). Throws when the ray is parallel to the diagonal or
// meets it behind the ray origin.
Rat delta_ray(long ms, ExpPoint mono);

// Full ray-distance data: candidates, (M_s, N_s), both R sets, chain.
// Requires swap_normalize applied (ms finite). swapped is recorded in the
// result for report plumbing.
NewtonData build_r_enumeration(const Polynomial& P, bool swapped = false);

}  // namespace nsmooth
