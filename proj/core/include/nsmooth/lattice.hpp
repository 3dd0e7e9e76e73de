#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nsmooth/newton_data.hpp"

namespace nsmooth {

struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cone spanned by consecutive normals a, b (slope(a) < slope(b)).
// shifts are the lattice points of the half-open fundamental parallelogram
// {alpha*a + beta*b : alpha, beta in [0,1)}; their count equals det.
struct Cone {
  Normal a, b;
  long det = 0;  // a.m * b.n - a.n * b.m > 0
  std::vector<Normal> shifts;
};

struct LatticeCover {
  std::vector<Normal> normals;  // slope-ascending, (1,0) and (0,1) sentinels
  std::vector<Cone> cones;      // cones[k] spans normals[k], normals[k+1]
};

// Class of one lattice point. Ray points are n_k * i (the origin is i = 0 on
// the first ray). Cone points carry the unique (shift, i, l) with
// p = shift + a*i + b*l; the zero shift forces i, l >= 1 so ray points are
// never double-covered.
struct PointClass {
  enum class Kind { ray, cone };
  Kind kind = Kind::ray;
  std::size_t index = 0;  // ray index or cone index
  long i = 0;
  long l = 0;        // cone only
  Normal shift{0, 0};  // cone only
};

// Validates slope-ascending pairwise non-parallel normals, appends the
// sentinels when absent, and enumerates every cone's shift set.
LatticeCover build_cover(std::vector<Normal> normals);

PointClass classify(const LatticeCover& cover, Normal point);

// Reconstructs the point from its class; classify . unclassify == id.
Normal unclassify(const LatticeCover& cover, const PointClass& c);

// Bounded-edge normals of the hull of P and the hull of P1, deduplicated,
// slope-ascending: the direction fan the decomposition runs over.
std::vector<Normal> normal_fan(const NewtonData& data);

}  // namespace nsmooth
