#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nsmooth/polynomial.hpp"

namespace nsmooth {

using Normal = std::array<long, 2>;  // inward, primitive, both components >= 0

// One face of the staircase frontier. Bounded edges run between consecutive
// hull vertices; the vertical ray sits above the first vertex (normal (1,0))
// and the horizontal ray right of the last vertex (normal (0,1)).
struct Edge {
  enum class Kind { bounded, vertical_ray, horizontal_ray };
  Kind kind = Kind::bounded;
  ExpPoint a;                       // upper endpoint (larger n); ray base for rays
  ExpPoint b;                       // lower endpoint; equals a for rays
  Normal normal{0, 0};
  long offset = 0;                  // normal . z == offset on the edge
  std::vector<ExpPoint> support;    // E intersected with the input set

  bool on_edge(ExpPoint p) const {
    return normal[0] * p.m + normal[1] * p.n == offset;
  }
};

// Frontier of conv(support + first quadrant).
// vertices: decreasing n, increasing m. edges: vertical ray, bounded edges
// top to bottom, horizontal ray.
struct NewtonPolyhedron {
  std::vector<ExpPoint> vertices;
  std::vector<Edge> edges;

  bool contains(ExpPoint p) const;
  const Edge& vertical_ray() const { return edges.front(); }
  const Edge& horizontal_ray() const { return edges.back(); }
  std::vector<Edge> bounded_edges() const;

  // The axis edge E_{t1} is the horizontal ray when its support lies on n = 0;
  // likewise E_{t2} and the vertical ray on m = 0.
  bool horizontal_ray_is_axis_edge() const;
  bool vertical_ray_is_axis_edge() const;
};

NewtonPolyhedron build_polyhedron(const std::vector<ExpPoint>& support);

// min{t : (t,t) in the polyhedron}; the largest diagonal intercept over edges.
Rat newton_distance(const NewtonPolyhedron& N);

// (v1*m + v2*n)/(v1 + v2).
Rat delta_v(Normal v, ExpPoint mono);
// min over the support of P.
Rat delta_v(Normal v, const Polynomial& P);

// Sum of the terms of P supported on edge E.
Polynomial edge_polynomial(const Polynomial& P, const Edge& E);

std::string edge_describe(const Edge& E);

}  // namespace nsmooth
