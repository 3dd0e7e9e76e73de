#include "nsmooth/newton_polyhedron.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nsmooth {

namespace {

long cross(ExpPoint o, ExpPoint a, ExpPoint b) {
  return (a.m - o.m) * (b.n - o.n) - (a.n - o.n) * (b.m - o.m);
}

// Geometric membership in the edge as a point set (segment or ray).
bool edge_contains(const Edge& E, ExpPoint p) {
  if (!E.on_edge(p)) return false;
  switch (E.kind) {
    case Edge::Kind::vertical_ray:
      return p.n >= E.a.n;
    case Edge::Kind::horizontal_ray:
      return p.m >= E.a.m;
    case Edge::Kind::bounded:
      return E.a.m <= p.m && p.m <= E.b.m;
  }
  return false;
}

}  // namespace

NewtonPolyhedron build_polyhedron(const std::vector<ExpPoint>& support) {
  if (support.empty())
    throw std::invalid_argument("polyhedron of empty support");

  std::vector<ExpPoint> pts(support.begin(), support.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // Pareto staircase: strictly increasing m, strictly decreasing n.
  std::vector<ExpPoint> stair;
  for (const ExpPoint& p : pts) {
    if (!stair.empty() && p.n >= stair.back().n) continue;
    stair.push_back(p);
  }

  // Convex chain; pop while the middle point fails the strict turn.
  std::vector<ExpPoint> verts;
  for (const ExpPoint& p : stair) {
    while (verts.size() >= 2 &&
           cross(verts[verts.size() - 2], verts.back(), p) <= 0)
      verts.pop_back();
    verts.push_back(p);
  }

  NewtonPolyhedron N;
  N.vertices = verts;

  Edge vray;
  vray.kind = Edge::Kind::vertical_ray;
  vray.a = vray.b = verts.front();
  vray.normal = {1, 0};
  vray.offset = verts.front().m;
  N.edges.push_back(vray);

  for (std::size_t k = 0; k + 1 < verts.size(); ++k) {
    ExpPoint A = verts[k], B = verts[k + 1];
    long dn = A.n - B.n;  // > 0
    long dm = B.m - A.m;  // > 0
    long g = std::gcd(dn, dm);
    Edge e;
    e.kind = Edge::Kind::bounded;
    e.a = A;
    e.b = B;
    e.normal = {dn / g, dm / g};
    e.offset = e.normal[0] * A.m + e.normal[1] * A.n;
    N.edges.push_back(e);
  }

  Edge hray;
  hray.kind = Edge::Kind::horizontal_ray;
  hray.a = hray.b = verts.back();
  hray.normal = {0, 1};
  hray.offset = verts.back().n;
  N.edges.push_back(hray);

  for (Edge& e : N.edges)
    for (const ExpPoint& p : pts)
      if (edge_contains(e, p)) e.support.push_back(p);

  return N;
}

bool NewtonPolyhedron::contains(ExpPoint p) const {
  for (const Edge& e : edges)
    if (e.normal[0] * p.m + e.normal[1] * p.n < e.offset) return false;
  return true;
}

std::vector<Edge> NewtonPolyhedron::bounded_edges() const {
  std::vector<Edge> out;
  for (const Edge& e : edges)
    if (e.kind == Edge::Kind::bounded) out.push_back(e);
  return out;
}

bool NewtonPolyhedron::horizontal_ray_is_axis_edge() const {
  return vertices.back().n == 0;
}

bool NewtonPolyhedron::vertical_ray_is_axis_edge() const {
  return vertices.front().m == 0;
}

Rat newton_distance(const NewtonPolyhedron& N) {
  Rat best(0);
  bool first = true;
  for (const Edge& e : N.edges) {
    Rat t = Rat(e.offset) / Rat(e.normal[0] + e.normal[1]);
    if (first || t > best) best = t;
    first = false;
  }
  return best;
}

Rat delta_v(Normal v, ExpPoint mono) {
  return Rat(v[0] * mono.m + v[1] * mono.n) / Rat(v[0] + v[1]);
}

Rat delta_v(Normal v, const Polynomial& P) {
  if (P.is_zero())
    throw std::invalid_argument("weighted distance of zero polynomial");
  bool first = true;
  Rat best(0);
  for (const auto& [e, c] : P.terms()) {
    Rat d = delta_v(v, e);
    if (first || d < best) best = d;
    first = false;
  }
  return best;
}

Polynomial edge_polynomial(const Polynomial& P, const Edge& E) {
  return P.filter([&E](ExpPoint p) { return edge_contains(E, p); });
}

std::string edge_describe(const Edge& E) {
  std::ostringstream os;
  switch (E.kind) {
    case Edge::Kind::vertical_ray:
      os << "vertical ray from (" << E.a.m << "," << E.a.n << ")";
      break;
    case Edge::Kind::horizontal_ray:
      os << "horizontal ray from (" << E.a.m << "," << E.a.n << ")";
      break;
    case Edge::Kind::bounded:
      os << "edge (" << E.a.m << "," << E.a.n << ")-(" << E.b.m << ","
         << E.b.n << "), normal (" << E.normal[0] << "," << E.normal[1] << ")";
      break;
  }
  return os.str();
}

}  // namespace nsmooth
