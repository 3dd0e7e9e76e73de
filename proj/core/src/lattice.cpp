#include "nsmooth/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace nsmooth {

namespace {

long cross(Normal a, Normal b) { return a[0] * b[1] - a[1] * b[0]; }

bool slope_less(Normal a, Normal b) { return cross(a, b) > 0; }

}  // namespace

LatticeCover build_cover(std::vector<Normal> normals) {
  for (const Normal& v : normals) {
    if (v[0] < 0 || v[1] < 0 || (v[0] == 0 && v[1] == 0))
      throw LatticeError("directions must be nonzero and nonnegative");
    if (std::gcd(v[0], v[1]) != 1)
      throw LatticeError("directions must be primitive");
  }
  for (std::size_t k = 0; k + 1 < normals.size(); ++k)
    if (!slope_less(normals[k], normals[k + 1]))
      throw LatticeError("directions must be slope-ascending and distinct");

  if (normals.empty() || normals.front() != Normal{1, 0})
    normals.insert(normals.begin(), Normal{1, 0});
  if (normals.back() != Normal{0, 1}) normals.push_back(Normal{0, 1});

  LatticeCover cover;
  cover.normals = normals;
  for (std::size_t k = 0; k + 1 < normals.size(); ++k) {
    Normal a = normals[k], b = normals[k + 1];
    Cone cone;
    cone.a = a;
    cone.b = b;
    cone.det = cross(a, b);
    // Lattice points of {alpha*a + beta*b : alpha, beta in [0,1)}: scan the
    // bounding box and keep points whose Cramer coordinates lie in [0,1).
    for (long x = 0; x < std::max(a[0] + b[0], 1L); ++x) {
      for (long y = 0; y < std::max(a[1] + b[1], 1L); ++y) {
        long alpha_num = x * b[1] - y * b[0];
        long beta_num = y * a[0] - x * a[1];
        if (alpha_num < 0 || alpha_num >= cone.det) continue;
        if (beta_num < 0 || beta_num >= cone.det) continue;
        cone.shifts.push_back({x, y});
      }
    }
    std::sort(cone.shifts.begin(), cone.shifts.end());
    if (static_cast<long>(cone.shifts.size()) != cone.det)
      throw LatticeError("shift count does not match the cone determinant");
    cover.cones.push_back(std::move(cone));
  }
  return cover;
}

PointClass classify(const LatticeCover& cover, Normal p) {
  if (p[0] < 0 || p[1] < 0)
    throw LatticeError("point outside the first quadrant");
  if (p == Normal{0, 0}) {
    PointClass c;
    c.kind = PointClass::Kind::ray;
    c.index = 0;
    c.i = 0;
    return c;
  }
  for (std::size_t k = 0; k < cover.normals.size(); ++k) {
    Normal v = cover.normals[k];
    if (cross(v, p) != 0) continue;
    long i = v[0] != 0 ? p[0] / v[0] : p[1] / v[1];
    if (Normal{v[0] * i, v[1] * i} != p || i < 1)
      throw LatticeError("point parallel to a direction but not on the ray");
    PointClass c;
    c.kind = PointClass::Kind::ray;
    c.index = k;
    c.i = i;
    return c;
  }
  for (std::size_t k = 0; k < cover.cones.size(); ++k) {
    const Cone& cone = cover.cones[k];
    if (!(cross(cone.a, p) > 0 && cross(cone.b, p) < 0)) continue;
    long alpha_num = p[0] * cone.b[1] - p[1] * cone.b[0];
    long beta_num = p[1] * cone.a[0] - p[0] * cone.a[1];
    long i = alpha_num / cone.det;
    long l = beta_num / cone.det;
    PointClass c;
    c.kind = PointClass::Kind::cone;
    c.index = k;
    c.i = i;
    c.l = l;
    c.shift = {p[0] - cone.a[0] * i - cone.b[0] * l,
               p[1] - cone.a[1] * i - cone.b[1] * l};
    return c;
  }
  throw LatticeError("point not covered by any cone");
}

Normal unclassify(const LatticeCover& cover, const PointClass& c) {
  if (c.kind == PointClass::Kind::ray) {
    Normal v = cover.normals.at(c.index);
    return {v[0] * c.i, v[1] * c.i};
  }
  const Cone& cone = cover.cones.at(c.index);
  return {c.shift[0] + cone.a[0] * c.i + cone.b[0] * c.l,
          c.shift[1] + cone.a[1] * c.i + cone.b[1] * c.l};
}

std::vector<Normal> normal_fan(const NewtonData& data) {
  std::vector<Normal> out;
  auto add = [&out](const NewtonPolyhedron& hull) {
    for (const Edge& e : hull.bounded_edges()) out.push_back(e.normal);
  };
  add(data.hull);
  if (data.hull1) add(*data.hull1);
  std::sort(out.begin(), out.end(), slope_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace nsmooth
