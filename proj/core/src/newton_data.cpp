#include "nsmooth/newton_data.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace nsmooth {

std::string to_string(RConvention c) {
  return c == RConvention::literal ? "literal" : "exclude-axis";
}

namespace {

// Minimal pure-variable exponent: min{m : (m,0) in support} for t1.
std::optional<long> pure_order(const Polynomial& P, Var var) {
  std::optional<long> best;
  for (const auto& [e, c] : P.terms()) {
    long other = var == Var::t1 ? e.n : e.m;
    long own = var == Var::t1 ? e.m : e.n;
    if (other != 0) continue;
    if (!best || own < *best) best = own;
  }
  return best;
}

}  // namespace

std::pair<Polynomial, bool> swap_normalize(const Polynomial& P) {
  auto a = pure_order(P, Var::t1);
  auto b = pure_order(P, Var::t2);
  if (!a && !b)
    throw GeometryError("unsupported: no pure monomial in either variable");
  bool swap = !a || (b && *b < *a);
  return {swap ? P.swap_vars() : P, swap};
}

std::pair<Polynomial, Polynomial> derive_P1_P2(const Polynomial& P) {
  Polynomial P1 = P.filter([](ExpPoint e) { return e.n > 0; });
  Polynomial P2 = P.filter([](ExpPoint e) { return e.m > 0; });
  return {P1, P2};
}

Rat delta_ray(long ms, ExpPoint mono) {
  long den = mono.n - mono.m + ms;
  if (den == 0)
    throw GeometryError("ray through (" + std::to_string(mono.m) + "," +
                        std::to_string(mono.n) + ") is parallel to the diagonal");
  if (den < 0)
    throw GeometryError("ray through (" + std::to_string(mono.m) + "," +
                        std::to_string(mono.n) +
                        ") meets the diagonal behind the ray origin");
  return Rat(mono.n) * Rat(ms) / Rat(den);
}

namespace {

// delta and tie-break key for the start minimization; formal points lose
// every tie through the is_formal flag.
struct StartKey {
  Rat delta;
  Rat dist2;
  bool is_formal;

  bool operator<(const StartKey& o) const {
    if (delta != o.delta) return delta < o.delta;
    if (is_formal != o.is_formal) return !is_formal;
    return dist2 < o.dist2;
  }
};

void build_chain(NewtonData& d) {
  const NewtonPolyhedron& hull1 = *d.hull1;
  const auto& verts = hull1.vertices;
  auto bounded = hull1.bounded_edges();

  auto is_member = [&d](ExpPoint p) {
    for (const Candidate& c : d.R_literal)
      if (!c.n_inf && c.m == p.m && c.n == p.n) return true;
    return false;
  };

  const Candidate& start = *d.start;
  std::size_t next_idx = 0;
  if (start.n_inf) {
    d.chain.push_back({start.m, 0, false, true});
  } else {
    auto it = std::find(verts.begin(), verts.end(),
                        ExpPoint{start.m, start.n});
    if (it == verts.end())
      throw GeometryError("start point is not a frontier vertex");
    d.chain.push_back({start.m, start.n, false, false});
    next_idx = static_cast<std::size_t>(it - verts.begin()) + 1;
  }

  bool terminated = false;
  for (std::size_t k = next_idx; k < verts.size(); ++k) {
    Normal v{1, 0};
    if (!d.chain.back().n_inf) {
      // consecutive hull vertices; k >= 1 here
      v = bounded[k - 1].normal;
    }
    d.chain_normals.push_back(v);
    d.chain.push_back({verts[k].m, verts[k].n, false, false});
    if (!is_member(verts[k])) {
      terminated = true;
      break;
    }
  }
  if (!terminated) {
    d.chain_normals.push_back({0, 1});
    d.chain.push_back({0, d.chain.back().n, true, false});
  }

  // Strict increase of the ray distances over the member prefix.
  long ms = *d.ms;
  Rat prev;
  bool have_prev = false;
  for (std::size_t k = 0; k + 1 < d.chain.size(); ++k) {
    const ChainPoint& c = d.chain[k];
    Rat dv = c.n_inf ? Rat(ms) : delta_ray(ms, {c.m, c.n});
    if (have_prev && !(prev < dv)) {
      std::ostringstream os;
      os << "chain ray distances fail to increase at index " << k;
      throw GeometryError(os.str());
    }
    prev = dv;
    have_prev = true;
  }
}

}  // namespace

NewtonData build_r_enumeration(const Polynomial& P, bool swapped) {
  if (P.is_zero()) throw GeometryError("unsupported: zero polynomial");
  if (P.coeff({0, 0}) != 0)
    throw GeometryError("unsupported: constant term present");

  NewtonData d;
  d.P = P;
  d.swapped = swapped;
  std::tie(d.P1, d.P2) = derive_P1_P2(P);
  d.hull = build_polyhedron(P.support());
  d.delta = newton_distance(d.hull);
  d.ms = pure_order(P, Var::t1);
  d.ns = pure_order(P, Var::t2);
  if (!d.ms)
    throw GeometryError("unsupported: no pure t1 monomial (not normalized)");
  long ms = *d.ms;

  if (d.P1.is_zero()) return d;
  d.hull1 = build_polyhedron(d.P1.support());

  long M = d.hull1->vertices.front().m;
  d.M = M;

  // Frontier support points, top to bottom, then the formal point first.
  std::set<ExpPoint> frontier;
  for (const Edge& e : d.hull1->edges)
    for (const ExpPoint& p : e.support) frontier.insert(p);

  Candidate formal;
  formal.m = M;
  formal.n_inf = true;
  formal.ray_distance = Rat(ms);
  formal.note = "formal vertical-ray point";
  d.candidates.push_back(formal);

  std::vector<ExpPoint> reals(frontier.begin(), frontier.end());
  std::sort(reals.begin(), reals.end(), [](ExpPoint a, ExpPoint b) {
    if (a.n != b.n) return a.n > b.n;
    return a.m < b.m;
  });
  for (const ExpPoint& p : reals) {
    Candidate c;
    c.m = p.m;
    c.n = p.n;
    long den = p.n - p.m + ms;
    if (den > 0) {
      c.ray_distance = Rat(p.n) * Rat(ms) / Rat(den);
    } else if (den == 0) {
      c.note = "ray parallel to the diagonal";
    } else {
      c.note = "ray meets the diagonal behind its origin";
    }
    d.candidates.push_back(c);
  }

  // Start: least ray distance, ties by squared distance to (ms, 0).
  std::optional<StartKey> best;
  for (const Candidate& c : d.candidates) {
    if (!c.ray_distance) continue;
    StartKey key;
    key.delta = *c.ray_distance;
    key.is_formal = c.n_inf;
    if (!c.n_inf) {
      Rat dm = Rat(c.m - ms);
      key.dist2 = dm * dm + Rat(c.n) * Rat(c.n);
    }
    if (!best || key < *best) {
      best = key;
      d.start = c;
    }
  }
  if (!d.start)
    throw GeometryError("no candidate ray meets the diagonal");

  bool start_formal = d.start->n_inf;
  long Ns = start_formal ? 0 : d.start->n;

  std::vector<Candidate> real_members;
  for (const Candidate& c : d.candidates) {
    if (c.n_inf || !c.ray_distance) continue;
    if (!(2 * *c.ray_distance <= Rat(c.n))) continue;
    if (!start_formal && c.n > Ns) continue;
    real_members.push_back(c);
  }
  // n = inf passes 2*delta <= n always and n <= N_s exactly when N_s = inf.
  if (start_formal) d.R_literal.push_back(formal);
  for (const Candidate& c : real_members) d.R_literal.push_back(c);

  for (const Candidate& c : d.R_literal)
    if (c.n_inf || c.m != 0) d.R_exclude_axis.push_back(c);

  if (!d.R_literal.empty()) {
    bool start_is_member = false;
    for (const Candidate& c : d.R_literal)
      if (c.same_point(*d.start)) start_is_member = true;
    if (!start_is_member)
      throw GeometryError("membership set does not contain the start point");
    build_chain(d);
  }
  return d;
}

}  // namespace nsmooth
