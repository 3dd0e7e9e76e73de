#include "nsmooth/conditions.hpp"

#include <algorithm>

#include "nsmooth/parallel.hpp"
#include "nsmooth/sturm.hpp"

namespace nsmooth {

namespace {

bool same_edge(const Edge& x, const Edge& y) {
  if (x.kind != y.kind) return false;
  if (x.kind == Edge::Kind::bounded)
    return x.a == y.a && x.b == y.b;
  return x.a == y.a;
}

bool collinear_support(const std::vector<ExpPoint>& pts) {
  if (pts.size() <= 2) return true;
  ExpPoint o = pts[0];
  long dm = pts[1].m - o.m, dn = pts[1].n - o.n;
  for (std::size_t k = 2; k < pts.size(); ++k) {
    long em = pts[k].m - o.m, en = pts[k].n - o.n;
    if (dm * en - dn * em != 0) return false;
  }
  return true;
}

int nonzero_real_roots(const UniPoly& q) {
  if (uni_is_zero(q)) return -1;  // caller treats as identically zero
  return count_real_roots(q, RootBound::neg_inf(), RootBound::at(Rat(0))) +
         count_real_roots(q, RootBound::at(Rat(0)), RootBound::pos_inf());
}

// First isolating interval of a nonzero root; q(0) != 0 is arranged by
// stripping the monomial factor first.
std::optional<std::pair<Rat, Rat>> nonzero_root_witness(UniPoly q) {
  std::size_t shift = 0;
  while (shift < q.size() && q[shift] == 0) ++shift;
  q.erase(q.begin(), q.begin() + static_cast<long>(shift));
  for (const auto& iv : isolate_real_roots(q))
    if (!(iv.first == 0 && iv.second == 0)) return iv;
  return std::nullopt;
}

struct Interval {
  Rat lo, hi;
};

Interval ival_pow(const Interval& x, long e) {
  if (e == 0) return {Rat(1), Rat(1)};
  Interval acc = x;
  for (long k = 1; k < e; ++k) {
    Rat c1 = acc.lo * x.lo, c2 = acc.lo * x.hi, c3 = acc.hi * x.lo,
        c4 = acc.hi * x.hi;
    acc.lo = min(min(c1, c2), min(c3, c4));
    acc.hi = max(max(c1, c2), max(c3, c4));
  }
  return acc;
}

Interval ival_eval(const Polynomial& Q, const Interval& x, const Interval& y) {
  Interval sum{Rat(0), Rat(0)};
  for (const auto& [e, c] : Q.terms()) {
    Interval t{Rat(1), Rat(1)};
    if (e.m > 0) t = ival_pow(x, e.m);
    Interval ty{Rat(1), Rat(1)};
    if (e.n > 0) ty = ival_pow(y, e.n);
    Rat c1 = t.lo * ty.lo, c2 = t.lo * ty.hi, c3 = t.hi * ty.lo,
        c4 = t.hi * ty.hi;
    Interval p{min(min(c1, c2), min(c3, c4)), max(max(c1, c2), max(c3, c4))};
    if (c >= 0) {
      sum.lo += c * p.lo;
      sum.hi += c * p.hi;
    } else {
      sum.lo += c * p.hi;
      sum.hi += c * p.lo;
    }
  }
  return sum;
}

enum class BoxVerdict { certified, zero_found, inconclusive };

BoxVerdict certify_box(const Polynomial& Q, Interval x, Interval y, int depth,
                       Rat* zx, Rat* zy) {
  Interval v = ival_eval(Q, x, y);
  if (v.lo > 0 || v.hi < 0) return BoxVerdict::certified;
  Rat cx = (x.lo + x.hi) / 2, cy = (y.lo + y.hi) / 2;
  if (Q.evaluate(cx, cy) == 0 && cx != 0 && cy != 0) {
    *zx = cx;
    *zy = cy;
    return BoxVerdict::zero_found;
  }
  if (depth == 0) return BoxVerdict::inconclusive;
  Interval xs[2] = {{x.lo, cx}, {cx, x.hi}};
  Interval ys[2] = {{y.lo, cy}, {cy, y.hi}};
  bool inconclusive = false;
  for (const Interval& xi : xs)
    for (const Interval& yi : ys) {
      BoxVerdict r = certify_box(Q, xi, yi, depth - 1, zx, zy);
      if (r == BoxVerdict::zero_found) return r;
      if (r == BoxVerdict::inconclusive) inconclusive = true;
    }
  return inconclusive ? BoxVerdict::inconclusive : BoxVerdict::certified;
}

}  // namespace

bool nonvanishing_off_axes(const Polynomial& Q, std::string* witness_slice,
                           std::optional<std::pair<Rat, Rat>>* witness_interval) {
  if (witness_slice) witness_slice->clear();
  if (witness_interval) witness_interval->reset();
  if (Q.is_zero()) {
    if (witness_slice) *witness_slice = "identically zero";
    return false;
  }

  if (collinear_support(Q.support())) {
    struct SliceSpec {
      Var fixed;
      int value;
      const char* name;
    };
    const SliceSpec specs[4] = {{Var::t1, 1, "t1=1"},
                                {Var::t1, -1, "t1=-1"},
                                {Var::t2, 1, "t2=1"},
                                {Var::t2, -1, "t2=-1"}};
    for (const SliceSpec& s : specs) {
      UniPoly q = slice(Q, s.fixed, s.value);
      if (uni_is_zero(q)) continue;  // slice vanishes only with axis factor
      if (nonzero_real_roots(q) > 0) {
        if (witness_slice) *witness_slice = s.name;
        if (witness_interval) *witness_interval = nonzero_root_witness(q);
        return false;
      }
    }
    return true;
  }

  // Box certificate on [-1,1]^2 off the axes; conservative on depth limit.
  Rat zx, zy;
  Interval pos{Rat(0), Rat(1)}, neg{Rat(-1), Rat(0)};
  const Interval spans[2] = {neg, pos};
  bool inconclusive = false;
  for (const Interval& x : spans)
    for (const Interval& y : spans) {
      BoxVerdict r = certify_box(Q, x, y, 12, &zx, &zy);
      if (r == BoxVerdict::zero_found) {
        if (witness_slice) *witness_slice = "t1=" + to_string(zx);
        if (witness_interval) *witness_interval = std::make_pair(zy, zy);
        return false;
      }
      if (r == BoxVerdict::inconclusive) inconclusive = true;
    }
  if (inconclusive) {
    if (witness_slice) *witness_slice = "inconclusive (subdivision depth limit)";
    return false;
  }
  return true;
}

namespace {

ConditionCheck run_axis_check(const Polynomial& P, const Edge& E, Var axis_var) {
  ConditionCheck c;
  c.kind = axis_var == Var::t1 ? "axis-t1" : "axis-t2";
  c.edge = edge_describe(E);
  Polynomial Q = edge_polynomial(P, E).derivative(axis_var, 2);
  c.tested = Q.to_string();
  if (Q.is_zero()) {
    c.pass = false;
    c.witness_slice = "identically zero";
    return c;
  }
  UniPoly q = slice(Q, axis_var == Var::t1 ? Var::t2 : Var::t1, 1);
  int roots = nonzero_real_roots(q);
  if (roots > 0) {
    c.pass = false;
    c.witness_slice = axis_var == Var::t1 ? "t2=0" : "t1=0";
    c.witness_interval = nonzero_root_witness(q);
  }
  return c;
}

ConditionCheck run_hessian_check(const Polynomial& P, const Edge& E) {
  ConditionCheck c;
  c.kind = "edge-hessian";
  c.edge = edge_describe(E);
  Polynomial Q = edge_polynomial(P, E).hessian_det();
  c.tested = Q.to_string();
  std::string slice_name;
  std::optional<std::pair<Rat, Rat>> interval;
  c.pass = nonvanishing_off_axes(Q, &slice_name, &interval);
  c.witness_slice = slice_name;
  c.witness_interval = interval;
  return c;
}

ConditionCheck run_mixed_check(const Polynomial& part, const Edge& E,
                               Var deriv_var, const std::string& kind) {
  ConditionCheck c;
  c.kind = kind;
  c.edge = edge_describe(E);
  Polynomial Q = edge_polynomial(part, E).derivative(deriv_var, 2);
  c.tested = Q.to_string();
  if (Q.is_zero()) {
    c.pass = false;
    c.witness_slice = "identically zero";
    return c;
  }
  std::string slice_name;
  std::optional<std::pair<Rat, Rat>> interval;
  c.pass = nonvanishing_off_axes(Q, &slice_name, &interval);
  c.witness_slice = slice_name;
  c.witness_interval = interval;
  return c;
}

}  // namespace

ConditionReport check_conditions(const Polynomial& P, const NewtonData& data) {
  ConditionReport rep;
  std::vector<std::function<ConditionCheck()>> tasks;
  std::vector<bool> is_mixed;

  // An edge whose support consists solely of (m,0)-form (resp. (0,n)-form)
  // exponents is the t1-axis (resp. t2-axis) edge regardless of its kind;
  // a single-vertex hull puts (m,0) on both rays.
  auto support_on_axis = [](const Edge& E, bool m_axis) {
    for (ExpPoint p : E.support)
      if ((m_axis ? p.n : p.m) != 0) return false;
    return !E.support.empty();
  };

  for (const Edge& E : data.hull.edges) {
    bool axis_t1 = support_on_axis(E, true);
    bool axis_t2 = !axis_t1 && support_on_axis(E, false);
    if (axis_t1 || axis_t2) {
      Var v = axis_t1 ? Var::t1 : Var::t2;
      tasks.emplace_back([&P, &E, v] { return run_axis_check(P, E, v); });
    } else {
      tasks.emplace_back([&P, &E] { return run_hessian_check(P, E); });
    }
    is_mixed.push_back(false);
  }

  auto not_edge_of_hull = [&data](const Edge& E) {
    for (const Edge& F : data.hull.edges)
      if (same_edge(E, F)) return false;
    return true;
  };

  if (data.hull1) {
    for (const Edge& E : data.hull1->edges)
      if (not_edge_of_hull(E)) {
        tasks.emplace_back([&data, &E] {
          return run_mixed_check(data.P1, E, Var::t2, "mixed-t2-on-P1");
        });
        is_mixed.push_back(true);
      }
  }
  std::optional<NewtonPolyhedron> hull2;
  if (!data.P2.is_zero()) {
    hull2 = build_polyhedron(data.P2.support());
    for (const Edge& E : hull2->edges)
      if (not_edge_of_hull(E)) {
        tasks.emplace_back([&data, &E] {
          return run_mixed_check(data.P2, E, Var::t1, "mixed-t1-on-P2");
        });
        is_mixed.push_back(true);
      }
  }

  std::vector<ConditionCheck> results(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t k) { results[k] = tasks[k](); });

  rep.checks = std::move(results);
  for (std::size_t k = 0; k < rep.checks.size(); ++k) {
    if (!rep.checks[k].pass) {
      if (is_mixed[k])
        rep.mixed_pass = false;
      else
        rep.hessian_pass = false;
    }
  }
  rep.all_pass = rep.hessian_pass && rep.mixed_pass;
  rep.notes.push_back(
      "determinant entries are tested off the coordinate axes; axis behavior "
      "is carried by the axis entries");
  return rep;
}

}  // namespace nsmooth
