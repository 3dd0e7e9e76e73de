#include "nsmooth/oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "nsmooth/parallel.hpp"

namespace nsmooth {

double bump_psi0(double s) {
  double a = std::fabs(s);
  if (a <= 0.5) return 1.0;
  if (a >= 1.0) return 0.0;
  double u = 2.0 * a - 1.0;
  return std::exp(1.0 - 1.0 / (1.0 - u * u));
}

double bump_eta(double s) { return bump_psi0(s) - bump_psi0(2.0 * s); }

namespace {

struct Quadrature {
  std::vector<double> nodes;  // on [-1, 1]
  std::vector<double> weights;
};

// Gauss-Legendre nodes by Newton iteration on the recurrence; cached.
const Quadrature& gauss_legendre(int q) {
  static std::map<int, Quadrature> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;

  Quadrature quad;
  quad.nodes.resize(static_cast<std::size_t>(q));
  quad.weights.resize(static_cast<std::size_t>(q));
  for (int k = 0; k < q; ++k) {
    double x = std::cos(M_PI * (k + 0.75) / (q + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int n = 2; n <= q; ++n) {
        double p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      dp = q * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    quad.nodes[static_cast<std::size_t>(k)] = x;
    quad.weights[static_cast<std::size_t>(k)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  auto [pos, inserted] = cache.emplace(q, std::move(quad));
  return pos->second;
}

// One |t| panel per axis: the dyadic cell [1/2, 1], where eta equals psi0.
constexpr double kCellLo = 0.5;
constexpr double kCellHi = 1.0;

bool is_separable(const Polynomial& P) {
  for (const auto& [e, c] : P.terms())
    if (e.m > 0 && e.n > 0) return false;
  return true;
}

struct PhaseParams {
  const Polynomial* P;
  double scale1, scale2;  // 2^{-j1}, 2^{-j2}
  double l1, l2;          // 2^{-jk} * xi_k
  double xi3;
};

// Total phase xi3 * phi, assembled without dividing by xi3.
double phase(const PhaseParams& pp, double t1, double t2) {
  return pp.l1 * t1 + pp.l2 * t2 +
         pp.xi3 * pp.P->evaluate(pp.scale1 * t1, pp.scale2 * t2);
}

double axis_phase(const Polynomial& pure, double scale, double lin, double xi3,
                  double t) {
  return lin * t + xi3 * pure.evaluate(scale * t, 0.0);
}

// Nodes-per-axis requirement from the largest single-panel phase range.
int order_from_range(double range) {
  return 8 + 2 * static_cast<int>(std::ceil(range / M_PI));
}

double panel_range_1d(const Polynomial& pure, double scale, double lin,
                      double xi3, int sign) {
  double lo = 0, hi = 0;
  for (int k = 0; k < 33; ++k) {
    double u = kCellLo + (kCellHi - kCellLo) * k / 32.0;
    double ph = axis_phase(pure, scale, lin, xi3, sign * u);
    if (k == 0 || ph < lo) lo = ph;
    if (k == 0 || ph > hi) hi = ph;
  }
  return hi - lo;
}

double panel_range_2d(const PhaseParams& pp, int s1, int s2) {
  double lo = 0, hi = 0;
  for (int a = 0; a < 33; ++a)
    for (int b = 0; b < 33; ++b) {
      double u1 = kCellLo + (kCellHi - kCellLo) * a / 32.0;
      double u2 = kCellLo + (kCellHi - kCellLo) * b / 32.0;
      double ph = phase(pp, s1 * u1, s2 * u2);
      if ((a == 0 && b == 0) || ph < lo) lo = ph;
      if ((a == 0 && b == 0) || ph > hi) hi = ph;
    }
  return hi - lo;
}

std::complex<double> integrate_tensor(const PhaseParams& pp, int q) {
  const Quadrature& quad = gauss_legendre(q);
  double h = 0.5 * (kCellHi - kCellLo), c = 0.5 * (kCellHi + kCellLo);
  std::complex<double> total = 0;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      std::complex<double> panel = 0;
      for (int ia = 0; ia < q; ++ia) {
        double u1 = c + h * quad.nodes[static_cast<std::size_t>(ia)];
        double w1 =
            h * quad.weights[static_cast<std::size_t>(ia)] * bump_eta(u1);
        std::complex<double> row = 0;
        for (int ib = 0; ib < q; ++ib) {
          double u2 = c + h * quad.nodes[static_cast<std::size_t>(ib)];
          double w2 =
              h * quad.weights[static_cast<std::size_t>(ib)] * bump_eta(u2);
          double ph = phase(pp, s1 * u1, s2 * u2);
          row += w2 * std::complex<double>(std::cos(ph), std::sin(ph));
        }
        panel += w1 * row;
      }
      total += panel;
    }
  return total;
}

// Axis factor of a separable phase: pure part of P in one variable.
std::complex<double> integrate_axis(const Polynomial& pure, double scale,
                                    double lin, double xi3, int q) {
  const Quadrature& quad = gauss_legendre(q);
  double h = 0.5 * (kCellHi - kCellLo), c = 0.5 * (kCellHi + kCellLo);
  std::complex<double> total = 0;
  for (int s : {1, -1}) {
    std::complex<double> panel = 0;
    for (int k = 0; k < q; ++k) {
      double u = c + h * quad.nodes[static_cast<std::size_t>(k)];
      double w = h * quad.weights[static_cast<std::size_t>(k)] * bump_eta(u);
      double ph = axis_phase(pure, scale, lin, xi3, s * u);
      panel += w * std::complex<double>(std::cos(ph), std::sin(ph));
    }
    total += panel;
  }
  return total;
}

double eta_mass(int q) {
  const Quadrature& quad = gauss_legendre(q);
  double h = 0.5 * (kCellHi - kCellLo), c = 0.5 * (kCellHi + kCellLo);
  double total = 0;
  for (int k = 0; k < q; ++k) {
    double u = c + h * quad.nodes[static_cast<std::size_t>(k)];
    total += h * quad.weights[static_cast<std::size_t>(k)] * bump_eta(u);
  }
  return 2.0 * total;  // both signs
}

}  // namespace

OscResult oscillatory_integral(const Polynomial& P, int j1, int j2,
                               std::array<double, 3> xi, int order,
                               int order_cap) {
  if (j1 < 0 || j2 < 0) throw OscError("dyadic indices must be nonnegative");
  for (double x : xi)
    if (!std::isfinite(x)) throw OscError("non-finite frequency");

  PhaseParams pp;
  pp.P = &P;
  pp.scale1 = std::ldexp(1.0, -j1);
  pp.scale2 = std::ldexp(1.0, -j2);
  pp.l1 = pp.scale1 * xi[0];
  pp.l2 = pp.scale2 * xi[1];
  pp.xi3 = xi[2];

  bool separable = is_separable(P);
  Polynomial pure1 = P.filter([](ExpPoint e) { return e.n == 0; });
  Polynomial pure2 =
      P.filter([](ExpPoint e) { return e.m == 0 && e.n > 0; }).swap_vars();

  if (order_cap < 4) throw OscError("order cap too small");
  int q;
  if (order > 0) {
    if (order > order_cap) throw OscError("quadrature order exceeds the cap");
    q = std::max(order, 4);
  } else {
    double range = 0;
    if (separable) {
      for (int s : {1, -1}) {
        range = std::max(range,
                         panel_range_1d(pure1, pp.scale1, pp.l1, pp.xi3, s));
        range = std::max(range,
                         panel_range_1d(pure2, pp.scale2, pp.l2, pp.xi3, s));
      }
    } else {
      for (int s1 : {1, -1})
        for (int s2 : {1, -1})
          range = std::max(range, panel_range_2d(pp, s1, s2));
    }
    q = std::min(std::max(order_from_range(range), 16), order_cap);
  }

  auto eval = [&](int qq) {
    if (separable)
      return integrate_axis(pure1, pp.scale1, pp.l1, pp.xi3, qq) *
             integrate_axis(pure2, pp.scale2, pp.l2, pp.xi3, qq);
    return integrate_tensor(pp, qq);
  };

  // The accepted order is certified by halving: |I(q) - I(q/2)| relative to
  // |I(q)| under the 1e-6 target, escalating within the cap.
  OscResult res;
  std::complex<double> prev = eval(q / 2);
  while (true) {
    std::complex<double> cur = eval(q);
    double rel = std::abs(cur - prev) / std::max(std::abs(cur), 1e-300);
    if (rel < 1e-6) {
      res.value = cur;
      res.order = q;
      res.rel_change = rel;
      break;
    }
    if (q >= order_cap)
      throw OscError("quadrature did not converge within the order cap");
    prev = cur;
    q = std::min(2 * q, order_cap);
  }

  double mass = eta_mass(std::max(q, 64));
  res.trivial_bound = mass * mass;
  if (std::abs(res.value) > res.trivial_bound * (1.0 + 1e-8))
    throw OscError("computed value exceeds the trivial bound");
  return res;
}

DominantReport dominant_monomial(const Polynomial& P, Normal v, int i_max) {
  if (P.is_zero()) throw OscError("empty polynomial");
  if (v[0] < 0 || v[1] < 0 || (v[0] == 0 && v[1] == 0))
    throw OscError("direction must be nonzero and nonnegative");

  std::optional<ExpPoint> dom;
  std::optional<Rat> best;
  bool tie = false;
  for (const auto& [e, c] : P.terms()) {
    Rat d = delta_v(v, e);
    if (!best || d < *best) {
      best = d;
      dom = e;
      tie = false;
    } else if (d == *best) {
      tie = true;
    }
  }
  if (tie)
    throw OscError(
        "tie in weighted distance: edge direction has no unique dominant "
        "monomial");

  DominantReport rep;
  rep.dominant = *dom;
  rep.delta_value = *best;
  double dom_coeff = std::fabs(to_double(P.coeff(*dom)));

  for (int i = 1; i <= i_max; ++i) {
    double lo1 = std::ldexp(1.0, -static_cast<int>(v[0]) * i - 1);
    double lo2 = std::ldexp(1.0, -static_cast<int>(v[1]) * i - 1);
    double worst = 0;
    for (int a = 0; a < 32; ++a)
      for (int b = 0; b < 32; ++b) {
        double t1 = lo1 * (1.0 + a / 31.0);
        double t2 = lo2 * (1.0 + b / 31.0);
        double num = std::fabs(P.evaluate(t1, t2));
        double den = dom_coeff * std::pow(t1, static_cast<double>(dom->m)) *
                     std::pow(t2, static_cast<double>(dom->n));
        worst = std::max(worst, num / den);
      }
    rep.per_index.emplace_back(i, worst);
  }

  rep.i0 = -1;
  for (std::size_t k = 0; k < rep.per_index.size(); ++k) {
    bool ok = true;
    for (std::size_t j = k; j < rep.per_index.size(); ++j)
      if (rep.per_index[j].second < 0.5 || rep.per_index[j].second > 2.0)
        ok = false;
    if (ok) {
      rep.i0 = rep.per_index[k].first;
      break;
    }
  }
  double worst = 0;
  for (const auto& [i, f] : rep.per_index)
    if (rep.i0 < 0 || i >= rep.i0) worst = std::max(worst, f);
  rep.worst_factor = worst;
  return rep;
}

namespace {

struct TwoTerm {
  long m, M, N;
};

TwoTerm two_term_support(const Polynomial& P) {
  auto pts = P.support();
  if (pts.size() != 2)
    throw OscError("decay sweep needs a two-term support {(m,0),(M,N)}");
  ExpPoint a = pts[0], b = pts[1];
  if (a.n != 0) std::swap(a, b);
  if (a.n != 0 || b.n < 1)
    throw OscError("decay sweep needs a two-term support {(m,0),(M,N)}");
  return {a.m, b.m, b.n};
}

}  // namespace

DecayFitReport decay_fit(const Polynomial& P, Normal v,
                         const std::vector<long>& index_set, double xi3_lo,
                         double xi3_hi, int order_cap) {
  if (v[0] < 1 || v[1] < 1)
    throw OscError("direction must have positive components");
  if (!(xi3_lo > 0) || !(xi3_hi >= xi3_lo))
    throw OscError("bad frequency range");
  TwoTerm s = two_term_support(P);

  DecayFitReport rep;
  rep.v = v;
  Rat d1 = delta_v(v, ExpPoint{s.m, 0});
  Rat d2 = delta_v(v, ExpPoint{s.M, s.N});
  rep.regime = d1 == d2 ? "hessian" : "product";
  rep.predicted_slope = -1.0;

  double dd1 = to_double(d1), dd2 = to_double(d2);
  double sum_v = static_cast<double>(v[0] + v[1]);

  long k_lo = static_cast<long>(std::ceil(std::log2(xi3_lo) - 1e-9));
  long k_hi = static_cast<long>(std::floor(std::log2(xi3_hi) + 1e-9));
  if (k_hi < k_lo) throw OscError("empty dyadic frequency range");

  struct Task {
    long i, k;
  };
  std::vector<Task> tasks;
  for (long i : index_set)
    for (long k = k_lo; k <= k_hi; ++k) tasks.push_back({i, k});

  Polynomial dP1 = P.derivative(Var::t1);
  Polynomial dP2 = P.derivative(Var::t2);

  rep.samples.resize(tasks.size());
  std::vector<std::string> errors(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t idx) {
    const Task& t = tasks[idx];
    int j1 = static_cast<int>(v[0] * t.i);
    int j2 = static_cast<int>(v[1] * t.i);
    double xi3 = std::ldexp(1.0, static_cast<int>(t.k));
    double c1 = 0.75 * std::ldexp(1.0, -j1);
    double c2 = 0.75 * std::ldexp(1.0, -j2);
    double xi1 = -dP1.evaluate(c1, c2) * xi3;
    double xi2 = -dP2.evaluate(c1, c2) * xi3;
    DecaySample smp;
    smp.i = t.i;
    smp.l = t.k;
    smp.xi3 = xi3;
    try {
      OscResult r =
          oscillatory_integral(P, j1, j2, {xi1, xi2, xi3}, 0, order_cap);
      smp.abs_m = std::abs(r.value);
    } catch (const OscError& e) {
      errors[idx] = e.what();
    }
    double offset = (dd1 + dd2) * sum_v * static_cast<double>(t.i) / 2.0;
    smp.predicted_bound = std::pow(xi3, -1.0) * std::pow(2.0, offset);
    smp.ratio = smp.abs_m / smp.predicted_bound;
    rep.samples[idx] = smp;
  });
  for (const std::string& e : errors)
    if (!e.empty()) throw OscError(e);

  // Fit only in the decay regime: xi3 at or above the slower threshold.
  std::vector<double> xs, ys;
  for (const DecaySample& smp : rep.samples) {
    double threshold =
        std::pow(2.0, std::max(dd1, dd2) * sum_v * static_cast<double>(smp.i));
    if (smp.xi3 < threshold) continue;
    double offset = (dd1 + dd2) * sum_v * static_cast<double>(smp.i) / 2.0;
    xs.push_back(static_cast<double>(smp.l));
    ys.push_back(std::log2(std::max(smp.abs_m, 1e-300)) - offset);
  }
  if (xs.empty()) {
    rep.verdict = "VACUOUS";
    return rep;
  }
  if (xs.size() < 4)
    throw OscError("degenerate fit: fewer than 4 sweep points");

  double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    sxx += xs[k] * xs[k];
    sxy += xs[k] * ys[k];
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0) throw OscError("degenerate fit: single frequency");
  rep.fitted_slope = (n * sxy - sx * sy) / denom;
  double icept = (sy - rep.fitted_slope * sx) / n;
  double ss = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    double r = ys[k] - (rep.fitted_slope * xs[k] + icept);
    ss += r * r;
  }
  rep.fit_residual = std::sqrt(ss / n);

  // Mixed-Hessian magnitude band, geometric-mean normalized.
  Polynomial hdet = P.hessian_det();
  std::vector<double> ratios;
  bool zero_ratio = false;
  for (long i : index_set) {
    int j1 = static_cast<int>(v[0] * i);
    int j2 = static_cast<int>(v[1] * i);
    double predicted =
        std::pow(2.0, -(dd1 + dd2) * sum_v * static_cast<double>(i));
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        double t1 = 0.5 + 0.5 * a / 7.0;
        double t2 = 0.5 + 0.5 * b / 7.0;
        double det = std::ldexp(1.0, -2 * (j1 + j2)) *
                     hdet.evaluate(std::ldexp(t1, -j1), std::ldexp(t2, -j2));
        double r = std::fabs(det) / predicted;
        if (r == 0)
          zero_ratio = true;
        else
          ratios.push_back(r);
      }
  }
  if (zero_ratio || ratios.empty()) {
    rep.hessian_ratio_ok = false;
  } else {
    double logsum = 0;
    for (double r : ratios) logsum += std::log(r);
    double gmean = std::exp(logsum / static_cast<double>(ratios.size()));
    rep.hessian_ratio_ok = true;
    for (double r : ratios)
      if (r / gmean < 0.25 || r / gmean > 4.0) rep.hessian_ratio_ok = false;
  }

  rep.verdict = rep.fitted_slope <= rep.predicted_slope + 0.1 ? "PASS" : "FAIL";
  return rep;
}

std::string decay_csv(const DecayFitReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "i,l,xi3,abs_m,predicted_bound,ratio\n";
  for (const DecaySample& s : r.samples)
    os << s.i << "," << s.l << "," << s.xi3 << "," << s.abs_m << ","
       << s.predicted_bound << "," << s.ratio << "\n";
  return os.str();
}

}  // namespace nsmooth
