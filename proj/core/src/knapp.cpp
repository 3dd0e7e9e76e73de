#include "nsmooth/knapp.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "nsmooth/parallel.hpp"

namespace nsmooth {

NecessaryLine dual(const NecessaryLine& line) {
  NecessaryLine d;
  d.A = line.C;
  d.B = line.B + line.C - line.A;
  d.C = line.A;
  d.label = line.label + " dual";
  return d;
}

namespace {

std::optional<BoxSpec> skip(std::string* reason, const std::string& msg) {
  if (reason) *reason = msg;
  return std::nullopt;
}

// Bounded hull edge containing (delta, delta); frontier edges are scanned
// top to bottom and the first hit wins.
std::optional<BoxSpec> diagonal_box(const NewtonData& data,
                                    std::string* reason) {
  Rat delta = data.delta;
  for (const Edge& E : data.hull.bounded_edges()) {
    Rat m1(E.a.m), n1(E.a.n), m2(E.b.m), n2(E.b.n);
    if (m1 <= delta && delta <= m2 && n2 <= delta && delta <= n1) {
      Rat D = m2 * n1 - m1 * n2;
      if (D == 0) return skip(reason, "degenerate diagonal edge");
      BoxSpec spec;
      spec.e1 = (n1 - n2) / D;
      spec.e2 = (m2 - m1) / D;
      spec.ep1 = spec.e1;
      spec.ep2 = spec.e2;
      spec.d1 = spec.e1;
      spec.d2 = spec.e2;
      spec.label = "l1";
      return spec;
    }
  }
  return skip(reason, "no bounded edge crosses the diagonal");
}

std::optional<BoxSpec> min_order_box(const NewtonData& data,
                                     std::string* reason) {
  if (data.P1.is_zero() || !data.M) return skip(reason, "P1 is zero");
  if (!data.ms) return skip(reason, "ms undefined");
  if (*data.M == 0) return skip(reason, "M = 0 makes the exponent undefined");
  Rat M(*data.M);
  Rat e1 = 1 - Rat(*data.ms - 1) / M;
  if (e1 < 0) return skip(reason, "negative width exponent");
  BoxSpec spec;
  spec.e1 = e1;
  spec.e2 = 0;
  spec.ep1 = e1;
  spec.ep2 = 0;
  spec.d1 = Rat(1) / M;
  spec.d2 = 0;
  spec.label = "l2";
  return spec;
}

std::optional<BoxSpec> chain_pair_box(const NewtonData& data, std::size_t K,
                                      std::string* reason) {
  std::vector<std::pair<ChainPoint, ChainPoint>> pairs;
  for (std::size_t k = 0; k + 1 < data.chain.size(); ++k) {
    const ChainPoint& a = data.chain[k];
    const ChainPoint& b = data.chain[k + 1];
    if (!a.m_inf && !a.n_inf && !b.m_inf && !b.n_inf) pairs.emplace_back(a, b);
  }
  if (K < 1 || K > pairs.size())
    return skip(reason, "no such chain pair");
  Rat Mk(pairs[K - 1].first.m), Nk(pairs[K - 1].first.n);
  Rat Mk1(pairs[K - 1].second.m), Nk1(pairs[K - 1].second.n);
  Rat D = Mk1 * Nk - Mk * Nk1;
  if (D <= 0) return skip(reason, "degenerate chain pair");
  if (!data.ms) return skip(reason, "ms undefined");
  Rat Ak = (Nk - Nk1) / D;
  Rat Bk = (Mk1 - Mk) / D;
  Rat e1 = 1 - Rat(*data.ms - 1) * Ak;
  if (e1 < 0) return skip(reason, "negative width exponent");
  BoxSpec spec;
  spec.e1 = e1;
  spec.e2 = Bk;
  spec.ep1 = e1;
  spec.ep2 = Bk;
  spec.d1 = Ak;
  spec.d2 = Bk;
  spec.label = "lk:" + std::to_string(K);
  return spec;
}

}  // namespace

std::optional<BoxSpec> knapp_box_family(const NewtonData& data,
                                        const std::string& label,
                                        std::string* skip_reason) {
  if (label == "full-box") {
    BoxSpec spec;
    spec.e1 = 1;
    spec.e2 = 1;
    spec.ep1 = 1;
    spec.ep2 = 1;
    spec.d1 = 0;
    spec.d2 = 0;
    spec.label = "full-box";
    return spec;
  }
  if (label == "l1") return diagonal_box(data, skip_reason);
  if (label == "l2") return min_order_box(data, skip_reason);
  if (label.rfind("lk:", 0) == 0) {
    std::size_t K = 0;
    try {
      K = static_cast<std::size_t>(std::stoul(label.substr(3)));
    } catch (const std::exception&) {
      return skip(skip_reason, "bad chain pair index");
    }
    return chain_pair_box(data, K, skip_reason);
  }
  return skip(skip_reason, "unknown preset");
}

NecessaryLine necessary_line(const BoxSpec& spec) {
  NecessaryLine line;
  line.A = spec.e1 + spec.e2 + 1;
  line.B = spec.ep1 + spec.ep2;
  line.C = spec.d1 + spec.d2 + 1;
  line.label = spec.label;
  return line;
}

PhaseBoundReport verify_phase_bound(const Polynomial& P, const BoxSpec& spec,
                                    const std::vector<double>& eps_list,
                                    std::uint64_t seed, int samples) {
  if (eps_list.empty()) throw std::invalid_argument("empty eps list");
  for (double e : eps_list)
    if (!(e > 0)) throw std::invalid_argument("eps must be positive");
  if (samples < 1) throw std::invalid_argument("empty sampling");

  PhaseBoundReport rep;
  rep.eps = eps_list;
  rep.max_ratio.assign(eps_list.size(), 0.0);

  double d1 = to_double(spec.d1), d2 = to_double(spec.d2);
  double p1 = to_double(spec.ep1), p2 = to_double(spec.ep2);

  parallel_for(eps_list.size(), [&](std::size_t idx) {
    double eps = eps_list[idx];
    std::mt19937_64 rng(seed ^ ((idx + 1) * 0x9E3779B97F4A7C15ULL));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    double wx1 = std::pow(eps, d1), wx2 = std::pow(eps, d2);
    double wt1 = std::pow(eps, p1), wt2 = std::pow(eps, p2);
    double worst = 0;
    for (int k = 0; k < samples; ++k) {
      double x1 = wx1 * unit(rng);
      double x2 = wx2 * unit(rng);
      double t1 = x1 + wt1 * unit(rng);
      double t2 = x2 + wt2 * unit(rng);
      double diff = std::fabs(P.evaluate(x1, x2) - P.evaluate(t1, t2));
      worst = std::max(worst, diff / eps);
    }
    rep.max_ratio[idx] = worst;
  });

  double n = static_cast<double>(eps_list.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < eps_list.size(); ++k) {
    double x = std::log(eps_list[k]);
    double y = std::log(std::max(rep.max_ratio[k], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = n * sxx - sx * sx;
  rep.fitted_slope = denom == 0 ? 0.0 : (n * sxy - sx * sy) / denom;
  rep.pass = rep.fitted_slope >= -0.05;
  return rep;
}

ScalingFitReport scaling_fit(const Polynomial& P, const BoxSpec& spec,
                             const std::vector<double>& eps_list,
                             std::uint64_t seed) {
  (void)seed;  // grids are deterministic
  if (eps_list.size() < 2) throw std::invalid_argument("need >= 2 eps values");
  for (double e : eps_list)
    if (!(e > 0)) throw std::invalid_argument("eps must be positive");

  ScalingFitReport rep;
  rep.line = necessary_line(spec);
  // Evaluation point: the preset's line meets 1/q = 1 - 1/p at
  // 1/p = (B+C)/(A+C); there the eps exponent of the norm ratio is zero.
  Rat inv_p = (rep.line.B + rep.line.C) / (rep.line.A + rep.line.C);
  Rat inv_q = 1 - inv_p;
  rep.analytic_exponent = 0.0;

  double p = 1.0 / to_double(inv_p);
  double q = 1.0 / to_double(inv_q);
  double e1 = to_double(spec.e1), e2 = to_double(spec.e2);
  double d1 = to_double(spec.d1), d2 = to_double(spec.d2);
  double p1 = to_double(spec.ep1), p2 = to_double(spec.ep2);

  // Height constant from the mean value bound on the unit box.
  double cp = 1.0;
  for (const auto& [e, c] : P.terms())
    cp += std::fabs(to_double(c)) * static_cast<double>(e.m + e.n);

  rep.eps = eps_list;
  rep.lhs.assign(eps_list.size(), 0.0);

  constexpr int kXGrid = 7;
  constexpr int kTGrid = 24;
  parallel_for(eps_list.size(), [&](std::size_t idx) {
    double eps = eps_list[idx];
    double we1 = std::pow(eps, e1), we2 = std::pow(eps, e2);
    double wd1 = std::pow(eps, d1), wd2 = std::pow(eps, d2);
    double wp1 = std::pow(eps, p1), wp2 = std::pow(eps, p2);
    double height = cp * eps;

    // ||A chi_Q||_q over D via midpoint grids; x3 is offset from the graph.
    double sum_q = 0;
    for (int a = 0; a < kXGrid; ++a)
      for (int b = 0; b < kXGrid; ++b)
        for (int c = 0; c < kXGrid; ++c) {
          double x1 = wd1 * (-1.0 + (2.0 * a + 1.0) / kXGrid);
          double x2 = wd2 * (-1.0 + (2.0 * b + 1.0) / kXGrid);
          double u = eps * (-1.0 + (2.0 * c + 1.0) / kXGrid);
          double x3 = P.evaluate(x1, x2) + u;
          int hits = 0;
          for (int s = 0; s < kTGrid; ++s)
            for (int t = 0; t < kTGrid; ++t) {
              double t1 = x1 + wp1 * (-1.0 + (2.0 * s + 1.0) / kTGrid);
              double t2 = x2 + wp2 * (-1.0 + (2.0 * t + 1.0) / kTGrid);
              if (std::fabs(t1) <= we1 && std::fabs(t2) <= we2 &&
                  std::fabs(x3 - P.evaluate(t1, t2)) <= height)
                ++hits;
            }
          double af = (4.0 * wp1 * wp2) * hits / (kTGrid * kTGrid);
          sum_q += std::pow(af, q);
        }
    double vol_d = 8.0 * wd1 * wd2 * eps;
    double norm_q =
        std::pow(sum_q * vol_d / (kXGrid * kXGrid * kXGrid), 1.0 / q);
    double norm_p = std::pow(8.0 * we1 * we2 * height, 1.0 / p);
    rep.lhs[idx] = norm_q / norm_p;
  });

  double n = static_cast<double>(eps_list.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < eps_list.size(); ++k) {
    double x = std::log(eps_list[k]);
    double y = std::log(std::max(rep.lhs[k], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("need distinct eps values");
  rep.fitted_exponent = (n * sxy - sx * sy) / denom;
  double icept = (sy - rep.fitted_exponent * sx) / n;
  double ss = 0;
  for (std::size_t k = 0; k < eps_list.size(); ++k) {
    double r = std::log(std::max(rep.lhs[k], 1e-300)) -
               (rep.fitted_exponent * std::log(eps_list[k]) + icept);
    ss += r * r;
  }
  rep.fit_residual = std::sqrt(ss / n);
  if (rep.fit_residual > 0.25)
    throw std::runtime_error("scaling fit residual above threshold");
  rep.pass = std::fabs(rep.fitted_exponent - rep.analytic_exponent) <= 0.05;
  return rep;
}

NecessaryRegion necessary_region(const NewtonData& data) {
  NecessaryRegion region;
  std::vector<std::string> presets = {"full-box", "l1", "l2"};
  std::size_t pairs = 0;
  for (std::size_t k = 0; k + 1 < data.chain.size(); ++k) {
    const ChainPoint& a = data.chain[k];
    const ChainPoint& b = data.chain[k + 1];
    if (!a.m_inf && !a.n_inf && !b.m_inf && !b.n_inf) ++pairs;
  }
  for (std::size_t K = 1; K <= pairs; ++K)
    presets.push_back("lk:" + std::to_string(K));

  auto push_unique = [&](const NecessaryLine& line) {
    for (const NecessaryLine& ex : region.lines)
      if (ex.A == line.A && ex.B == line.B && ex.C == line.C) return;
    region.lines.push_back(line);
  };

  for (const std::string& preset : presets) {
    std::string reason;
    std::optional<BoxSpec> spec = knapp_box_family(data, preset, &reason);
    if (!spec) {
      region.skipped.push_back(preset + ": " + reason);
      continue;
    }
    NecessaryLine line = necessary_line(*spec);
    push_unique(line);
    push_unique(dual(line));
  }
  return region;
}

std::string knapp_csv(const PhaseBoundReport& phase,
                      const ScalingFitReport& fit) {
  std::ostringstream os;
  os.precision(17);
  os << "eps,ratio_phase,lhs_exponent,rhs_exponent,fit_residual\n";
  std::size_t rows = std::max(phase.eps.size(), fit.eps.size());
  for (std::size_t k = 0; k < rows; ++k) {
    if (k < phase.eps.size())
      os << phase.eps[k] << "," << phase.max_ratio[k];
    else
      os << fit.eps[k] << ",";
    os << "," << fit.fitted_exponent << "," << fit.analytic_exponent << ","
       << fit.fit_residual << "\n";
  }
  return os.str();
}

}  // namespace nsmooth
