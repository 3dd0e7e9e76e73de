#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsmooth/newton_data.hpp"

namespace nsmooth {

// Anisotropic box family: Q_eps has half-widths eps^e1, eps^e2, eps;
// D_eps has half-widths eps^d1, eps^d2 around the surface; the t-window
// Q_eps(x) has half-widths eps^ep1, eps^ep2.
struct BoxSpec {
  Rat e1, e2;    // Q_eps x1/x2 exponents
  Rat d1, d2;    // D_eps x1/x2 exponents
  Rat ep1, ep2;  // Q_eps(x) exponents
  std::string label;
};

// Half-plane A*(1/p) <= B + C*(1/q) in the (1/p, 1/q) square.
struct NecessaryLine {
  Rat A, B, C;
  std::string label;

  bool admits(const Rat& inv_p, const Rat& inv_q, const Rat& slack = 0) const {
    return A * inv_p <= B + C * inv_q + slack;
  }
};

// Reflection across 1/q = 1 - 1/p; an involution.
NecessaryLine dual(const NecessaryLine& line);

// Presets: "full-box", "l1", "l2", "lk:K" (K = 1-based chain pair index).
// Returns nullopt with a diagnostic when the preset's geometric input is
// missing (no diagonal-crossing edge, M = 0, no such chain pair).
std::optional<BoxSpec> knapp_box_family(const NewtonData& data,
                                        const std::string& label,
                                        std::string* skip_reason = nullptr);

// Exponent comparison of |Q_eps|^(1/p) >= |Q_eps(x)| * |D_eps|^(1/q).
NecessaryLine necessary_line(const BoxSpec& spec);

struct PhaseBoundReport {
  std::vector<double> eps;
  std::vector<double> max_ratio;  // max |P(x) - P(t)| / eps per eps
  double fitted_slope = 0;        // log(ratio) vs log(eps)
  bool pass = false;              // no growth trend: slope >= -0.05
};

// Samples pairs x in D_eps, t in Q_eps(x) and checks |P(x)-P(t)| stays
// within a constant multiple of eps across the sweep.
PhaseBoundReport verify_phase_bound(const Polynomial& P, const BoxSpec& spec,
                                    const std::vector<double>& eps_list,
                                    std::uint64_t seed, int samples = 10000);

struct ScalingFitReport {
  NecessaryLine line;
  double analytic_exponent = 0;  // eps exponent of ||A f||_q / ||f||_p on the line
  double fitted_exponent = 0;
  double fit_residual = 0;
  bool pass = false;  // |fitted - analytic| <= 0.05
  std::vector<double> eps;
  std::vector<double> lhs;  // measured ||A chi_Q||_q / ||chi_Q||_p
};

// Grid-quadrature sanity fit of the eps exponent at the point where the
// preset's line meets 1/q = 1 - 1/p, compared with the analytic exponent.
ScalingFitReport scaling_fit(const Polynomial& P, const BoxSpec& spec,
                             const std::vector<double>& eps_list,
                             std::uint64_t seed);

struct NecessaryRegion {
  std::vector<NecessaryLine> lines;  // applicable presets and their duals
  std::vector<std::string> skipped;  // "preset: reason"
};

NecessaryRegion necessary_region(const NewtonData& data);

std::string knapp_csv(const PhaseBoundReport& phase, const ScalingFitReport& fit);

}  // namespace nsmooth
