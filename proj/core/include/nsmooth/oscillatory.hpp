#pragma once

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsmooth/newton_polyhedron.hpp"
#include "nsmooth/polynomial.hpp"

namespace nsmooth {

struct OscError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Smooth cutoff: 1 on |s| <= 1/2, exp(1 - 1/(1 - u^2)) with u = 2|s| - 1 on
// 1/2 < |s| < 1, 0 beyond. eta is the dyadic ring bump built from it.
double bump_psi0(double s);
double bump_eta(double s);

struct OscResult {
  std::complex<double> value;
  int order = 0;          // per-axis Gauss-Legendre order actually used
  double rel_change = 0;  // order-doubling relative change estimate
  double trivial_bound = 0;  // integral of |eta eta| over the four rectangles
};

// m_{j1,j2}(xi): integral of e^{i xi3 phi(t)} eta(t1) eta(t2) over
// [1/2,1]^2 and its three sign reflections, with
// phi = 2^{-j1} t1 xi1/xi3 + 2^{-j2} t2 xi2/xi3 + P(2^{-j1} t1, 2^{-j2} t2).
// order 0 picks the order from the sampled phase range; throws when the
// required order exceeds the cap.
OscResult oscillatory_integral(const Polynomial& P, int j1, int j2,
                               std::array<double, 3> xi, int order = 0,
                               int order_cap = 4096);

struct DominantReport {
  ExpPoint dominant;
  Rat delta_value;             // weighted distance of the dominant monomial
  double worst_factor = 0;     // max over sampled i >= i0 of the size ratio
  int i0 = -1;                 // smallest sampled i with ratio in [1/2, 2]
  std::vector<std::pair<int, double>> per_index;  // (i, max grid ratio)
};

// Unique weighted-distance minimizer for direction v and the measured
// comparability factor max |P| / |dominant| over a 32x32 grid per dyadic
// index. Throws on a tie (edge direction).
DominantReport dominant_monomial(const Polynomial& P, Normal v, int i_max = 12);

struct DecaySample {
  long i = 0;
  long l = 0;
  double xi3 = 0;
  double abs_m = 0;
  double predicted_bound = 0;
  double ratio = 0;  // abs_m / predicted_bound
};

struct DecayFitReport {
  Normal v{1, 1};
  std::optional<Normal> w;
  std::vector<DecaySample> samples;
  double fitted_slope = 0;     // d log2|m| / d log2 xi3
  double fit_residual = 0;
  double predicted_slope = 0;  // -1 for the Hessian case, -1 for the product
  std::string regime;          // "hessian" or "product"
  bool hessian_ratio_ok = true;  // normalized det stays within a factor-4 band
  std::string verdict;         // PASS | FAIL | VACUOUS
};

// Sweeps xi3 over dyadic values for each index i, measuring |m_{v i}| with
// the linear frequencies centered at the stationary point of the cell, and
// fits the decay exponent. PASS iff the fitted slope does not exceed the
// predicted bound slope by more than 0.1.
DecayFitReport decay_fit(const Polynomial& P, Normal v,
                         const std::vector<long>& index_set, double xi3_lo,
                         double xi3_hi, int order_cap = 4096);

std::string decay_csv(const DecayFitReport& r);

}  // namespace nsmooth
