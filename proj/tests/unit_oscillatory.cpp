#include "nsmooth/oscillatory.hpp"

#include "nsmooth/parser.hpp"

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

using namespace nsmooth;

namespace {

// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    sxx += xs[k] * xs[k];
    sxy += xs[k] * ys[k];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("the bump functions form a dyadic partition of unity") {
  CHECK(bump_psi0(0.0) == 1.0);
  CHECK(bump_psi0(0.3) == 1.0);
  CHECK(bump_psi0(0.5) == 1.0);
  CHECK(bump_psi0(1.0) == 0.0);
  CHECK(bump_psi0(2.0) == 0.0);
  CHECK(bump_psi0(0.75) > 0.0);
  CHECK(bump_psi0(0.75) < 1.0);
  CHECK(bump_psi0(-0.75) == bump_psi0(0.75));

  CHECK(bump_eta(0.5) == doctest::Approx(1.0));
  CHECK(bump_eta(0.25) == doctest::Approx(0.0));
  CHECK(bump_eta(1.0) == doctest::Approx(0.0));
  CHECK(bump_eta(0.6) > 0.0);

  // The rescaled rings telescope back to the plateau cutoff.
  for (double s : {0.05, 0.3, 0.6, 0.9}) {
    double total = 0;
    for (int j = 0; j < 40; ++j) total += bump_eta(std::ldexp(s, j));
    CHECK(total == doctest::Approx(bump_psi0(s)).epsilon(1e-12));
  }
}

TEST_CASE("zero frequency reduces the ring integral to the bump mass") {
  Polynomial P = parse_polynomial("t1^2 + t2^4");
  OscResult r = oscillatory_integral(P, 0, 0, {0.0, 0.0, 0.0});
  CHECK(std::fabs(r.value.imag()) < 1e-12);
  CHECK(r.value.real() > 0.25);
  CHECK(r.value.real() == doctest::Approx(r.trivial_bound).epsilon(1e-6));
  CHECK(r.order >= 16);
  CHECK(r.rel_change < 1e-6);
}

TEST_CASE("computed values respect the trivial bound") {
  Polynomial P = parse_polynomial("t1^2 + t2^4");
  double X = 256.0;
  OscResult r = oscillatory_integral(P, 0, 0, {-1.5 * X, -1.6875 * X, X});
  CHECK(std::abs(r.value) <= r.trivial_bound * (1.0 + 1e-8));
  CHECK(std::abs(r.value) > 0.0);

  OscResult s = oscillatory_integral(P, 1, 1, {0.0, 0.0, 64.0});
  CHECK(std::abs(s.value) <= s.trivial_bound * (1.0 + 1e-8));
}

TEST_CASE("bad integrator inputs are refused") {
  Polynomial P = parse_polynomial("t1^2 + t2^4");
  CHECK_THROWS_WITH_AS(oscillatory_integral(P, 0, 0, {0, 0, 1}, 8192, 4096),
                       "quadrature order exceeds the cap", OscError);
  CHECK_THROWS_WITH_AS(oscillatory_integral(P, 0, 0, {0, 0, 1}, 0, 2),
                       "order cap too small", OscError);
  CHECK_THROWS_WITH_AS(oscillatory_integral(P, -1, 0, {0, 0, 1}),
                       "dyadic indices must be nonnegative", OscError);
  double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_WITH_AS(oscillatory_integral(P, 0, 0, {0, 0, inf}),
                       "non-finite frequency", OscError);
}

TEST_CASE("a cap too small for the phase range fails the certificate") {
  Polynomial P = parse_polynomial("t1^2 + t2^4");
  double X = std::ldexp(1.0, 20);
  CHECK_THROWS_WITH_AS(oscillatory_integral(P, 0, 0, {0.0, 0.0, X}, 0, 64),
                       "quadrature did not converge within the order cap",
                       OscError);
}

TEST_CASE("the dominant monomial is certified along a ray direction") {
  Polynomial P = parse_polynomial("t1^2 + t1^4*t2^6 + t2^8");
  DominantReport rep = dominant_monomial(P, {1, 1});
  CHECK(rep.dominant == ExpPoint{2, 0});
  CHECK(rep.delta_value == Rat(1));
  CHECK(rep.i0 == 1);
  CHECK(rep.worst_factor >= 1.0);
  CHECK(rep.worst_factor <= 1.25);
  REQUIRE(rep.per_index.size() == 12);
  CHECK(rep.per_index.front().first == 1);

  // Corner ratio is exactly 2 for t1^2 + t2^4 at the first ring.
  Polynomial Q = parse_polynomial("t1^2 + t2^4");
  DominantReport rq = dominant_monomial(Q, {1, 1});
  CHECK(rq.dominant == ExpPoint{2, 0});
  CHECK(rq.i0 == 1);
  CHECK(rq.worst_factor == doctest::Approx(2.0));
}

TEST_CASE("an edge direction has no unique dominant monomial") {
  Polynomial Q = parse_polynomial("t1^2 + t2^4");
  CHECK_THROWS_WITH_AS(
      dominant_monomial(Q, {2, 1}),
      "tie in weighted distance: edge direction has no unique dominant "
      "monomial",
      OscError);
  CHECK_THROWS_AS(dominant_monomial(Q, {0, 0}), OscError);
  CHECK_THROWS_AS(dominant_monomial(Polynomial{}, {1, 1}), OscError);
}

TEST_CASE("stationary ring integrals decay like the inverse frequency") {
  // Linear frequencies centered at the stationary point t = (3/4, 3/4) of
  // the base cell, so both axis factors contribute a half power each.
  Polynomial P = parse_polynomial("t1^2 + t2^4");
  std::vector<double> xs, ys;
  for (int k = 6; k <= 12; ++k) {
    double X = std::ldexp(1.0, k);
    OscResult r =
        oscillatory_integral(P, 0, 0, {-1.5 * X, -1.6875 * X, X}, 0, 12000);
    double a = std::abs(r.value);
    CHECK(a > 1e-12);
    xs.push_back(static_cast<double>(k));
    ys.push_back(std::log2(a));
  }
  double slope = fit_slope(xs, ys);
  CHECK(slope <= -0.65);
  CHECK(slope >= -1.5);
}

TEST_CASE("decay sweeps classify regimes and filter eligible frequencies") {
  Polynomial P = parse_polynomial("t1^2 + t2^4");

  // Every sampled frequency sits below the eligibility threshold 2^16.
  DecayFitReport vac = decay_fit(P, {1, 1}, {4}, 4.0, 200.0);
  CHECK(vac.verdict == "VACUOUS");
  CHECK(vac.regime == "product");
  CHECK(vac.samples.size() == 6);
  for (const DecaySample& s : vac.samples) {
    CHECK(s.abs_m >= 0.0);
    CHECK(s.predicted_bound > 0.0);
  }

  // Three eligible points are not enough for a fit.
  CHECK_THROWS_WITH_AS(decay_fit(P, {1, 1}, {1}, 16.0, 64.0),
                       "degenerate fit: fewer than 4 sweep points", OscError);

  // Equal weighted distances put the edge direction in the Hessian regime.
  DecayFitReport hes = decay_fit(P, {2, 1}, {1}, 16.0, 256.0);
  CHECK(hes.regime == "hessian");
  CHECK(hes.predicted_slope == -1.0);
  CHECK(hes.samples.size() == 5);
  CHECK((hes.verdict == "PASS" || hes.verdict == "FAIL"));

  std::string csv = decay_csv(hes);
  CHECK(csv.rfind("i,l,xi3,abs_m,predicted_bound,ratio\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}

TEST_CASE("decay sweeps refuse malformed requests") {
  Polynomial P = parse_polynomial("t1^2 + t2^4");
  CHECK_THROWS_WITH_AS(decay_fit(P, {0, 1}, {1}, 16.0, 64.0),
                       "direction must have positive components", OscError);
  CHECK_THROWS_WITH_AS(decay_fit(P, {1, 1}, {1}, 0.0, 64.0),
                       "bad frequency range", OscError);
  CHECK_THROWS_WITH_AS(decay_fit(P, {1, 1}, {1}, 5.0, 7.0),
                       "empty dyadic frequency range", OscError);
  Polynomial three = parse_polynomial("t1^2 + t1^4*t2^6 + t2^8");
  CHECK_THROWS_AS(decay_fit(three, {1, 1}, {1}, 16.0, 64.0), OscError);
}
