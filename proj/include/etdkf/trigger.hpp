#pragma once

#include <utility>

#include "etdkf/gaussian.hpp"

namespace etdkf {

// Threshold tau plus the scalars derived from the two roots of
// lambda - log(lambda) - 1 = 2 tau. For any non-transmitting pair these
// bound how far the true density can sit from its reference:
//   ||xh - xb||^2_Om <= alpha*,   Om/(1+beta*) <= Om_bar <= (1+delta*) Om,
// and delta >= delta* makes the flattened silent-neighbor matrix never
// exceed the true one, which is what keeps the filter stable.
struct TriggerCalibration {
  double tau = 0.0;
  double lambda_lo = 1.0;  // root in (0, 1)
  double lambda_hi = 1.0;  // root in (1, inf)
  double alpha_star = 0.0;
  double beta_star = 0.0;
  double delta_star = 0.0;
  double delta = 0.0;  // flattening weight actually used, >= delta_star

  // Continuity limit at tau = 0 (both roots collapse to 1). Used for the
  // full-rate-equivalent tau = 0 runs and as a plain delta carrier for
  // scheduled strategies; calibrate() itself requires tau > 0.
  static TriggerCalibration exact_zero(double flatten_delta = 0.0) {
    TriggerCalibration c;
    c.delta = flatten_delta;
    return c;
  }
};

// Both roots of lambda - log(lambda) - 1 = 2 tau, (lo, hi) with
// 0 < lo < 1 < hi. Residual <= 1e-12 at both. Throws NonPositiveTau.
std::pair<double, double> solve_lambda_pair(double tau);

// Populate the calibration for tau > 0; delta = delta* + delta_margin.
TriggerCalibration calibrate(double tau, double delta_margin = 0.0);

// Transmission test: true iff D(local || reference) > tau (the boundary
// value tau itself does not transmit).
bool should_transmit(const GaussianInfo& local, const GaussianInfo& reference, double tau);

}  // namespace etdkf
