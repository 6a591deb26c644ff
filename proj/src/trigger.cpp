#include "etdkf/trigger.hpp"

#include <cmath>
#include <limits>

#include "etdkf/errors.hpp"

namespace etdkf {

namespace {

// g(lambda) = lambda - log(lambda) - 1 - 2 tau; strictly decreasing on
// (0,1), strictly increasing on (1,inf), with g(1) = -2 tau < 0.
double residual(double lambda, double tau) { return lambda - std::log(lambda) - 1.0 - 2.0 * tau; }

double bisect_then_newton(double lo, double hi, double tau) {
  // g(lo) > 0 > g(hi) or g(lo) < 0 < g(hi); bracketed bisection first.
  double flo = residual(lo, tau);
  for (int it = 0; it < 200 && hi - lo > std::numeric_limits<double>::epsilon() * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = residual(mid, tau);
    if ((flo > 0.0) == (fmid > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 4; ++it) {
    const double g = residual(x, tau);
    const double dg = 1.0 - 1.0 / x;
    if (dg == 0.0) break;
    const double next = x - g / dg;
    if (!(next > 0.0) || !std::isfinite(next)) break;
    x = next;
  }
  return x;
}

}  // namespace

std::pair<double, double> solve_lambda_pair(double tau) {
  if (!(tau > 0.0)) throw NonPositiveTau();

  const double lo_root = bisect_then_newton(std::numeric_limits<double>::min(), 1.0, tau);

  double hi = 2.0;
  while (residual(hi, tau) < 0.0) hi *= 2.0;
  const double hi_root = bisect_then_newton(1.0, hi, tau);

  return {lo_root, hi_root};
}

TriggerCalibration calibrate(double tau, double delta_margin) {
  if (!(tau > 0.0)) throw NonPositiveTau();
  if (delta_margin < 0.0) throw NegativeDelta("delta margin must be >= 0");
  TriggerCalibration c;
  c.tau = tau;
  std::tie(c.lambda_lo, c.lambda_hi) = solve_lambda_pair(tau);
  c.delta_star = c.lambda_hi - 1.0;
  c.beta_star = 1.0 / c.lambda_lo - 1.0;
  c.alpha_star = 2.0 * tau * (1.0 + c.beta_star);
  c.delta = c.delta_star + delta_margin;
  return c;
}

bool should_transmit(const GaussianInfo& local, const GaussianInfo& reference, double tau) {
  return kld(local, reference) > tau;
}

}  // namespace etdkf
