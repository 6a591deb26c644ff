#include "etdkf/models.hpp"

#include <cmath>

#include "etdkf/errors.hpp"

namespace etdkf {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kMinRange = 1e-6;  // m; scenario geometry never gets close

}  // namespace

LinearDynamics cv_dynamics(double T, const std::array<double, 4>& q_diag) {
  if (!(T > 0.0)) throw NonPositiveInput("sampling interval T must be > 0");
  for (double q : q_diag)
    if (!(q > 0.0)) throw NonPositiveInput("process noise diagonal must be > 0");
  LinearDynamics d;
  d.T = T;
  d.A = Mat::identity(kStateDim);
  d.A(0, 1) = T;
  d.A(2, 3) = T;
  d.Q = Mat::diag(Vec(q_diag.begin(), q_diag.end()));
  if (std::abs(determinant(d.A)) <= 1e-9)
    throw NonPositiveInput("transition matrix is numerically singular");
  return d;
}

double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * kPi);  // (-pi, pi] up to the -pi boundary
  if (a <= -kPi) a = kPi;
  return a;
}

double measure(const MeasurementModel& m, const StateVector& x, double noise) {
  switch (m.kind) {
    case SensorKind::LinearXi:
      return x[0] + noise;
    case SensorKind::LinearEta:
      return x[2] + noise;
    case SensorKind::Toa:
    case SensorKind::Doa: {
      const double dx = x[0] - m.sensor_pos[0];
      const double dy = x[2] - m.sensor_pos[1];
      const double r = std::hypot(dx, dy);
      if (r < kMinRange) throw SensorCoincidesWithTarget();
      if (m.kind == SensorKind::Toa) return r + noise;
      return wrap_angle(std::atan2(dy, dx)) + noise;
    }
  }
  throw ContractViolation("unknown sensor kind");
}

Vec jacobian(const MeasurementModel& m, const StateVector& x) {
  switch (m.kind) {
    case SensorKind::LinearXi:
      return {1.0, 0.0, 0.0, 0.0};
    case SensorKind::LinearEta:
      return {0.0, 0.0, 1.0, 0.0};
    case SensorKind::Toa:
    case SensorKind::Doa: {
      const double dx = x[0] - m.sensor_pos[0];
      const double dy = x[2] - m.sensor_pos[1];
      const double r2 = dx * dx + dy * dy;
      const double r = std::sqrt(r2);
      if (r < kMinRange) throw SensorCoincidesWithTarget();
      if (m.kind == SensorKind::Toa) return {dx / r, 0.0, dy / r, 0.0};
      return {-dy / r2, 0.0, dx / r2, 0.0};
    }
  }
  throw ContractViolation("unknown sensor kind");
}

}  // namespace etdkf
