#pragma once

#include <array>

#include "etdkf/linalg.hpp"

namespace etdkf {

// Planar constant-velocity state [xi, xi_dot, eta, eta_dot] (m, m/s).
using StateVector = std::array<double, 4>;

constexpr std::size_t kStateDim = 4;

inline Vec to_vec(const StateVector& x) { return Vec(x.begin(), x.end()); }

// x_{k+1} = A x_k + w_k, w ~ N(0, Q). A must be invertible.
struct LinearDynamics {
  Mat A;
  Mat Q;
  double T = 1.0;  // sampling interval, s
};

// Discretized constant-velocity model: unit diagonal, T coupling position
// to velocity, Q = diag(q_diag).
LinearDynamics cv_dynamics(double T, const std::array<double, 4>& q_diag);

enum class SensorKind {
  LinearXi,   // y = xi + v
  LinearEta,  // y = eta + v
  Toa,        // y = range to sensor + v
  Doa,        // y = bearing from sensor + v, full-plane angle in (-pi, pi]
};

struct MeasurementModel {
  SensorKind kind = SensorKind::LinearXi;
  std::array<double, 2> sensor_pos{0.0, 0.0};  // used by Toa / Doa
  double noise_var = 1.0;                      // m^2, or rad^2 for Doa
};

// Wrap an angle into (-pi, pi].
double wrap_angle(double a);

// h(x) + noise for the given model. Throws SensorCoincidesWithTarget when a
// Toa/Doa target sits within 1e-6 m of the sensor.
double measure(const MeasurementModel& m, const StateVector& x, double noise);

// Row Jacobian dh/dx (1x4) evaluated at x.
Vec jacobian(const MeasurementModel& m, const StateVector& x);

}  // namespace etdkf
