#pragma once

#include "etdkf/gaussian.hpp"
#include "etdkf/models.hpp"

namespace etdkf {

// One node's local belief over the target state at a given time index.
struct FilterBelief {
  GaussianMoment density;
  int time_index = 0;
};

// Kalman prediction: mean <- A mean, cov <- A cov A^T + Q (symmetrized).
FilterBelief predict(const FilterBelief& b, const LinearDynamics& d);

// Scalar-measurement Kalman correction with the Joseph-form covariance
// update (keeps the covariance PSD over long runs).
FilterBelief correct_linear(const FilterBelief& b, double y, const Vec& h_row, double r);

// Extended Kalman correction: relinearize once at the predicted mean.
// Linear sensor kinds route to correct_linear with their fixed row; Doa
// innovations are wrapped into (-pi, pi].
FilterBelief correct_ekf(const FilterBelief& b, double y, const MeasurementModel& m);

}  // namespace etdkf
