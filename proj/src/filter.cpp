#include "etdkf/filter.hpp"

#include <cmath>

#include "etdkf/errors.hpp"

namespace etdkf {

FilterBelief predict(const FilterBelief& b, const LinearDynamics& d) {
  FilterBelief out;
  out.density.mean = d.A * b.density.mean;
  out.density.cov = d.A * b.density.cov * d.A.transposed() + d.Q;
  symmetrize(out.density.cov);
  out.time_index = b.time_index + 1;
  return out;
}

namespace {

FilterBelief joseph_update(const FilterBelief& b, double innovation, const Vec& h_row, double r) {
  if (!(r > 0.0)) throw InnovationCovarianceNotPositive("measurement variance must be > 0");
  const Mat& p = b.density.cov;
  const std::size_t n = p.rows();

  const Vec ph = p * h_row;  // P H^T (symmetric P)
  const double s = dot(h_row, ph) + r;
  if (!(s > 0.0) || !std::isfinite(s)) throw InnovationCovarianceNotPositive();

  Vec gain = (1.0 / s) * ph;  // K

  FilterBelief out;
  out.time_index = b.time_index;
  out.density.mean = b.density.mean + innovation * gain;

  Mat ikh = Mat::identity(n);  // I - K H
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ikh(i, j) -= gain[i] * h_row[j];
  out.density.cov = ikh * p * ikh.transposed();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.density.cov(i, j) += gain[i] * r * gain[j];
  symmetrize(out.density.cov);
  return out;
}

}  // namespace

FilterBelief correct_linear(const FilterBelief& b, double y, const Vec& h_row, double r) {
  if (h_row.size() != b.density.dim()) throw DimensionMismatch("observation row size");
  return joseph_update(b, y - dot(h_row, b.density.mean), h_row, r);
}

FilterBelief correct_ekf(const FilterBelief& b, double y, const MeasurementModel& m) {
  if (m.kind == SensorKind::LinearXi || m.kind == SensorKind::LinearEta)
    return correct_linear(b, y, jacobian(m, {}), m.noise_var);

  StateVector x{b.density.mean[0], b.density.mean[1], b.density.mean[2], b.density.mean[3]};
  const Vec h_row = jacobian(m, x);
  double innovation = y - measure(m, x, 0.0);
  if (m.kind == SensorKind::Doa) innovation = wrap_angle(innovation);
  return joseph_update(b, innovation, h_row, m.noise_var);
}

}  // namespace etdkf
