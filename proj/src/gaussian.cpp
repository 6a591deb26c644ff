#include "etdkf/gaussian.hpp"

#include <cmath>

#include "etdkf/errors.hpp"
#include "etdkf/kernels.hpp"

namespace etdkf {

namespace {

Cholesky factor_or_throw(const Mat& m, const char* what) {
  Cholesky c = Cholesky::factor(m);
  if (!c.ok()) throw NotPositiveDefinite(what);
  return c;
}

}  // namespace

GaussianInfo to_info(const GaussianMoment& g) {
  if (g.cov.rows() != g.dim() || g.cov.cols() != g.dim())
    throw DimensionMismatch("mean / covariance dimensions differ");
  Cholesky c = factor_or_throw(g.cov, "covariance is not positive definite");
  GaussianInfo out;
  out.info_mat = c.inverse();
  out.info_vec = out.info_mat * g.mean;
  return out;
}

GaussianMoment to_moment(const GaussianInfo& g) {
  if (g.info_mat.rows() != g.dim() || g.info_mat.cols() != g.dim())
    throw DimensionMismatch("information vector / matrix dimensions differ");
  Cholesky c = factor_or_throw(g.info_mat, "information matrix is not positive definite");
  GaussianMoment out;
  out.mean = c.solve(g.info_vec);
  out.cov = c.inverse();
  return out;
}

double kld(const GaussianInfo& p, const GaussianInfo& p_ref) {
  const std::size_t n = p.dim();
  if (p_ref.dim() != n) throw DimensionMismatch("KLD of densities with different dimensions");
  Cholesky cp = factor_or_throw(p.info_mat, "first KLD argument is not positive definite");
  Cholesky cr = factor_or_throw(p_ref.info_mat, "KLD reference is not positive definite");

  const Mat p_cov = cp.inverse();  // Om^-1
  // tr(W Om^-1): both symmetric, so it is the elementwise inner product.
  const double trace_term = kern::dot(p_cov.size(), p_ref.info_mat.data(), p_cov.data());
  const Vec diff = cp.solve(p.info_vec) - cr.solve(p_ref.info_vec);
  const double maha = quadratic_form(p_ref.info_mat, diff);
  const double log_det_ratio = cp.log_det() - cr.log_det();
  return 0.5 * (trace_term + maha + log_det_ratio - static_cast<double>(n));
}

double kld(const GaussianMoment& p, const GaussianMoment& p_ref) {
  const std::size_t n = p.dim();
  if (p_ref.dim() != n) throw DimensionMismatch("KLD of densities with different dimensions");
  Cholesky cp = factor_or_throw(p.cov, "first KLD argument is not positive definite");
  Cholesky cr = factor_or_throw(p_ref.cov, "KLD reference is not positive definite");

  const Mat ref_inv = cr.inverse();
  const double trace_term = kern::dot(ref_inv.size(), ref_inv.data(), p.cov.data());
  const Vec diff = p.mean - p_ref.mean;
  const double maha = quadratic_form(ref_inv, diff);
  const double log_det_ratio = cr.log_det() - cp.log_det();
  return 0.5 * (trace_term + maha + log_det_ratio - static_cast<double>(n));
}

GaussianInfo flatten(const GaussianInfo& g, double delta) {
  if (delta < 0.0) throw NegativeDelta();
  const double w = 1.0 / (1.0 + delta);
  GaussianInfo out;
  out.info_vec.resize(g.dim());
  out.info_mat = Mat(g.info_mat.rows(), g.info_mat.cols());
  kern::scale(g.info_vec.size(), w, g.info_vec.data(), out.info_vec.data());
  kern::scale(g.info_mat.size(), w, g.info_mat.data(), out.info_mat.data());
  return out;
}

GaussianInfo fuse(const std::vector<std::pair<double, const GaussianInfo*>>& terms) {
  if (terms.empty()) throw WeightsNotConvex("fusion needs at least one term");
  double wsum = 0.0;
  const std::size_t n = terms.front().second->dim();
  for (const auto& [w, g] : terms) {
    if (!(w > 0.0)) throw WeightsNotConvex("fusion weight is not strictly positive");
    if (g->dim() != n) throw DimensionMismatch("fusion of densities with different dimensions");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > 1e-12) throw WeightsNotConvex("fusion weights do not sum to 1");

  GaussianInfo out;
  out.info_vec.assign(n, 0.0);
  out.info_mat = Mat(n, n);
  for (const auto& [w, g] : terms) {
    kern::axpy(n, w, g->info_vec.data(), out.info_vec.data());
    kern::axpy(out.info_mat.size(), w, g->info_mat.data(), out.info_mat.data());
  }
  symmetrize(out.info_mat);
  if (!Cholesky::factor(out.info_mat).ok())
    throw NotPositiveDefinite("fused information matrix lost positive definiteness");
  return out;
}

}  // namespace etdkf
