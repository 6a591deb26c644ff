#pragma once

#include <utility>
#include <vector>

#include "etdkf/linalg.hpp"

namespace etdkf {

// Gaussian density in mean / covariance form.
struct GaussianMoment {
  Vec mean;
  Mat cov;

  std::size_t dim() const { return mean.size(); }
  friend bool operator==(const GaussianMoment&, const GaussianMoment&) = default;
};

// The same density as information pair: info_mat = cov^-1,
// info_vec = info_mat * mean. Consensus fusion and flattening are linear
// in this representation, so it is the storage form of every node.
struct GaussianInfo {
  Vec info_vec;
  Mat info_mat;

  std::size_t dim() const { return info_vec.size(); }
  friend bool operator==(const GaussianInfo&, const GaussianInfo&) = default;
};

GaussianInfo to_info(const GaussianMoment& g);
GaussianMoment to_moment(const GaussianInfo& g);

// Kullback-Leibler divergence D(p || p_ref), closed form:
//   1/2 { tr(W Om^-1) + ||xh - xb||^2_W + log(det Om / det W) - n }
// with (q, Om) the first argument and (qb, W) the reference. Throws
// rather than clamping when either matrix fails the PD factorization.
double kld(const GaussianInfo& p, const GaussianInfo& p_ref);
double kld(const GaussianMoment& p, const GaussianMoment& p_ref);

// Raise to the power 1/(1+delta) and renormalize: information pair scaled
// by 1/(1+delta); same mean, covariance inflated by (1+delta).
GaussianInfo flatten(const GaussianInfo& g, double delta);

// Weighted geometric-mean (covariance intersection) fusion: the convex
// combination of information pairs. Weights must be > 0 and sum to 1.
GaussianInfo fuse(const std::vector<std::pair<double, const GaussianInfo*>>& terms);

}  // namespace etdkf
