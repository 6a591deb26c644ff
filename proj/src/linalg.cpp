#include "etdkf/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <utility>

#include "etdkf/errors.hpp"
#include "etdkf/kernels.hpp"

namespace etdkf {

Mat::Mat(std::size_t rows, std::size_t cols, std::initializer_list<double> values)
    : rows_(rows), cols_(cols), data_(values) {
  if (data_.size() != rows * cols) throw DimensionMismatch("initializer size does not match shape");
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::diag(const Vec& d) {
  Mat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat& Mat::operator+=(const Mat& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch();
  kern::axpy(data_.size(), 1.0, other.data(), data());
  return *this;
}

Mat& Mat::operator-=(const Mat& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch();
  kern::axpy(data_.size(), -1.0, other.data(), data());
  return *this;
}

Mat& Mat::operator*=(double s) {
  kern::scale(data_.size(), s, data(), data());
  return *this;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shapes");
  Mat c(a.rows(), b.cols());
  // Row-of-C accumulation keeps the inner loop contiguous in both operands.
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) kern::axpy(b.cols(), a(i, k), b.row(k), c.row(i));
  return c;
}

Mat operator*(double s, const Mat& a) {
  Mat c(a.rows(), a.cols());
  kern::scale(a.size(), s, a.data(), c.data());
  return c;
}

Vec operator*(const Mat& a, const Vec& x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector shapes");
  Vec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = kern::dot(a.cols(), a.row(i), x.data());
  return y;
}

Vec operator+(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch();
  kern::axpy(a.size(), 1.0, b.data(), a.data());
  return a;
}

Vec operator-(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch();
  kern::axpy(a.size(), -1.0, b.data(), a.data());
  return a;
}

Vec operator*(double s, Vec a) {
  kern::scale(a.size(), s, a.data(), a.data());
  return a;
}

double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch();
  return kern::dot(a.size(), a.data(), b.data());
}

void symmetrize(Mat& m) {
  assert(m.rows() == m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      const double v = 0.5 * (m(i, j) + m(j, i));
      m(i, j) = v;
      m(j, i) = v;
    }
}

double quadratic_form(const Mat& m, const Vec& x) {
  if (m.rows() != m.cols() || m.rows() != x.size()) throw DimensionMismatch();
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) s += x[i] * kern::dot(m.cols(), m.row(i), x.data());
  return s;
}

double determinant(Mat a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = a.rows();
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (a(piv, k) == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

Cholesky Cholesky::factor(const Mat& a) {
  Cholesky c;
  if (a.rows() != a.cols()) throw DimensionMismatch("Cholesky of non-square matrix");
  const std::size_t n = a.rows();
  c.l_ = Mat(n, n);
  Mat& l = c.l_;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double s = kern::dot(j, l.row(i), l.row(j));
      if (i == j) {
        const double d = a(i, i) - s;
        if (!(d > 0.0) || !std::isfinite(d)) return c;  // ok_ stays false
        l(i, i) = std::sqrt(d);
      } else {
        l(i, j) = (a(i, j) - s) / l(j, j);
      }
    }
  }
  c.ok_ = true;
  return c;
}

Vec Cholesky::solve(const Vec& b) const {
  assert(ok_);
  const std::size_t n = l_.rows();
  if (b.size() != n) throw DimensionMismatch();
  Vec y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = (b[i] - kern::dot(i, l_.row(i), y.data())) / l_(i, i);
  Vec x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = y[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= l_(k, i) * x[k];
    x[i] = s / l_(i, i);
  }
  return x;
}

Mat Cholesky::solve(const Mat& b) const {
  assert(ok_);
  const std::size_t n = l_.rows();
  if (b.rows() != n) throw DimensionMismatch();
  Mat x(n, b.cols());
  Vec col(n);
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = b(i, j);
    Vec sol = solve(col);
    for (std::size_t i = 0; i < n; ++i) x(i, j) = sol[i];
  }
  return x;
}

Mat Cholesky::inverse() const {
  Mat inv = solve(Mat::identity(l_.rows()));
  symmetrize(inv);
  return inv;
}

double Cholesky::log_det() const {
  assert(ok_);
  double s = 0.0;
  for (std::size_t i = 0; i < l_.rows(); ++i) s += std::log(l_(i, i));
  return 2.0 * s;
}

Vec symmetric_eigenvalues(Mat a, int max_sweeps) {
  if (a.rows() != a.cols()) throw DimensionMismatch();
  const std::size_t n = a.rows();
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  Vec ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace etdkf
