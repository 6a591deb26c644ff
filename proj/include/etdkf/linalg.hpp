#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace etdkf {

using Vec = std::vector<double>;

// Dense row-major matrix. Everything in this project is small (state
// dimension 4, consensus matrices up to the node count), so storage is a
// plain vector and operations go through the kern:: inner loops.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Mat(std::size_t rows, std::size_t cols, std::initializer_list<double> values);

  static Mat identity(std::size_t n);
  static Mat diag(const Vec& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  double* row(std::size_t i) { return data_.data() + i * cols_; }
  const double* row(std::size_t i) const { return data_.data() + i * cols_; }
  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

  Mat transposed() const;

  Mat& operator+=(const Mat& other);
  Mat& operator-=(const Mat& other);
  Mat& operator*=(double s);

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(double s, const Mat& a);
Vec operator*(const Mat& a, const Vec& x);

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator*(double s, Vec a);
double dot(const Vec& a, const Vec& b);

// In place M <- (M + M^T) / 2.
void symmetrize(Mat& m);

// x^T M x for square M.
double quadratic_form(const Mat& m, const Vec& x);

// Determinant by LU with partial pivoting (square only).
double determinant(Mat a);

// Lower-triangular Cholesky factorization of a symmetric matrix.
// ok == false signals loss of positive definiteness; callers translate
// that into their own error type.
class Cholesky {
 public:
  static Cholesky factor(const Mat& a);

  bool ok() const { return ok_; }
  const Mat& lower() const { return l_; }

  Vec solve(const Vec& b) const;   // A x = b
  Mat solve(const Mat& b) const;   // A X = B, column by column
  Mat inverse() const;             // symmetric
  double log_det() const;          // log det A

 private:
  Mat l_;
  bool ok_ = false;
};

// Eigenvalues of a symmetric matrix (ascending) by cyclic Jacobi rotations.
Vec symmetric_eigenvalues(Mat a, int max_sweeps = 64);

}  // namespace etdkf
