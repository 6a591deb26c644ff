// NEON kernel set (baseline on aarch64, no runtime feature probe needed).

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cstddef>

#include "etdkf/kernels.hpp"

namespace etdkf::kern {

namespace {

void axpy_neon(std::size_t n, double a, const double* x, double* y) {
  const float64x2_t av = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    float64x2_t x0 = vld1q_f64(x + i), x1 = vld1q_f64(x + i + 2);
    float64x2_t y0 = vld1q_f64(y + i), y1 = vld1q_f64(y + i + 2);
    vst1q_f64(y + i, vaddq_f64(y0, vmulq_f64(av, x0)));
    vst1q_f64(y + i + 2, vaddq_f64(y1, vmulq_f64(av, x1)));
  }
  for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

void scale_neon(std::size_t n, double a, const double* x, double* y) {
  const float64x2_t av = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    vst1q_f64(y + i, vmulq_f64(av, vld1q_f64(x + i)));
    vst1q_f64(y + i + 2, vmulq_f64(av, vld1q_f64(x + i + 2)));
  }
  for (; i < n; ++i) y[i] = a * x[i];
}

double dot_neon(std::size_t n, const double* x, const double* y) {
  // acc01 carries stripes 0,1 and acc23 stripes 2,3 so the lane layout and
  // the (s0+s2)+(s1+s3) reduction match the scalar reference bit for bit.
  float64x2_t acc01 = vdupq_n_f64(0.0), acc23 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc01 = vaddq_f64(acc01, vmulq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
    acc23 = vaddq_f64(acc23, vmulq_f64(vld1q_f64(x + i + 2), vld1q_f64(y + i + 2)));
  }
  float64x2_t pair = vaddq_f64(acc01, acc23);  // s0+s2, s1+s3
  double s = vgetq_lane_f64(pair, 0) + vgetq_lane_f64(pair, 1);
  for (; i < n; ++i) s = s + x[i] * y[i];
  return s;
}

const Kernels kNeon{"neon", axpy_neon, scale_neon, dot_neon};

}  // namespace

const Kernels* neon_kernels() { return &kNeon; }

}  // namespace etdkf::kern

#endif  // __aarch64__
