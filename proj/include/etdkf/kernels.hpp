#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

// Data-parallel inner loops used by the dense linear algebra layer.
//
// Every kernel has a scalar reference implementation plus SIMD variants
// (AVX2 on x86-64, NEON on aarch64) selected once at startup from CPU
// capabilities. All variants are bit-exact replicas of the reference:
// element order, accumulator striping, and the final reduction order are
// fixed, and FMA contraction is disabled project-wide, so switching the
// backend never changes a single output bit.

namespace etdkf::kern {

struct Kernels {
  const char* name;
  // y[i] += a * x[i]
  void (*axpy)(std::size_t n, double a, const double* x, double* y);
  // y[i] = a * x[i]
  void (*scale)(std::size_t n, double a, const double* x, double* y);
  // sum_i x[i]*y[i], accumulated in 4 stripes (i mod 4) and reduced as
  // (s0+s2) + (s1+s3), with the tail n%4 added sequentially afterwards.
  double (*dot)(std::size_t n, const double* x, const double* y);
};

// Kernel set active for this process (CPU-dispatched, overridable through
// the ETDKF_KERNELS environment variable: "scalar", "avx2", "neon").
const Kernels& active();

// Always the scalar reference set.
const Kernels& scalar();

// Every set compiled into this binary and usable on this CPU.
std::vector<const Kernels*> available();

// Force a backend by name; returns false if unknown/unusable. Test hook.
bool select(std::string_view name);

inline void axpy(std::size_t n, double a, const double* x, double* y) { active().axpy(n, a, x, y); }
inline void scale(std::size_t n, double a, const double* x, double* y) { active().scale(n, a, x, y); }
inline double dot(std::size_t n, const double* x, const double* y) { return active().dot(n, x, y); }

}  // namespace etdkf::kern
