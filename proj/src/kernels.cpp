#include "etdkf/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace etdkf::kern {

namespace {

void axpy_scalar(std::size_t n, double a, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + a * x[i];
}

void scale_scalar(std::size_t n, double a, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i];
}

double dot_scalar(std::size_t n, const double* x, const double* y) {
  // Striped accumulation mirrors the 4-lane SIMD layout exactly.
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 = s0 + x[i] * y[i];
    s1 = s1 + x[i + 1] * y[i + 1];
    s2 = s2 + x[i + 2] * y[i + 2];
    s3 = s3 + x[i + 3] * y[i + 3];
  }
  double s = (s0 + s2) + (s1 + s3);
  for (; i < n; ++i) s = s + x[i] * y[i];
  return s;
}

const Kernels kScalar{"scalar", axpy_scalar, scale_scalar, dot_scalar};

}  // namespace

const Kernels& scalar() { return kScalar; }

#if defined(__x86_64__)
const Kernels* avx2_kernels();  // kernels_avx2.cpp
bool cpu_has_avx2();
#endif
#if defined(__aarch64__)
const Kernels* neon_kernels();  // kernels_neon.cpp
#endif

std::vector<const Kernels*> available() {
  std::vector<const Kernels*> out{&kScalar};
#if defined(__x86_64__)
  if (cpu_has_avx2()) out.push_back(avx2_kernels());
#endif
#if defined(__aarch64__)
  out.push_back(neon_kernels());
#endif
  return out;
}

namespace {

std::atomic<const Kernels*> g_active{nullptr};

const Kernels* pick_default() {
  const Kernels* best = &kScalar;
  for (const Kernels* k : available()) best = k;  // last entry is the widest usable ISA
  if (const char* env = std::getenv("ETDKF_KERNELS")) {
    for (const Kernels* k : available())
      if (std::string_view(k->name) == env) return k;
  }
  return best;
}

}  // namespace

const Kernels& active() {
  const Kernels* k = g_active.load(std::memory_order_acquire);
  if (!k) {
    k = pick_default();
    g_active.store(k, std::memory_order_release);
  }
  return *k;
}

bool select(std::string_view name) {
  for (const Kernels* k : available()) {
    if (name == k->name) {
      g_active.store(k, std::memory_order_release);
      return true;
    }
  }
  return false;
}

}  // namespace etdkf::kern
