// NEON variants for aarch64. float64x2 pairs model reference lanes {0,1} and
// {2,3}; combine order and tail handling mirror the scalar kernels exactly.

#include "cliquemine/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <algorithm>
#include <cmath>

namespace cliquemine::kernels {
namespace {

// (l0+l2) + (l1+l3) with acc01 = {l0,l1}, acc23 = {l2,l3}.
inline double hsum4(float64x2_t acc01, float64x2_t acc23) {
  float64x2_t s2 = vaddq_f64(acc01, acc23);
  return vgetq_lane_f64(s2, 0) + vgetq_lane_f64(s2, 1);
}

double k_sum(const double* x, std::size_t n) {
  float64x2_t a01 = vdupq_n_f64(0.0), a23 = vdupq_n_f64(0.0);
  std::size_t nb = n - n % 4;
  for (std::size_t i = 0; i < nb; i += 4) {
    a01 = vaddq_f64(a01, vld1q_f64(x + i));
    a23 = vaddq_f64(a23, vld1q_f64(x + i + 2));
  }
  double s = hsum4(a01, a23);
  for (std::size_t i = nb; i < n; ++i) s += x[i];
  return s;
}

double k_dot(const double* x, const double* y, std::size_t n) {
  float64x2_t a01 = vdupq_n_f64(0.0), a23 = vdupq_n_f64(0.0);
  std::size_t nb = n - n % 4;
  for (std::size_t i = 0; i < nb; i += 4) {
    a01 = vaddq_f64(a01, vmulq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
    a23 = vaddq_f64(a23, vmulq_f64(vld1q_f64(x + i + 2), vld1q_f64(y + i + 2)));
  }
  double s = hsum4(a01, a23);
  for (std::size_t i = nb; i < n; ++i) s += x[i] * y[i];
  return s;
}

void k_add(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t nb = n - n % 2;
  for (std::size_t i = 0; i < nb; i += 2)
    vst1q_f64(out + i, vaddq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (std::size_t i = nb; i < n; ++i) out[i] = a[i] + b[i];
}

void k_sub(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t nb = n - n % 2;
  for (std::size_t i = 0; i < nb; i += 2)
    vst1q_f64(out + i, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (std::size_t i = nb; i < n; ++i) out[i] = a[i] - b[i];
}

void k_mul(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t nb = n - n % 2;
  for (std::size_t i = 0; i < nb; i += 2)
    vst1q_f64(out + i, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (std::size_t i = nb; i < n; ++i) out[i] = a[i] * b[i];
}

void k_halfsum(const double* a, const double* b, double* out, std::size_t n) {
  const float64x2_t half = vdupq_n_f64(0.5);
  std::size_t nb = n - n % 2;
  for (std::size_t i = 0; i < nb; i += 2)
    vst1q_f64(out + i, vmulq_f64(half, vaddq_f64(vld1q_f64(a + i), vld1q_f64(b + i))));
  for (std::size_t i = nb; i < n; ++i) out[i] = 0.5 * (a[i] + b[i]);
}

void k_abs(const double* a, double* out, std::size_t n) {
  std::size_t nb = n - n % 2;
  for (std::size_t i = 0; i < nb; i += 2) vst1q_f64(out + i, vabsq_f64(vld1q_f64(a + i)));
  for (std::size_t i = nb; i < n; ++i) out[i] = std::fabs(a[i]);
}

void k_affine(const double* x, double scale, double shift, double* out, std::size_t n) {
  const float64x2_t vs = vdupq_n_f64(scale);
  const float64x2_t vb = vdupq_n_f64(shift);
  std::size_t nb = n - n % 2;
  for (std::size_t i = 0; i < nb; i += 2)
    vst1q_f64(out + i, vaddq_f64(vmulq_f64(vld1q_f64(x + i), vs), vb));
  for (std::size_t i = nb; i < n; ++i) out[i] = x[i] * scale + shift;
}

void k_grad_combine(const double* p, const double* wp, double sum_p, double beta, double* out,
                    std::size_t n) {
  const double c0 = 2.0 * beta * sum_p;
  const double c1 = 2.0 * beta;
  const double c2 = 2.0 + 2.0 * beta;
  const float64x2_t v0 = vdupq_n_f64(c0);
  const float64x2_t v1 = vdupq_n_f64(c1);
  const float64x2_t v2 = vdupq_n_f64(c2);
  std::size_t nb = n - n % 2;
  for (std::size_t i = 0; i < nb; i += 2) {
    float64x2_t t1 = vmulq_f64(v1, vld1q_f64(p + i));
    float64x2_t t2 = vmulq_f64(v2, vld1q_f64(wp + i));
    vst1q_f64(out + i, vsubq_f64(vsubq_f64(v0, t1), t2));
  }
  for (std::size_t i = nb; i < n; ++i) out[i] = (c0 - c1 * p[i]) - c2 * wp[i];
}

void k_step_clip01(double* p, const double* g, double step, std::size_t n) {
  const float64x2_t vstep = vdupq_n_f64(step);
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t zero = vdupq_n_f64(0.0);
  std::size_t nb = n - n % 2;
  for (std::size_t i = 0; i < nb; i += 2) {
    float64x2_t v = vsubq_f64(vld1q_f64(p + i), vmulq_f64(vstep, vld1q_f64(g + i)));
    v = vminq_f64(v, one);
    v = vmaxq_f64(v, zero);
    vst1q_f64(p + i, v);
  }
  for (std::size_t i = nb; i < n; ++i) {
    double v = p[i] - step * g[i];
    v = std::min(v, 1.0);
    v = std::max(v, 0.0);
    p[i] = v;
  }
}

void k_minmax(const double* x, std::size_t n, double* lo, double* hi) {
  double a = x[0], b = x[0];
  std::size_t i = 1;
  if (n >= 3) {
    float64x2_t vlo = vld1q_f64(x + 1);
    float64x2_t vhi = vlo;
    for (i = 3; i + 1 < n; i += 2) {
      float64x2_t v = vld1q_f64(x + i);
      vlo = vminq_f64(vlo, v);
      vhi = vmaxq_f64(vhi, v);
    }
    a = std::min(a, std::min(vgetq_lane_f64(vlo, 0), vgetq_lane_f64(vlo, 1)));
    b = std::max(b, std::max(vgetq_lane_f64(vhi, 0), vgetq_lane_f64(vhi, 1)));
  }
  for (; i < n; ++i) {
    a = std::min(a, x[i]);
    b = std::max(b, x[i]);
  }
  *lo = a;
  *hi = b;
}

void k_csr_gather_sum(const std::int32_t* offsets, const std::int32_t* adj, const double* x,
                      double* out, std::size_t rows) {
  for (std::size_t r = 0; r < rows; ++r) {
    const std::int32_t* idx = adj + offsets[r];
    const std::size_t d = static_cast<std::size_t>(offsets[r + 1] - offsets[r]);
    float64x2_t a01 = vdupq_n_f64(0.0), a23 = vdupq_n_f64(0.0);
    std::size_t nb = d - d % 4;
    for (std::size_t t = 0; t < nb; t += 4) {
      float64x2_t g01 = {x[idx[t]], x[idx[t + 1]]};
      float64x2_t g23 = {x[idx[t + 2]], x[idx[t + 3]]};
      a01 = vaddq_f64(a01, g01);
      a23 = vaddq_f64(a23, g23);
    }
    double s = hsum4(a01, a23);
    for (std::size_t t = nb; t < d; ++t) s += x[idx[t]];
    out[r] = s;
  }
}

}  // namespace

const Ops& neon_ops() {
  static const Ops table = {
      k_sum,     k_dot,          k_add,      k_sub,    k_mul,
      k_halfsum, k_abs,          k_affine,   k_grad_combine,
      k_step_clip01, k_minmax,   k_csr_gather_sum, "neon",
  };
  return table;
}

}  // namespace cliquemine::kernels

#endif  // __aarch64__
