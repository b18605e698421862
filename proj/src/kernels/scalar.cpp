// Reference kernels. Every SIMD backend must reproduce these bit-for-bit;
// see the reduction scheme note in kernels.hpp before touching loop order.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>

#include "cliquemine/kernels.hpp"

namespace cliquemine::kernels {
namespace {

double k_sum(const double* x, std::size_t n) {
  double a0 = 0, a1 = 0, a2 = 0, a3 = 0;
  std::size_t nb = n - n % 4;
  for (std::size_t i = 0; i < nb; i += 4) {
    a0 += x[i];
    a1 += x[i + 1];
    a2 += x[i + 2];
    a3 += x[i + 3];
  }
  double s = (a0 + a2) + (a1 + a3);
  for (std::size_t i = nb; i < n; ++i) s += x[i];
  return s;
}

double k_dot(const double* x, const double* y, std::size_t n) {
  double a0 = 0, a1 = 0, a2 = 0, a3 = 0;
  std::size_t nb = n - n % 4;
  for (std::size_t i = 0; i < nb; i += 4) {
    a0 += x[i] * y[i];
    a1 += x[i + 1] * y[i + 1];
    a2 += x[i + 2] * y[i + 2];
    a3 += x[i + 3] * y[i + 3];
  }
  double s = (a0 + a2) + (a1 + a3);
  for (std::size_t i = nb; i < n; ++i) s += x[i] * y[i];
  return s;
}

void k_add(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void k_sub(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void k_mul(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void k_halfsum(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (a[i] + b[i]);
}

void k_abs(const double* a, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::fabs(a[i]);
}

void k_affine(const double* x, double scale, double shift, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * scale + shift;
}

void k_grad_combine(const double* p, const double* wp, double sum_p, double beta, double* out,
                    std::size_t n) {
  const double c0 = 2.0 * beta * sum_p;
  const double c1 = 2.0 * beta;
  const double c2 = 2.0 + 2.0 * beta;
  for (std::size_t i = 0; i < n; ++i) out[i] = (c0 - c1 * p[i]) - c2 * wp[i];
}

void k_step_clip01(double* p, const double* g, double step, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double v = p[i] - step * g[i];
    v = std::min(v, 1.0);
    v = std::max(v, 0.0);
    p[i] = v;
  }
}

void k_minmax(const double* x, std::size_t n, double* lo, double* hi) {
  double a = x[0], b = x[0];
  for (std::size_t i = 1; i < n; ++i) {
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
    double a0 = 0, a1 = 0, a2 = 0, a3 = 0;
    std::size_t nb = d - d % 4;
    for (std::size_t t = 0; t < nb; t += 4) {
      a0 += x[idx[t]];
      a1 += x[idx[t + 1]];
      a2 += x[idx[t + 2]];
      a3 += x[idx[t + 3]];
    }
    double s = (a0 + a2) + (a1 + a3);
    for (std::size_t t = nb; t < d; ++t) s += x[idx[t]];
    out[r] = s;
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops table = {
      k_sum,     k_dot,          k_add,      k_sub,    k_mul,
      k_halfsum, k_abs,          k_affine,   k_grad_combine,
      k_step_clip01, k_minmax,   k_csr_gather_sum, "scalar",
  };
  return table;
}

}  // namespace cliquemine::kernels
