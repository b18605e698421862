// AVX2 variants. Compiled with -mavx2 only (no FMA: mul+add must round like
// the scalar reference). Reduction lanes follow the scheme in kernels.hpp.

#include "cliquemine/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace cliquemine::kernels {
namespace {

// (l0+l2) + (l1+l3), matching the scalar combine order.
inline double hsum4(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s2 = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(s2) + _mm_cvtsd_f64(_mm_unpackhi_pd(s2, s2));
}

double k_sum(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t nb = n - n % 4;
  for (std::size_t i = 0; i < nb; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double s = hsum4(acc);
  for (std::size_t i = nb; i < n; ++i) s += x[i];
  return s;
}

double k_dot(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t nb = n - n % 4;
  for (std::size_t i = 0; i < nb; i += 4) {
    __m256d prod = _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    acc = _mm256_add_pd(acc, prod);
  }
  double s = hsum4(acc);
  for (std::size_t i = nb; i < n; ++i) s += x[i] * y[i];
  return s;
}

void k_add(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t nb = n - n % 4;
  for (std::size_t i = 0; i < nb; i += 4)
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (std::size_t i = nb; i < n; ++i) out[i] = a[i] + b[i];
}

void k_sub(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t nb = n - n % 4;
  for (std::size_t i = 0; i < nb; i += 4)
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (std::size_t i = nb; i < n; ++i) out[i] = a[i] - b[i];
}

void k_mul(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t nb = n - n % 4;
  for (std::size_t i = 0; i < nb; i += 4)
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (std::size_t i = nb; i < n; ++i) out[i] = a[i] * b[i];
}

void k_halfsum(const double* a, const double* b, double* out, std::size_t n) {
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t nb = n - n % 4;
  for (std::size_t i = 0; i < nb; i += 4) {
    __m256d s = _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(half, s));
  }
  for (std::size_t i = nb; i < n; ++i) out[i] = 0.5 * (a[i] + b[i]);
}

void k_abs(const double* a, double* out, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  std::size_t nb = n - n % 4;
  for (std::size_t i = 0; i < nb; i += 4)
    _mm256_storeu_pd(out + i, _mm256_andnot_pd(sign, _mm256_loadu_pd(a + i)));
  for (std::size_t i = nb; i < n; ++i) out[i] = std::fabs(a[i]);
}

void k_affine(const double* x, double scale, double shift, double* out, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(scale);
  const __m256d vb = _mm256_set1_pd(shift);
  std::size_t nb = n - n % 4;
  for (std::size_t i = 0; i < nb; i += 4)
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_mul_pd(_mm256_loadu_pd(x + i), vs), vb));
  for (std::size_t i = nb; i < n; ++i) out[i] = x[i] * scale + shift;
}

void k_grad_combine(const double* p, const double* wp, double sum_p, double beta, double* out,
                    std::size_t n) {
  const double c0 = 2.0 * beta * sum_p;
  const double c1 = 2.0 * beta;
  const double c2 = 2.0 + 2.0 * beta;
  const __m256d v0 = _mm256_set1_pd(c0);
  const __m256d v1 = _mm256_set1_pd(c1);
  const __m256d v2 = _mm256_set1_pd(c2);
  std::size_t nb = n - n % 4;
  for (std::size_t i = 0; i < nb; i += 4) {
    __m256d t1 = _mm256_mul_pd(v1, _mm256_loadu_pd(p + i));
    __m256d t2 = _mm256_mul_pd(v2, _mm256_loadu_pd(wp + i));
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_sub_pd(v0, t1), t2));
  }
  for (std::size_t i = nb; i < n; ++i) out[i] = (c0 - c1 * p[i]) - c2 * wp[i];
}

void k_step_clip01(double* p, const double* g, double step, std::size_t n) {
  const __m256d vstep = _mm256_set1_pd(step);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t nb = n - n % 4;
  for (std::size_t i = 0; i < nb; i += 4) {
    __m256d v = _mm256_sub_pd(_mm256_loadu_pd(p + i), _mm256_mul_pd(vstep, _mm256_loadu_pd(g + i)));
    v = _mm256_min_pd(v, one);
    v = _mm256_max_pd(v, zero);
    _mm256_storeu_pd(p + i, v);
  }
  for (std::size_t i = nb; i < n; ++i) {
    double v = p[i] - step * g[i];
    v = std::min(v, 1.0);
    v = std::max(v, 0.0);
    p[i] = v;
  }
}

void k_minmax(const double* x, std::size_t n, double* lo, double* hi) {
  if (n < 8) {
    double a = x[0], b = x[0];
    for (std::size_t i = 1; i < n; ++i) {
      a = std::min(a, x[i]);
      b = std::max(b, x[i]);
    }
    *lo = a;
    *hi = b;
    return;
  }
  __m256d vlo = _mm256_loadu_pd(x);
  __m256d vhi = vlo;
  std::size_t nb = n - n % 4;
  for (std::size_t i = 4; i < nb; i += 4) {
    __m256d v = _mm256_loadu_pd(x + i);
    vlo = _mm256_min_pd(vlo, v);
    vhi = _mm256_max_pd(vhi, v);
  }
  alignas(32) double tl[4], th[4];
  _mm256_store_pd(tl, vlo);
  _mm256_store_pd(th, vhi);
  double a = std::min(std::min(tl[0], tl[1]), std::min(tl[2], tl[3]));
  double b = std::max(std::max(th[0], th[1]), std::max(th[2], th[3]));
  for (std::size_t i = nb; i < n; ++i) {
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
    __m256d acc = _mm256_setzero_pd();
    std::size_t nb = d - d % 4;
    for (std::size_t t = 0; t < nb; t += 4) {
      __m128i vi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + t));
      acc = _mm256_add_pd(acc, _mm256_i32gather_pd(x, vi, 8));
    }
    double s = hsum4(acc);
    for (std::size_t t = nb; t < d; ++t) s += x[idx[t]];
    out[r] = s;
  }
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops table = {
      k_sum,     k_dot,          k_add,      k_sub,    k_mul,
      k_halfsum, k_abs,          k_affine,   k_grad_combine,
      k_step_clip01, k_minmax,   k_csr_gather_sum, "avx2",
  };
  return table;
}

}  // namespace cliquemine::kernels

#endif  // x86_64
