#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace cliquemine::kernels {

// Double-precision vector kernels behind a runtime-dispatched backend table.
// Scalar is the reference; AVX2/NEON variants must be bit-identical to it.
// To make that hold, every reduction uses a fixed 4-accumulator scheme
// (lane j sums elements with index = j mod 4, combined as (l0+l2)+(l1+l3),
// tail elements added last in order) and no backend may fuse mul+add.
struct Ops {
  double (*sum)(const double* x, std::size_t n);
  double (*dot)(const double* x, const double* y, std::size_t n);
  void (*add)(const double* a, const double* b, double* out, std::size_t n);
  void (*sub)(const double* a, const double* b, double* out, std::size_t n);
  void (*mul)(const double* a, const double* b, double* out, std::size_t n);
  // out = 0.5 * (a + b)
  void (*halfsum)(const double* a, const double* b, double* out, std::size_t n);
  void (*abs)(const double* a, double* out, std::size_t n);
  // out = x * scale + shift
  void (*affine)(const double* x, double scale, double shift, double* out, std::size_t n);
  // out_i = 2*beta*sum_p - (2*beta)*p_i - (2+2*beta)*wp_i
  void (*grad_combine)(const double* p, const double* wp, double sum_p, double beta,
                       double* out, std::size_t n);
  // p_i = clamp(p_i - step * g_i, 0, 1)
  void (*step_clip01)(double* p, const double* g, double step, std::size_t n);
  void (*minmax)(const double* x, std::size_t n, double* lo, double* hi);
  // CSR row sums of gathered values: out_i = sum_{t in [offsets_i, offsets_{i+1})} x[adj_t]
  void (*csr_gather_sum)(const std::int32_t* offsets, const std::int32_t* adj,
                         const double* x, double* out, std::size_t rows);
  const char* name;
};

enum class Backend { Scalar, Avx2, Neon };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);
Backend detect_backend();

// Active table. Picked once: CLIQUEMINE_KERNELS env override if set
// (scalar|avx2|neon), otherwise detect_backend().
const Ops& ops();

// Specific table; throws std::runtime_error if the backend is unavailable.
const Ops& ops_for(Backend b);

// Test hook: replace the active table.
void force_backend(Backend b);

// Span conveniences over the active table.
inline double sum(std::span<const double> x) { return ops().sum(x.data(), x.size()); }
inline double dot(std::span<const double> x, std::span<const double> y) {
  return ops().dot(x.data(), y.data(), x.size());
}

}  // namespace cliquemine::kernels
