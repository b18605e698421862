#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "cliquemine/kernels.hpp"

namespace cliquemine::kernels {

const Ops& scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops();
#endif
#if defined(__aarch64__)
const Ops& neon_ops();
#endif

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Backend::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend detect_backend() {
  if (backend_available(Backend::Avx2)) return Backend::Avx2;
  if (backend_available(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

const Ops& ops_for(Backend b) {
  if (!backend_available(b))
    throw std::runtime_error("kernel backend unavailable: " + std::string(backend_name(b)));
  switch (b) {
    case Backend::Scalar:
      return scalar_ops();
    case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return avx2_ops();
#else
      break;
#endif
    case Backend::Neon:
#if defined(__aarch64__)
      return neon_ops();
#else
      break;
#endif
  }
  return scalar_ops();
}

namespace {

Backend initial_backend() {
  if (const char* env = std::getenv("CLIQUEMINE_KERNELS")) {
    std::string v(env);
    if (v == "scalar") return Backend::Scalar;
    if (v == "avx2" && backend_available(Backend::Avx2)) return Backend::Avx2;
    if (v == "neon" && backend_available(Backend::Neon)) return Backend::Neon;
    // unknown or unavailable names fall through to detection
  }
  return detect_backend();
}

std::atomic<const Ops*> g_active{nullptr};

}  // namespace

const Ops& ops() {
  const Ops* t = g_active.load(std::memory_order_acquire);
  if (!t) {
    t = &ops_for(initial_backend());
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

void force_backend(Backend b) { g_active.store(&ops_for(b), std::memory_order_release); }

}  // namespace cliquemine::kernels
