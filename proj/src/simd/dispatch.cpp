#include <atomic>
#include <cstdlib>
#include <string>

#include "admcm/simd/kernels.hpp"

namespace admcm::simd {

#if defined(ADMCM_BUILD_AVX2)
const KernelTable* avx2_table();
#endif

namespace {

std::atomic<const KernelTable*> g_active{nullptr};

const KernelTable* by_name(std::string_view name) {
  if (name == "scalar") return &scalar_kernels();
  if (name == "avx2") return avx2_kernels();
  if (name == "auto") return avx2_kernels() ? avx2_kernels() : &scalar_kernels();
  return nullptr;
}

}  // namespace

const KernelTable* avx2_kernels() {
#if defined(ADMCM_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (t) return *t;
  const KernelTable* chosen = nullptr;
  if (const char* env = std::getenv("ADMCM_SIMD")) chosen = by_name(env);
  if (!chosen) chosen = by_name("auto");
  const KernelTable* expected = nullptr;
  g_active.compare_exchange_strong(expected, chosen, std::memory_order_acq_rel);
  return *g_active.load(std::memory_order_acquire);
}

bool select(std::string_view name) {
  const KernelTable* t = by_name(name);
  if (!t) return false;
  g_active.store(t, std::memory_order_release);
  return true;
}

}  // namespace admcm::simd
