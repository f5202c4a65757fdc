#include "pmpc/kernels/dispatch.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace pmpc::kernels {

namespace {

SimdLevel detect() {
  const char* env = std::getenv("PMPC_SIMD");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return SimdLevel::scalar;
    if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return SimdLevel::avx2;
  }
  return cpu_has_avx2() ? SimdLevel::avx2 : SimdLevel::scalar;
}

std::atomic<SimdLevel>& level_slot() {
  static std::atomic<SimdLevel> level{detect()};
  return level;
}

}  // namespace

bool cpu_has_avx2() {
#if defined(PMPC_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

SimdLevel active_simd_level() { return level_slot().load(std::memory_order_relaxed); }

void force_simd_level(SimdLevel level) {
  if (level == SimdLevel::avx2 && !cpu_has_avx2()) level = SimdLevel::scalar;
  level_slot().store(level, std::memory_order_relaxed);
}

std::string to_string(SimdLevel level) {
  switch (level) {
    case SimdLevel::avx2:
      return "avx2";
    case SimdLevel::scalar:
      break;
  }
  return "scalar";
}

}  // namespace pmpc::kernels
