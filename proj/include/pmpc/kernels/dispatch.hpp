#pragma once

#include <string>

namespace pmpc::kernels {

enum class SimdLevel {
  scalar,
  avx2,
};

/// Level the batch kernels currently run at. Detected once from CPUID on
/// first use; the PMPC_SIMD environment variable ("scalar" or "avx2")
/// overrides detection. Both paths produce bit-identical results, so the
/// choice never affects outputs, only speed.
SimdLevel active_simd_level();

/// Force a level (tests use this to compare paths). Requesting avx2 on a
/// CPU without it falls back to scalar.
void force_simd_level(SimdLevel level);

std::string to_string(SimdLevel level);

bool cpu_has_avx2();

}  // namespace pmpc::kernels
