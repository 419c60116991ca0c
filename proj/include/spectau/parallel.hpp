#pragma once

namespace spectau {

// Kernels with an OpenMP path keep a plain serial reference alongside it.
enum class Execution { serial, parallel };

// Thread budget for OpenMP kernels: SPECTRAL_TAU_THREADS if set and positive,
// otherwise the OpenMP default.
int thread_cap();

}  // namespace spectau
