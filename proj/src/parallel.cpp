#include "spectau/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace spectau {

int thread_cap() {
  if (const char* env = std::getenv("SPECTRAL_TAU_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

}  // namespace spectau
