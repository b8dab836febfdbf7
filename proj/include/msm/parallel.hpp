#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#else
inline int omp_get_max_threads() { return 1; }
inline int omp_get_thread_num() { return 0; }
#endif

namespace msm {

// Thread budget for sweep-level parallelism: MSM_THREADS, else all cores.
inline int thread_cap() {
  if (const char* env = std::getenv("MSM_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return omp_get_max_threads();
}

}  // namespace msm
