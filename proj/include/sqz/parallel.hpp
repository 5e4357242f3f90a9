#pragma once

#include <cstddef>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sqz {

inline int default_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Runs fn(i) for i in [0, count).  jobs <= 0 picks the default parallelism;
// jobs == 1 is the serial reference path.  Callers write results into
// pre-sized slots, so scheduling never affects output order.
inline void parallel_for(std::size_t count, int jobs,
                         const std::function<void(std::size_t)>& fn) {
#ifdef _OPENMP
  if (jobs != 1 && count > 1) {
    int nt = jobs > 0 ? jobs : default_jobs();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      fn(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)jobs;
#endif
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace sqz
