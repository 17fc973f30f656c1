#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rado {

/// Thread count for an OpenMP region: 0 means the runtime default.
inline int resolve_threads(int requested) {
#ifdef _OPENMP
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

}  // namespace rado
