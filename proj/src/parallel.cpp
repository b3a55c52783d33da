#include "spinpair/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spinpair {

int default_thread_count() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace spinpair
