#pragma once

#include <cstddef>
#include <vector>

namespace spinpair {

enum class Execution { Serial, Parallel };

/// omp_get_max_threads(), or 1 without OpenMP.
int default_thread_count() noexcept;

/// out[i] = f(i) for i in [0, n). The serial loop is the reference path; the
/// OpenMP path runs the same per-item code, so results are bit-identical and
/// only the scheduling differs. `threads <= 0` selects the OpenMP default.
/// `f` must not throw.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f, Execution exec, int threads = 0) {
  std::vector<T> out(n);
  const int team = threads > 0 ? threads : default_thread_count();
  if (exec == Execution::Serial || team == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 4) num_threads(team)
  for (long long i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace spinpair
