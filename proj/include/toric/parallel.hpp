#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace toric {

// Deterministic parallelism contract: every parallel kernel is a pure map
// whose results are written by index, so the output is identical to the
// serial reference run regardless of thread count. The global switch exists
// so tests and benchmarks can pin either path.
bool parallel_enabled();
void set_parallel(bool on);
void set_thread_count(int n);  // 0 = library default

// out[i] = f(i) for i in [0, n). Runs the OpenMP kernel when enabled and not
// force_serial; otherwise the serial reference loop.
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, F&& f, bool force_serial = false) {
    std::vector<R> out(n);
    if (!force_serial && parallel_enabled() && n > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
        return out;
#endif
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
}

}  // namespace toric
