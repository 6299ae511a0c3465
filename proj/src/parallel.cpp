#include "toric/parallel.hpp"

namespace toric {

namespace {
bool g_parallel = true;
}

bool parallel_enabled() {
#ifdef _OPENMP
    return g_parallel;
#else
    return false;
#endif
}

void set_parallel(bool on) { g_parallel = on; }

void set_thread_count(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

}  // namespace toric
