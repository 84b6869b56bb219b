#pragma once

#include <cstddef>
#if defined(_OPENMP)
#include <omp.h>
#endif

namespace spikesweep {

inline int max_threads()
{
#if defined(_OPENMP)
    return ::omp_get_max_threads();
#else
    return 1;
#endif
}

/// Runs f(i) for i in [begin, end). Falls back to a plain loop for one
/// thread or when already inside a parallel region.
template <class F>
void parallel_for(std::ptrdiff_t begin, std::ptrdiff_t end, int n_threads, F&& f)
{
#if defined(_OPENMP)
    if (n_threads > 1 && !::omp_in_parallel()) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(n_threads)
        for (std::ptrdiff_t i = begin; i < end; ++i) f(i);
        return;
    }
#endif
    (void)n_threads;
    for (std::ptrdiff_t i = begin; i < end; ++i) f(i);
}

} // namespace spikesweep
