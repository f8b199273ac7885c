#ifndef VACRAD_EXEC_HPP
#define VACRAD_EXEC_HPP

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vacrad {

/// Execution policy for the data-parallel kernels. Serial is the reference
/// path; Parallel runs the same loop under OpenMP. Both produce bit-identical
/// results: parallel loops only fill independent slots, every floating-point
/// reduction happens serially in index order afterwards.
enum class Exec { Serial, Parallel };

inline int worker_count(Exec exec) {
#ifdef _OPENMP
    return exec == Exec::Parallel ? omp_get_max_threads() : 1;
#else
    (void)exec;
    return 1;
#endif
}

/// Evaluate f(i) for i in [0, n). f must write only to state owned by
/// index i.
template <class F>
void for_each_index(Exec exec, std::ptrdiff_t n, F&& f) {
#ifdef _OPENMP
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
        return;
    }
#else
    (void)exec;
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
}

} // namespace vacrad

#endif
