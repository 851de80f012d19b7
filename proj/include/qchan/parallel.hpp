#pragma once

#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qchan {

/// Execution policy for the batch kernels. `serial` is the reference
/// path the tests compare against; `parallel` runs the same per-item
/// bodies under OpenMP. Items write only their own output slot, so the
/// two policies produce byte-identical results.
enum class Exec { serial, parallel };

template <class Body>
void parallel_for(int n, Exec exec, Body&& body) {
#ifdef _OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
#else
    (void)exec;
#endif
    for (int i = 0; i < n; ++i) body(i);
}

}  // namespace qchan
