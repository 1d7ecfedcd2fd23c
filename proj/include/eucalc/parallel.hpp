// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <exception>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eucalc {

// Runtime switch between the OpenMP kernels and the serial reference path.
// The two must produce bit-identical results: every parallel loop writes
// only into slots indexed by its own iteration, so scheduling cannot change
// the outcome. Tests and the benchmark flip this flag.
bool parallel_enabled();
void set_parallel(bool enabled);

namespace detail {
void rethrow_if(std::exception_ptr& e);
}

// Runs f(i) for i in [0, n). Exceptions from worker iterations are captured
// and rethrown on the calling thread (first one wins).
template <class F>
void parallel_for(std::size_t n, F&& f) {
#ifdef _OPENMP
    if (parallel_enabled() && n > 1 && omp_get_max_threads() > 1) {
        std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                f(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(eucalc_parallel_for_err)
                if (!err) err = std::current_exception();
            }
        }
        detail::rethrow_if(err);
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace eucalc
