// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#include "eucalc/parallel.hpp"

#include <atomic>

namespace eucalc {

namespace {
std::atomic<bool> g_parallel{true};
}

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }
void set_parallel(bool enabled) { g_parallel.store(enabled, std::memory_order_relaxed); }

namespace detail {
void rethrow_if(std::exception_ptr& e) {
    if (e) std::rethrow_exception(e);
}
}  // namespace detail

}  // namespace eucalc
