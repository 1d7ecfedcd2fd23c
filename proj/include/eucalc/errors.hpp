// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace eucalc {

// Malformed or inconsistent caller input (bad dimensions, invalid documents,
// violated preconditions). CLI exit code 1.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured budget (cell count) was exceeded. CLI exit code 2.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal consistency check failed. This is a soundness alarm: it must
// surface, never be swallowed. CLI exit code 3.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace eucalc
