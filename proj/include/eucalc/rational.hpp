// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace eucalc {

// All coefficients in the engine are exact rationals. GMP keeps them reduced
// with positive denominator, which is exactly the invariant we need; nothing
// in the library ever touches floating point.
using Rational = mpq_class;
using RatVector = std::vector<Rational>;
using Int = std::int64_t;

inline int sign_of(const Rational& q) { return sgn(q); }

// Parses "p", "-p" or "p/q" (decimal). Throws InputError on malformed input
// or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical string form "p" or "p/q" with q > 1, matching parse_rational.
std::string to_string(const Rational& q);

std::string to_string(const RatVector& v);

RatVector parse_rat_vector(const std::string& text);  // comma separated

inline RatVector zero_vector(int dim) { return RatVector(static_cast<std::size_t>(dim)); }

Rational dot(const RatVector& a, const RatVector& b);

}  // namespace eucalc
