// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "eucalc/linalg.hpp"

namespace eucalc {

enum class Rel : std::uint8_t { EQ, GE, GT };  // form == 0, form >= 0, form > 0

struct Constraint {
    AffineForm form;
    Rel rel = Rel::GE;
};

// Exact feasibility with a relative-interior witness.
//
// Finds a rational point satisfying every EQ row exactly, every GE row
// weakly and every GT row strictly, or certifies that none exists. Strict
// rows are handled with a shared margin variable t <= 1 that the simplex
// maximizes; the system is strictly feasible iff the optimum is positive,
// and the witness then satisfies every GT row with slack >= t > 0. Two-phase
// dense simplex, Bland's rule, all pivots in rational arithmetic.
std::optional<RatVector> find_point(int dim, const std::vector<Constraint>& constraints);

// Sign-vector realizability form used by the arrangement machinery: every
// equality exactly zero, every `positive` form > 0, every `negative` form < 0.
std::optional<RatVector> strict_feasible(int dim,
                                         const std::vector<AffineForm>& equalities,
                                         const std::vector<AffineForm>& positive,
                                         const std::vector<AffineForm>& negative);

}  // namespace eucalc
