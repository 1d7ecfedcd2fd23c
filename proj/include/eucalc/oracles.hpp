// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "eucalc/projective.hpp"

namespace eucalc {

// Brute-force reference implementations. They share as little code as
// possible with the fast paths they validate: the sign scan re-derives the
// cell set from scratch, the ball oracle computes duality from its integral
// definition, and the Fourier-Motzkin check decides feasibility without the
// simplex. Slow on purpose; used by tests and the check suite.

// Tries all 3^m sign vectors. Matches enumerate_cells exactly (order, dims,
// realizability); only sensible for small m.
std::vector<Cell> enumerate_cells_by_sign_scan(const Arrangement& arr, int max_forms = 8);

// Dual value at a point from the definition: integrate cf against a small
// open box around the point, with the box radius chosen exactly so that no
// form that is nonzero at the point vanishes on the box.
Int dual_value_by_ball(const AffineCF& cf, const RatVector& point,
                       int max_cells = kDefaultMaxCells);

AffineCF dual_by_ball(const AffineCF& cf, int max_cells = kDefaultMaxCells);

// Projective dual value at one cell, computed through an affine chart at the
// cell's sample point and the affine ball oracle there.
Int dual_proj_value_by_chart(const ProjectiveCF& cf, std::size_t cell_index,
                             int max_cells = kDefaultMaxCells);

// Fourier-Motzkin feasibility for systems of equalities and strict
// inequalities; independent of the simplex.
bool fm_strictly_feasible(int dim, const std::vector<AffineForm>& equalities,
                          const std::vector<AffineForm>& positive,
                          const std::vector<AffineForm>& negative);

// Necessary condition for cone-constructibility: at every cell sample the
// value must persist along short segments approaching from the cone's
// interior directions.
bool cone_structure_ok(const AffineCF& cf, const std::vector<AffineForm>& outward_normals);

}  // namespace eucalc
