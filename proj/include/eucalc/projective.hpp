// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "eucalc/constructible.hpp"

namespace eucalc {

// A constructible function on real projective n-space, represented by a
// central arrangement in R^{n+1} (coordinate forms always included, so every
// cell is a salient cone) with one integer per cell, equal on antipodal
// cells. A salient cone of dimension d projectivizes to a relatively open
// (d-1)-cell, which is where the (-1)^(dim-1) weights below come from.
struct ProjectiveCF {
    int proj_dim = 0;  // n; the arrangement lives in R^{n+1}
    Arrangement arr;
    std::vector<Cell> cells;
    std::vector<Int> values;
};

ProjectiveCF make_proj_cf(int proj_dim, Arrangement arr, const std::vector<Int>& cell_values);
ProjectiveCF constant_proj(int proj_dim, Int value);

// Indicator of a single projective point [v], v in R^{n+1} \ {0}.
ProjectiveCF proj_point_indicator(const RatVector& v);
// Indicator of the projective hyperplane {[x] : a.x = 0}.
ProjectiveCF proj_hyperplane_indicator(const RatVector& a);

Int evaluate_proj(const ProjectiveCF& cf, const RatVector& homogeneous_point);

std::pair<ProjectiveCF, ProjectiveCF> refine_common_proj(const ProjectiveCF& a,
                                                         const ProjectiveCF& b,
                                                         int max_cells = kDefaultMaxCells);
ProjectiveCF add_proj(const ProjectiveCF& a, const ProjectiveCF& b,
                      int max_cells = kDefaultMaxCells);
ProjectiveCF scale_proj(const ProjectiveCF& a, Int c);
ProjectiveCF multiply_proj(const ProjectiveCF& a, const ProjectiveCF& b,
                           int max_cells = kDefaultMaxCells);
bool proj_equal(const ProjectiveCF& a, const ProjectiveCF& b, int max_cells = kDefaultMaxCells);

// Sum over antipodal pairs of value * (-1)^(cone dim - 1).
Int integrate_proj(const ProjectiveCF& cf);

// Duality computed in the face poset of the central arrangement, acting on
// one representative per pair; evenness is preserved.
ProjectiveCF dual_proj(const ProjectiveCF& cf);

// Extension by zero across the hyperplane at infinity: homogenize each form
// a.x + b to a.x + b*x_{n+1}, keep affine values on the x_{n+1} != 0 cells,
// value 0 at infinity.
ProjectiveCF embed_eim(const AffineCF& cf, int max_cells = kDefaultMaxCells);

// The companion extension D(embed_eim(D(cf))); agrees with embed_eim exactly
// when cf has compact support.
ProjectiveCF embed_oim(const AffineCF& cf, int max_cells = kDefaultMaxCells);

// Dehomogenization on the chart {x_i = 1}, 1 <= i <= n+1.
AffineCF restrict_chart(const ProjectiveCF& cf, int chart_index, int max_cells = kDefaultMaxCells);

// Drops removable non-coordinate forms; the function is unchanged.
ProjectiveCF simplify_proj(const ProjectiveCF& cf, int max_cells = kDefaultMaxCells);

// Throws InternalError if value(C) != value(-C) for some cell.
void check_evenness(const ProjectiveCF& cf);

}  // namespace eucalc
