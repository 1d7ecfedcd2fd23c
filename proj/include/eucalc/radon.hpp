// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "eucalc/projective.hpp"

namespace eucalc {

// Euler integral of cf over the projective hyperplane {[x] : y.x = 0}: the
// central arrangement is restricted to ker(y) with a deterministic rational
// kernel basis and integrated on P^(n-1).
Int slice_integral(const ProjectiveCF& cf, const RatVector& y, int max_cells = kDefaultMaxCells);

// Full line transform on the projective plane: (R cf)([y]) is the slice
// integral over the line y^perp. Walls on the dual side are the duals of all
// pairwise intersection points of the source planes (plus two auxiliary
// points per plane carrying fewer than two, so each plane's own dual point
// is an isolated stratum). Every dual cell value is re-checked at
// `oversample` extra points; a mismatch is a soundness alarm and throws.
ProjectiveCF radon_p2(const ProjectiveCF& cf, const EngineOptions& opts = {});

// The transform with source and target exchanged; the incidence relation is
// symmetric, so the machinery is the same.
ProjectiveCF radon_dual_p2(const ProjectiveCF& cf, const EngineOptions& opts = {});

struct RadonInversion {
    ProjectiveCF lhs;  // radon_dual_p2(radon_p2(cf))
    ProjectiveCF rhs;  // -cf + (integral of cf)
    bool equal = false;
};

// On the projective plane the double transform satisfies
// R' R cf = -cf + (integral of cf); this runs both sides and compares
// cellwise on a common refinement.
RadonInversion radon_invert_check(const ProjectiveCF& cf, const EngineOptions& opts = {});

// The incidence kernel lambda(x, x') = chi{lines through both x and x'}
// evaluated at random pairs: (a, b) with a the common value at x != x' and b
// the value on the diagonal. For the plane this must be (1, 0).
std::pair<Int, Int> lambda_kernel_check(std::uint64_t seed = 0, int n_pairs = 10);

// Euler integral of a compactly supported function on R^3 over an affine
// plane. For an indicator 1_K this equals b0 - b1 of the slice.
Int slice_eval_r3(const AffineCF& cf, const AffineForm& plane, int max_cells = kDefaultMaxCells);

// The restriction of a function on R^3 to an affine plane, as a function on
// R^2 in the plane's chart coordinates.
AffineCF slice_cf_r3(const AffineCF& cf, const AffineForm& plane, int max_cells = kDefaultMaxCells);

struct BettiPair {
    Int b0 = 0;
    Int b1 = 0;
};

// Betti numbers of the compact support of a planar function: components via
// face-order adjacency, holes via b1 = b0 - chi. The independent count
// b0(complement) - 1 must agree or an InternalError is raised.
BettiPair betti_slice(const AffineCF& cf);

}  // namespace eucalc
