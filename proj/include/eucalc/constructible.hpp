// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eucalc/arrangement.hpp"

namespace eucalc {

// A piecewise-constant integer function on R^n, stored as a hyperplane
// arrangement together with one value per cell. Every operation keeps the
// representation canonical (forms sorted, cells in lexicographic sign
// order), so equal inputs give bit-identical outputs.
struct AffineCF {
    Arrangement arr;
    std::vector<Cell> cells;
    std::vector<Int> values;

    int dim() const { return arr.dim; }
};

enum class RelOp : std::uint8_t { LT, LE, EQ, GE, GT };

struct PolyhedronConstraint {
    AffineForm form;
    RelOp rel = RelOp::GE;
};

// A locally closed polyhedron {x : form_i rel_i 0}; may be empty.
struct PolyhedronSpec {
    int dim = 0;
    std::vector<PolyhedronConstraint> constraints;
};

struct EngineOptions {
    int max_cells = kDefaultMaxCells;
    int oversample = 3;        // extra fiber checks per output cell
    std::uint64_t seed = 0;    // drives the oversampling points
};

AffineCF make_cf(Arrangement arr, const std::vector<Int>& cell_values);
AffineCF constant_cf(int dim, Int value);
AffineCF zero_cf(int dim);
AffineCF delta_cf(const RatVector& point);

AffineCF indicator(const PolyhedronSpec& spec, int max_cells = kDefaultMaxCells);

Int evaluate(const AffineCF& cf, const RatVector& point);

// Re-expresses both functions on the union arrangement (pointwise values
// unchanged).
std::pair<AffineCF, AffineCF> refine_common(const AffineCF& a, const AffineCF& b,
                                            int max_cells = kDefaultMaxCells);

AffineCF add(const AffineCF& a, const AffineCF& b, int max_cells = kDefaultMaxCells);
AffineCF scale(const AffineCF& a, Int c);
AffineCF multiply(const AffineCF& a, const AffineCF& b, int max_cells = kDefaultMaxCells);

bool cf_equal(const AffineCF& a, const AffineCF& b, int max_cells = kDefaultMaxCells);

// (a x b)(x, y) = a(x) b(y) on R^{m+n}. Built combinatorially: cells of the
// product arrangement are products of cells, no feasibility work needed.
AffineCF external_product(const AffineCF& a, const AffineCF& b, int max_cells = kDefaultMaxCells);

// Euler integral: sum over cells of value * (-1)^dim. This is the additive
// extension of chi_c and needs no support assumption.
Int integrate(const AffineCF& cf);

// Duality on the same arrangement: the value at a cell D is the alternating
// sum of values over all cells whose closure contains D. Equivalent to
// integrating against a small ball around any point of D; an independent
// ball-refinement oracle validates this (see oracles.hpp).
AffineCF dual(const AffineCF& cf);

// Non-proper integral: integrate after dualizing.
Int integrate_np(const AffineCF& cf);

AffineCF pullback(const AffineCF& cf, const AffineMap& map, int max_cells = kDefaultMaxCells);

// Integration along the fibers of a surjective affine map. Candidate walls
// are the images of arrangement flats that map onto hyperplanes; each output
// cell's value is the exact Euler integral over one fiber, re-checked at
// `oversample` further points of the cell (mismatch raises InternalError).
AffineCF pushforward(const AffineCF& cf, const AffineMap& map, const EngineOptions& opts = {});

// Non-proper direct image: dual, push, dual.
AffineCF pushforward_np(const AffineCF& cf, const AffineMap& map, const EngineOptions& opts = {});

// hom(a, b) = D(D(b) * a)
AffineCF hom_cf(const AffineCF& a, const AffineCF& b, int max_cells = kDefaultMaxCells);
// Exceptional inverse image f^! b = D(f^*(D b))
AffineCF epb(const AffineMap& map, const AffineCF& b, int max_cells = kDefaultMaxCells);

// Additive convolution: pushforward of the external product under (x, y) |-> x + y.
AffineCF convolve(const AffineCF& a, const AffineCF& b, const EngineOptions& opts = {});
AffineCF convolve_np(const AffineCF& a, const AffineCF& b, const EngineOptions& opts = {});

// Projector onto cone-constructible functions: cf (*np) indicator(-gamma).
// gamma must be a closed full-dimensional polyhedral cone containing no
// line; redundant constraints are removed first.
AffineCF gamma_project(const AffineCF& cf, const PolyhedronSpec& gamma,
                       const EngineOptions& opts = {});

// Correspondence product of lambda12 on R^{n1+n2} with lambda23 on
// R^{n2+n3}: pull both to R^{n1+n2+n3}, multiply, integrate out the middle
// factor.
AffineCF compose_kernels(const AffineCF& lambda12, int n1, int n2, const AffineCF& lambda23,
                         int n3, const EngineOptions& opts = {});

// Drops every form whose removal leaves the function constant on the merged
// cells. The function is unchanged; the representation gets smaller.
AffineCF simplify(const AffineCF& cf, int max_cells = kDefaultMaxCells);

// Exact Euler integral of the restriction of cf to an affine flat.
Int fiber_integral(const AffineCF& cf, const Flat& flat, int max_cells = kDefaultMaxCells);

// True when every cell carrying a nonzero value is bounded.
bool has_compact_support(const AffineCF& cf);

}  // namespace eucalc
