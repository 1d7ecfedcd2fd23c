// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "eucalc/lp.hpp"

namespace eucalc {

using Sign = std::int8_t;  // -1, 0, +1
using SignVector = std::vector<Sign>;

inline constexpr int kDefaultMaxCells = 200000;

// A finite affine (or central) hyperplane arrangement. Forms are normalized,
// sorted and pairwise distinct; a central arrangement has all constants zero
// and always contains the coordinate forms x_1..x_n, so every cell lies in a
// closed orthant and no cell meets its own antipode.
struct Arrangement {
    int dim = 0;
    std::vector<AffineForm> forms;
    bool central = false;

    std::size_t form_count() const { return forms.size(); }
};

// A relatively open convex cell: the set where each form takes the recorded
// sign. `sample` is an exact witness in the relative interior and `dim` the
// intrinsic dimension, so the compactly supported Euler characteristic of the
// cell is (-1)^dim whether or not the cell is bounded.
struct Cell {
    SignVector signs;
    int dim = 0;
    RatVector sample;
};

Arrangement make_arrangement(int dim, std::vector<AffineForm> forms);
// ambient_dim = n+1 for an arrangement describing P^n.
Arrangement make_central_arrangement(int ambient_dim, std::vector<AffineForm> forms);

// Merged form set of two arrangements over the same space.
Arrangement merge_arrangements(const Arrangement& a, const Arrangement& b);

SignVector signs_at(const Arrangement& arr, const RatVector& point);

// All realizable sign vectors with exact samples and dimensions, sorted
// lexicographically (- < 0 < +). Cells partition R^n; for a central
// arrangement the origin cell is omitted so they partition R^n \ {0}.
// Incremental insertion: each new hyperplane splits the existing cells, one
// feasibility LP per (cell, form) in the generic case.
std::vector<Cell> enumerate_cells(const Arrangement& arr, int max_cells = kDefaultMaxCells);

// Index of the cell whose sign vector matches `point` exactly.
std::size_t locate(const Arrangement& arr, const std::vector<Cell>& cells, const RatVector& point);

// D lies in the closure of C iff D's signs weaken C's coordinatewise.
bool face_leq(const SignVector& d, const SignVector& c);

struct FacePoset {
    std::vector<std::vector<bool>> leq;  // leq[d][c]: cell d in closure of cell c
};

FacePoset face_poset(const std::vector<Cell>& cells);

// Central arrangements only: the cell with negated sign vector.
std::size_t antipodal_index(const Arrangement& arr, const std::vector<Cell>& cells, std::size_t idx);

// Canonical representative of an antipodal pair: first nonzero sign is +.
bool is_pair_representative(const Cell& cell);

bool cell_bounded(const Arrangement& arr, const Cell& cell);

// Extra exact rational points in the relative interior, used by the
// oversampling validators. Deterministic given the generator state.
RatVector random_point_in_cell(const Arrangement& arr, const Cell& cell, std::mt19937_64& rng);

enum class FormOnFlat : std::uint8_t { Kept, ContainsFlat, MissesFlat };

struct Restriction {
    Arrangement arr;                // on the flat's coordinates
    AffineMap chart;                // flat coordinates -> ambient space
    std::vector<FormOnFlat> fate;   // one entry per original form
};

// Pulls the arrangement back to an affine flat. Forms vanishing identically
// on the flat are dropped with a ContainsFlat marker, forms with constant
// nonzero pullback with MissesFlat. With make_central the flat must pass
// through the origin; the flat's coordinate forms are appended.
Restriction restrict_to_flat(const Arrangement& arr, const Flat& flat, bool make_central);

}  // namespace eucalc
