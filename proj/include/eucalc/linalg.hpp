// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "eucalc/rational.hpp"

namespace eucalc {

// An affine functional a.x + b on R^n. Hyperplanes, halfspace boundaries and
// polyhedron constraints are all stored this way.
struct AffineForm {
    RatVector linear;  // length n
    Rational constant{0};

    int dim() const { return static_cast<int>(linear.size()); }
    bool degenerate() const;  // linear part identically zero

    Rational eval(const RatVector& x) const;
    int sign_at(const RatVector& x) const { return sign_of(eval(x)); }
};

bool operator==(const AffineForm& a, const AffineForm& b);
bool operator<(const AffineForm& a, const AffineForm& b);  // lexicographic

// Scales to coprime integer entries with the first nonzero entry of
// (linear, constant) positive. `flipped` reports whether the sign convention
// reversed the form's orientation.
AffineForm normalize_form(const AffineForm& f, bool* flipped = nullptr);

// Exact affine map x |-> M x + t between coordinate spaces.
struct AffineMap {
    std::vector<RatVector> matrix;  // n_out rows of length n_in
    RatVector translation;          // length n_out

    int dim_in() const { return matrix.empty() ? 0 : static_cast<int>(matrix[0].size()); }
    int dim_out() const { return static_cast<int>(matrix.size()); }

    RatVector apply(const RatVector& x) const;
    static AffineMap identity(int n);
    // Projection of R^n onto the coordinates listed in `coords`.
    static AffineMap coordinate_projection(int n, const std::vector<int>& coords);
};

AffineMap compose(const AffineMap& outer, const AffineMap& inner);

// Pullback of the functional a.x + b along the map: (a^T M).u + (a.t + b).
AffineForm pull_form(const AffineForm& f, const AffineMap& map);

int rank(std::vector<RatVector> rows);

// Solution of a linear system {form_i = 0}: one exact point plus a basis of
// the homogeneous solution space, or inconsistency.
struct LinearSolution {
    bool consistent = false;
    RatVector point;                 // a particular solution
    std::vector<RatVector> kernel;   // basis of directions, possibly empty
};

LinearSolution solve_linear(const std::vector<AffineForm>& system, int dim);

// An affine subspace as a particular point plus independent directions.
struct Flat {
    RatVector point;
    std::vector<RatVector> basis;

    int ambient_dim() const { return static_cast<int>(point.size()); }
    int dim() const { return static_cast<int>(basis.size()); }
    // Chart map R^{dim} -> ambient, u |-> point + basis.u
    AffineMap chart() const;
};

// Flat cut out by a system of equalities; nullopt when inconsistent.
std::optional<Flat> flat_from_equalities(const std::vector<AffineForm>& equalities, int dim);

}  // namespace eucalc
