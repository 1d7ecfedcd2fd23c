// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#include "eucalc/linalg.hpp"

#include <algorithm>

#include "eucalc/errors.hpp"

namespace eucalc {

bool AffineForm::degenerate() const {
    for (const auto& a : linear)
        if (a != 0) return false;
    return true;
}

Rational AffineForm::eval(const RatVector& x) const {
    if (x.size() != linear.size()) throw InputError("AffineForm::eval: dimension mismatch");
    Rational acc = constant;
    for (std::size_t i = 0; i < x.size(); ++i) acc += linear[i] * x[i];
    return acc;
}

bool operator==(const AffineForm& a, const AffineForm& b) {
    return a.linear == b.linear && a.constant == b.constant;
}

bool operator<(const AffineForm& a, const AffineForm& b) {
    if (a.linear.size() != b.linear.size()) return a.linear.size() < b.linear.size();
    for (std::size_t i = 0; i < a.linear.size(); ++i) {
        int c = cmp(a.linear[i], b.linear[i]);
        if (c) return c < 0;
    }
    return cmp(a.constant, b.constant) < 0;
}

AffineForm normalize_form(const AffineForm& f, bool* flipped) {
    if (flipped) *flipped = false;
    // Common denominator, then divide out the content.
    mpz_class den(1);
    for (const auto& a : f.linear) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.get_den().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), f.constant.get_den().get_mpz_t());

    std::vector<mpz_class> ints;
    ints.reserve(f.linear.size() + 1);
    for (const auto& a : f.linear) ints.push_back(mpz_class(a * den));
    ints.push_back(mpz_class(f.constant * den));

    mpz_class g(0);
    for (const auto& z : ints) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    if (g == 0) return AffineForm{zero_vector(f.dim()), Rational(0)};

    int lead = 0;
    for (const auto& z : ints)
        if (z != 0) {
            lead = sgn(z);
            break;
        }
    if (lead < 0) {
        g = -g;
        if (flipped) *flipped = true;
    }

    AffineForm out;
    out.linear.reserve(f.linear.size());
    for (std::size_t i = 0; i < f.linear.size(); ++i) out.linear.emplace_back(ints[i] / g);
    out.constant = Rational(ints.back() / g);
    return out;
}

RatVector AffineMap::apply(const RatVector& x) const {
    if (static_cast<int>(x.size()) != dim_in()) throw InputError("AffineMap::apply: dimension mismatch");
    RatVector y(translation);
    for (std::size_t r = 0; r < matrix.size(); ++r)
        for (std::size_t c = 0; c < x.size(); ++c) y[r] += matrix[r][c] * x[c];
    return y;
}

AffineMap AffineMap::identity(int n) {
    AffineMap m;
    m.matrix.assign(n, zero_vector(n));
    for (int i = 0; i < n; ++i) m.matrix[i][i] = 1;
    m.translation = zero_vector(n);
    return m;
}

AffineMap AffineMap::coordinate_projection(int n, const std::vector<int>& coords) {
    AffineMap m;
    m.matrix.assign(coords.size(), zero_vector(n));
    for (std::size_t r = 0; r < coords.size(); ++r) {
        if (coords[r] < 0 || coords[r] >= n) throw InputError("coordinate_projection: index out of range");
        m.matrix[r][coords[r]] = 1;
    }
    m.translation = zero_vector(static_cast<int>(coords.size()));
    return m;
}

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
    if (outer.dim_in() != inner.dim_out()) throw InputError("compose: dimension mismatch");
    AffineMap m;
    m.matrix.assign(outer.dim_out(), zero_vector(inner.dim_in()));
    for (int r = 0; r < outer.dim_out(); ++r)
        for (int k = 0; k < outer.dim_in(); ++k) {
            if (outer.matrix[r][k] == 0) continue;
            for (int c = 0; c < inner.dim_in(); ++c)
                m.matrix[r][c] += outer.matrix[r][k] * inner.matrix[k][c];
        }
    m.translation = outer.apply(inner.translation);
    return m;
}

AffineForm pull_form(const AffineForm& f, const AffineMap& map) {
    if (f.dim() != map.dim_out()) throw InputError("pull_form: dimension mismatch");
    AffineForm g;
    g.linear = zero_vector(map.dim_in());
    for (int r = 0; r < map.dim_out(); ++r) {
        if (f.linear[r] == 0) continue;
        for (int c = 0; c < map.dim_in(); ++c) g.linear[c] += f.linear[r] * map.matrix[r][c];
    }
    g.constant = f.eval(map.translation);
    return g;
}

namespace {

// Row echelon with deterministic pivoting: first row with a nonzero entry in
// the current column. Returns pivot columns.
std::vector<int> echelon(std::vector<RatVector>& rows, int cols) {
    std::vector<int> pivots;
    std::size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const Rational inv = 1 / rows[r][c];
        for (int j = c; j < cols; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational factor = rows[i][c];
            for (int j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace

int rank(std::vector<RatVector> rows) {
    if (rows.empty()) return 0;
    const int cols = static_cast<int>(rows[0].size());
    return static_cast<int>(echelon(rows, cols).size());
}

LinearSolution solve_linear(const std::vector<AffineForm>& system, int dim) {
    std::vector<RatVector> rows;
    rows.reserve(system.size());
    for (const auto& f : system) {
        if (f.dim() != dim) throw InputError("solve_linear: dimension mismatch");
        RatVector row = f.linear;
        row.push_back(f.constant);  // a.x + b = 0  <=>  [a | b]
        rows.push_back(std::move(row));
    }
    const std::vector<int> pivots = echelon(rows, dim + 1);

    LinearSolution sol;
    for (int p : pivots)
        if (p == dim) return sol;  // row 0 = 1: inconsistent
    sol.consistent = true;
    sol.point = zero_vector(dim);
    std::vector<int> pivot_row_of(dim, -1);
    for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row_of[pivots[r]] = static_cast<int>(r);
    // Free variables at 0 give the particular solution x_p = -b_row.
    for (int c = 0; c < dim; ++c)
        if (pivot_row_of[c] >= 0) sol.point[c] = -rows[pivot_row_of[c]][dim];
    for (int c = 0; c < dim; ++c) {
        if (pivot_row_of[c] >= 0) continue;
        RatVector dir = zero_vector(dim);
        dir[c] = 1;
        for (int k = 0; k < dim; ++k)
            if (pivot_row_of[k] >= 0) dir[k] = -rows[pivot_row_of[k]][c];
        sol.kernel.push_back(std::move(dir));
    }
    return sol;
}

AffineMap Flat::chart() const {
    AffineMap m;
    m.matrix.assign(point.size(), zero_vector(dim()));
    for (std::size_t r = 0; r < point.size(); ++r)
        for (int c = 0; c < dim(); ++c) m.matrix[r][c] = basis[c][r];
    m.translation = point;
    return m;
}

std::optional<Flat> flat_from_equalities(const std::vector<AffineForm>& equalities, int dim) {
    LinearSolution sol = solve_linear(equalities, dim);
    if (!sol.consistent) return std::nullopt;
    return Flat{std::move(sol.point), std::move(sol.kernel)};
}

}  // namespace eucalc
