// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#include "eucalc/lp.hpp"

#include <algorithm>

#include "eucalc/errors.hpp"

namespace eucalc {

namespace {

// Dense simplex tableau over rationals. Columns: structural variables first,
// then slacks, then phase-1 artificials; final column is the RHS.
struct Tableau {
    std::vector<RatVector> rows;  // m x (cols + 1)
    RatVector obj;                // cols + 1; obj[j] is the reduced cost of j
    std::vector<int> basis;       // basic variable of each row
    int cols = 0;

    std::vector<int> scratch;  // nonzero columns of the pivot row

    void pivot(int r, int c) {
        const Rational inv = 1 / rows[r][c];
        scratch.clear();
        for (int j = 0; j <= cols; ++j) {
            if (rows[r][j] == 0) continue;
            rows[r][j] *= inv;
            scratch.push_back(j);
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == r || rows[i][c] == 0) continue;
            const Rational f = rows[i][c];
            for (int j : scratch) rows[i][j] -= f * rows[r][j];
        }
        if (obj[c] != 0) {
            const Rational f = obj[c];
            for (int j : scratch) obj[j] -= f * rows[r][j];
        }
        basis[r] = c;
    }

    // Maximizes until no reduced cost is positive. `allowed(j)` gates which
    // columns may enter (used to freeze artificials in phase 2). Bland's rule
    // throughout, so termination is guaranteed.
    template <class Allowed>
    void optimize(Allowed&& allowed) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < cols; ++j)
                if (obj[j] > 0 && allowed(j)) {
                    enter = j;
                    break;
                }
            if (enter < 0) return;
            int leave = -1;
            Rational best;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) continue;
                Rational ratio = rows[i][cols] / rows[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = static_cast<int>(i);
                    best = ratio;
                }
            }
            if (leave < 0) throw InternalError("simplex: unbounded objective");
            pivot(leave, enter);
        }
    }

    Rational value_of(int var) const {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (basis[i] == var) return rows[i][cols];
        return Rational(0);
    }
};

}  // namespace

std::optional<RatVector> find_point(int dim, const std::vector<Constraint>& constraints) {
    bool has_strict = false;
    for (const auto& c : constraints) {
        if (c.form.dim() != dim) throw InputError("find_point: constraint dimension mismatch");
        if (c.rel == Rel::GT) has_strict = true;
    }

    if (dim == 0) {
        for (const auto& c : constraints) {
            const int s = sign_of(c.form.constant);
            if ((c.rel == Rel::EQ && s != 0) || (c.rel == Rel::GE && s < 0) ||
                (c.rel == Rel::GT && s <= 0))
                return std::nullopt;
        }
        return RatVector{};
    }

    // Constant rows are decided up front; they carry no variables.
    std::vector<const Constraint*> live;
    for (const auto& c : constraints) {
        if (c.form.degenerate()) {
            const int s = sign_of(c.form.constant);
            if ((c.rel == Rel::EQ && s != 0) || (c.rel == Rel::GE && s < 0) ||
                (c.rel == Rel::GT && s <= 0))
                return std::nullopt;
            continue;
        }
        live.push_back(&c);
    }
    has_strict = std::any_of(live.begin(), live.end(),
                             [](const Constraint* c) { return c->rel == Rel::GT; });
    if (live.empty()) return zero_vector(dim);

    // Columns: u_1..u_n, w_1..w_n (x = u - w), then t, then one slack per
    // inequality row (plus the t <= 1 cap row), then artificials.
    const int n_rows = static_cast<int>(live.size()) + (has_strict ? 1 : 0);
    const int t_col = 2 * dim;
    int next_col = 2 * dim + (has_strict ? 1 : 0);
    const int slack_base = next_col;
    int n_slacks = 0;
    for (const auto* c : live)
        if (c->rel != Rel::EQ) ++n_slacks;
    if (has_strict) ++n_slacks;  // cap row
    next_col += n_slacks;
    const int art_base = next_col;

    Tableau t;
    t.cols = art_base + n_rows;  // at most one artificial per row
    t.basis.assign(n_rows, -1);
    t.rows.assign(n_rows, RatVector(static_cast<std::size_t>(t.cols) + 1));

    int slack_idx = 0;
    int row = 0;
    auto build_row = [&](const AffineForm& f, Rel rel) {
        auto& r = t.rows[row];
        for (int j = 0; j < dim; ++j) {
            r[j] = f.linear[j];
            r[dim + j] = -f.linear[j];
        }
        if (rel == Rel::GT) r[t_col] = -1;
        int s_col = -1;
        if (rel != Rel::EQ) {
            s_col = slack_base + slack_idx++;
            r[s_col] = -1;
        }
        r[t.cols] = -f.constant;
        if (r[t.cols] < 0) {
            for (auto& v : r) v = -v;
        }
        // A slack with coefficient +1 can start basic; otherwise take an
        // artificial.
        if (s_col >= 0 && r[s_col] == 1) {
            t.basis[row] = s_col;
        } else {
            const int a_col = art_base + row;
            r[a_col] = 1;
            t.basis[row] = a_col;
        }
        ++row;
    };
    for (const auto* c : live) build_row(c->form, c->rel);
    if (has_strict) {
        auto& r = t.rows[row];
        r[t_col] = 1;
        const int s_col = slack_base + slack_idx++;
        r[s_col] = 1;
        r[t.cols] = 1;
        t.basis[row] = s_col;
        ++row;
    }

    // Phase 1: maximize -(sum of artificials).
    bool any_artificial = false;
    t.obj.assign(static_cast<std::size_t>(t.cols) + 1, Rational(0));
    for (int i = 0; i < n_rows; ++i)
        if (t.basis[i] >= art_base) {
            any_artificial = true;
            for (int j = 0; j <= t.cols; ++j) t.obj[j] += t.rows[i][j];
            t.obj[t.basis[i]] = 0;
        }
    if (any_artificial) {
        t.optimize([](int) { return true; });
        if (t.obj[t.cols] != 0) return std::nullopt;  // infeasible
        for (int i = 0; i < n_rows; ++i) {
            if (t.basis[i] < art_base) continue;
            int c = -1;
            for (int j = 0; j < art_base; ++j)
                if (t.rows[i][j] != 0) {
                    c = j;
                    break;
                }
            if (c >= 0) t.pivot(i, c);
            // A row with no non-artificial entries is redundant; its
            // artificial stays basic at value zero, which is harmless.
        }
    }

    if (has_strict) {
        // Phase 2: maximize t.
        std::fill(t.obj.begin(), t.obj.end(), Rational(0));
        t.obj[t_col] = 1;
        for (int i = 0; i < n_rows; ++i)
            if (t.obj[t.basis[i]] != 0) {
                const Rational f = t.obj[t.basis[i]];
                for (int j = 0; j <= t.cols; ++j) t.obj[j] -= f * t.rows[i][j];
            }
        t.optimize([&](int j) { return j < art_base; });
        if (t.value_of(t_col) <= 0) return std::nullopt;
    }

    RatVector x(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) x[j] = t.value_of(j) - t.value_of(dim + j);
    return x;
}

std::optional<RatVector> strict_feasible(int dim,
                                         const std::vector<AffineForm>& equalities,
                                         const std::vector<AffineForm>& positive,
                                         const std::vector<AffineForm>& negative) {
    std::vector<Constraint> cs;
    cs.reserve(equalities.size() + positive.size() + negative.size());
    for (const auto& f : equalities) cs.push_back({f, Rel::EQ});
    for (const auto& f : positive) cs.push_back({f, Rel::GT});
    for (const auto& f : negative) {
        AffineForm neg;
        neg.linear.reserve(f.linear.size());
        for (const auto& a : f.linear) neg.linear.push_back(-a);
        neg.constant = -f.constant;
        cs.push_back({std::move(neg), Rel::GT});
    }
    return find_point(dim, cs);
}

}  // namespace eucalc
