// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#include "eucalc/oracles.hpp"

#include <algorithm>

#include "eucalc/errors.hpp"

namespace eucalc {

std::vector<Cell> enumerate_cells_by_sign_scan(const Arrangement& arr, int max_forms) {
    const int m = static_cast<int>(arr.form_count());
    if (m > max_forms) throw InputError("sign scan oracle: too many forms");
    std::vector<Cell> cells;
    std::vector<Sign> signs(m, -1);
    for (;;) {
        std::vector<AffineForm> eqs, pos, neg;
        for (int i = 0; i < m; ++i) {
            if (signs[i] == 0)
                eqs.push_back(arr.forms[i]);
            else if (signs[i] > 0)
                pos.push_back(arr.forms[i]);
            else
                neg.push_back(arr.forms[i]);
        }
        const bool all_zero = std::all_of(signs.begin(), signs.end(), [](Sign s) { return s == 0; });
        if (!(arr.central && all_zero)) {
            if (auto w = strict_feasible(arr.dim, eqs, pos, neg)) {
                std::vector<RatVector> zero_rows;
                for (const auto& f : eqs) zero_rows.push_back(f.linear);
                Cell c;
                c.signs = SignVector(signs.begin(), signs.end());
                c.dim = arr.dim - rank(std::move(zero_rows));
                c.sample = std::move(*w);
                cells.push_back(std::move(c));
            }
        }
        // Next sign vector in - < 0 < + order.
        int k = m - 1;
        while (k >= 0 && signs[k] == 1) signs[k--] = -1;
        if (k < 0) break;
        ++signs[k];
    }
    std::sort(cells.begin(), cells.end(),
              [](const Cell& a, const Cell& b) { return a.signs < b.signs; });
    return cells;
}

Int dual_value_by_ball(const AffineCF& cf, const RatVector& point, int max_cells) {
    const int n = cf.dim();
    // Radius small enough that every form nonzero at the point keeps its
    // sign on the closed box: |f(x) - f(point)| <= eps * sum|a_i| < |f(point)|.
    Rational eps(1);
    for (const auto& f : cf.arr.forms) {
        Rational value = f.eval(point);
        if (value == 0) continue;
        Rational reach(0);
        for (const auto& a : f.linear) reach += abs(a);
        if (reach == 0) continue;
        Rational bound = abs(value) / reach;
        if (bound < eps) eps = bound;
    }
    eps /= 2;

    PolyhedronSpec box;
    box.dim = n;
    for (int i = 0; i < n; ++i) {
        AffineForm lo, hi;
        lo.linear = zero_vector(n);
        lo.linear[i] = 1;
        lo.constant = eps - point[i];  // x_i - point_i + eps > 0
        hi.linear = zero_vector(n);
        hi.linear[i] = -1;
        hi.constant = eps + point[i];  // point_i - x_i + eps > 0
        box.constraints.push_back({std::move(lo), RelOp::GT});
        box.constraints.push_back({std::move(hi), RelOp::GT});
    }
    return integrate(multiply(cf, indicator(box, max_cells), max_cells));
}

AffineCF dual_by_ball(const AffineCF& cf, int max_cells) {
    AffineCF out = cf;
    for (std::size_t i = 0; i < cf.cells.size(); ++i)
        out.values[i] = dual_value_by_ball(cf, cf.cells[i].sample, max_cells);
    return out;
}

Int dual_proj_value_by_chart(const ProjectiveCF& cf, std::size_t cell_index, int max_cells) {
    const RatVector& v = cf.cells[cell_index].sample;
    int chart = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) {
            chart = static_cast<int>(i);
            break;
        }
    if (chart < 0) throw InternalError("dual_proj_value_by_chart: zero sample");
    AffineCF in_chart = restrict_chart(cf, chart + 1, max_cells);
    RatVector p;
    p.reserve(v.size() - 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (static_cast<int>(i) != chart) p.push_back(v[i] / v[static_cast<std::size_t>(chart)]);
    return dual_value_by_ball(in_chart, p, max_cells);
}

namespace {

struct StrictRow {
    RatVector linear;
    Rational constant;
};

StrictRow normalize_row(StrictRow r) {
    AffineForm f{std::move(r.linear), std::move(r.constant)};
    bool flipped = false;
    AffineForm n = normalize_form(f, &flipped);
    if (flipped) {
        // Strict rows are one-sided; keep the original orientation.
        for (auto& a : n.linear) a = -a;
        n.constant = -n.constant;
    }
    return {std::move(n.linear), std::move(n.constant)};
}

}  // namespace

bool fm_strictly_feasible(int dim, const std::vector<AffineForm>& equalities,
                          const std::vector<AffineForm>& positive,
                          const std::vector<AffineForm>& negative) {
    auto flat = flat_from_equalities(equalities, dim);
    if (!flat) return false;
    const AffineMap chart = flat->chart();

    std::vector<StrictRow> rows;  // each row: linear.u + constant > 0
    auto add = [&](const AffineForm& f, int orient) {
        AffineForm g = pull_form(f, chart);
        StrictRow r;
        r.linear = std::move(g.linear);
        r.constant = std::move(g.constant);
        if (orient < 0) {
            for (auto& a : r.linear) a = -a;
            r.constant = -r.constant;
        }
        rows.push_back(normalize_row(std::move(r)));
    };
    for (const auto& f : positive) add(f, +1);
    for (const auto& f : negative) add(f, -1);

    int d = flat->dim();
    while (d > 0) {
        const int j = d - 1;
        std::vector<StrictRow> pos, neg, keep;
        for (auto& r : rows) {
            const int s = sign_of(r.linear[j]);
            (s > 0 ? pos : s < 0 ? neg : keep).push_back(std::move(r));
        }
        std::vector<StrictRow> next = std::move(keep);
        for (const auto& p : pos)
            for (const auto& q : neg) {
                StrictRow r;
                r.linear = zero_vector(d - 1);
                // p * (-q_j) + q * (p_j) cancels coordinate j; both factors
                // are positive so strictness is preserved.
                const Rational cp = -q.linear[j];
                const Rational cq = p.linear[j];
                for (int k = 0; k < d - 1; ++k)
                    r.linear[k] = cp * p.linear[k] + cq * q.linear[k];
                r.constant = cp * p.constant + cq * q.constant;
                next.push_back(normalize_row(std::move(r)));
            }
        for (auto& r : next) r.linear.resize(d - 1);
        std::sort(next.begin(), next.end(), [](const StrictRow& a, const StrictRow& b) {
            if (a.linear != b.linear) return a.linear < b.linear;
            return a.constant < b.constant;
        });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const StrictRow& a, const StrictRow& b) {
                                   return a.linear == b.linear && a.constant == b.constant;
                               }),
                   next.end());
        if (next.size() > 200000) throw InternalError("fm oracle: row blowup");
        rows = std::move(next);
        --d;
    }
    for (const auto& r : rows)
        if (r.constant <= 0) return false;
    return true;
}

bool cone_structure_ok(const AffineCF& cf, const std::vector<AffineForm>& outward_normals) {
    const int n = cf.dim();
    std::vector<Constraint> interior;
    for (const auto& a : outward_normals) interior.push_back({a, Rel::GT});
    auto g0 = find_point(n, interior);
    if (!g0) throw InputError("cone_structure_ok: cone has empty interior");

    // A few interior directions: the witness plus small perturbations that
    // stay strictly inside.
    std::vector<RatVector> dirs{*g0};
    for (int i = 0; i < n; ++i) {
        for (int s : {+1, -1}) {
            RatVector g = *g0;
            Rational margin(1);
            bool first = true;
            for (const auto& a : outward_normals) {
                Rational val = a.eval(*g0);
                Rational reach = abs(a.linear[i]);
                if (reach == 0) continue;
                Rational bound = val / reach;
                if (first || bound < margin) {
                    margin = bound;
                    first = false;
                }
            }
            g[i] += s * margin / 2;
            dirs.push_back(std::move(g));
        }
    }

    for (std::size_t ci = 0; ci < cf.cells.size(); ++ci) {
        const RatVector& x0 = cf.cells[ci].sample;
        for (const auto& g : dirs) {
            // First wall crossing along x0 - tau*g.
            Rational tau(1);
            bool bounded = false;
            for (const auto& f : cf.arr.forms) {
                Rational slope(0);
                for (int k = 0; k < n; ++k) slope += f.linear[k] * g[k];
                if (slope == 0) continue;
                Rational root = f.eval(x0) / slope;
                if (root > 0 && (!bounded || root < tau)) {
                    tau = root;
                    bounded = true;
                }
            }
            tau /= 2;
            RatVector p = x0;
            for (int k = 0; k < n; ++k) p[k] -= tau * g[k];
            if (evaluate(cf, p) != cf.values[ci]) return false;
        }
    }
    return true;
}

}  // namespace eucalc
