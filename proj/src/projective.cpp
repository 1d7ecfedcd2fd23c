// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#include "eucalc/projective.hpp"

#include <algorithm>
#include <map>

#include "eucalc/errors.hpp"
#include "eucalc/parallel.hpp"

namespace eucalc {

namespace {

Int parity_term_proj(Int value, int cone_dim) { return (cone_dim & 1) ? value : -value; }

bool is_coordinate_form(const AffineForm& f) {
    if (f.constant != 0) return false;
    int ones = 0;
    for (const auto& a : f.linear) {
        if (a == 1)
            ++ones;
        else if (a != 0)
            return false;
    }
    return ones == 1;
}

}  // namespace

ProjectiveCF make_proj_cf(int proj_dim, Arrangement arr, const std::vector<Int>& cell_values) {
    if (!arr.central || arr.dim != proj_dim + 1)
        throw InputError("make_proj_cf: needs a central arrangement in R^(n+1)");
    ProjectiveCF cf;
    cf.proj_dim = proj_dim;
    cf.arr = std::move(arr);
    cf.cells = enumerate_cells(cf.arr);
    if (cf.cells.size() != cell_values.size())
        throw InputError("make_proj_cf: value count does not match cell count");
    cf.values = cell_values;
    check_evenness(cf);
    return cf;
}

ProjectiveCF constant_proj(int proj_dim, Int value) {
    ProjectiveCF cf;
    cf.proj_dim = proj_dim;
    cf.arr = make_central_arrangement(proj_dim + 1, {});
    cf.cells = enumerate_cells(cf.arr);
    cf.values.assign(cf.cells.size(), value);
    return cf;
}

ProjectiveCF proj_point_indicator(const RatVector& v) {
    const int ambient = static_cast<int>(v.size());
    if (ambient < 1) throw InputError("proj_point_indicator: empty vector");
    bool nonzero = false;
    for (const auto& x : v) nonzero = nonzero || x != 0;
    if (!nonzero) throw InputError("proj_point_indicator: zero vector");

    // Forms spanning the annihilator of v; their common zero locus is the
    // line R*v.
    LinearSolution ann = solve_linear({AffineForm{v, Rational(0)}}, ambient);
    std::vector<AffineForm> forms;
    for (const auto& a : ann.kernel) forms.push_back(AffineForm{a, Rational(0)});

    ProjectiveCF cf;
    cf.proj_dim = ambient - 1;
    cf.arr = make_central_arrangement(ambient, forms);
    cf.cells = enumerate_cells(cf.arr);
    cf.values.resize(cf.cells.size());
    for (std::size_t i = 0; i < cf.cells.size(); ++i) {
        bool on_line = true;
        for (const auto& a : ann.kernel)
            on_line = on_line && dot(a, cf.cells[i].sample) == 0;
        cf.values[i] = on_line ? 1 : 0;
    }
    return cf;
}

ProjectiveCF proj_hyperplane_indicator(const RatVector& a) {
    const int ambient = static_cast<int>(a.size());
    AffineForm f{a, Rational(0)};
    if (f.degenerate()) throw InputError("proj_hyperplane_indicator: zero form");
    ProjectiveCF cf;
    cf.proj_dim = ambient - 1;
    cf.arr = make_central_arrangement(ambient, {f});
    cf.cells = enumerate_cells(cf.arr);
    cf.values.resize(cf.cells.size());
    for (std::size_t i = 0; i < cf.cells.size(); ++i)
        cf.values[i] = f.eval(cf.cells[i].sample) == 0 ? 1 : 0;
    return cf;
}

Int evaluate_proj(const ProjectiveCF& cf, const RatVector& p) {
    return cf.values[locate(cf.arr, cf.cells, p)];
}

std::pair<ProjectiveCF, ProjectiveCF> refine_common_proj(const ProjectiveCF& a,
                                                         const ProjectiveCF& b, int max_cells) {
    if (a.proj_dim != b.proj_dim) throw InputError("refine_common_proj: dimension mismatch");
    ProjectiveCF ra, rb;
    ra.proj_dim = rb.proj_dim = a.proj_dim;
    ra.arr = merge_arrangements(a.arr, b.arr);
    ra.cells = enumerate_cells(ra.arr, max_cells);
    rb.arr = ra.arr;
    rb.cells = ra.cells;
    ra.values.resize(ra.cells.size());
    rb.values.resize(ra.cells.size());
    parallel_for(ra.cells.size(), [&](std::size_t i) {
        ra.values[i] = evaluate_proj(a, ra.cells[i].sample);
        rb.values[i] = evaluate_proj(b, ra.cells[i].sample);
    });
    return {std::move(ra), std::move(rb)};
}

ProjectiveCF add_proj(const ProjectiveCF& a, const ProjectiveCF& b, int max_cells) {
    auto [ra, rb] = refine_common_proj(a, b, max_cells);
    for (std::size_t i = 0; i < ra.values.size(); ++i) ra.values[i] += rb.values[i];
    return std::move(ra);
}

ProjectiveCF scale_proj(const ProjectiveCF& a, Int c) {
    ProjectiveCF out = a;
    for (auto& v : out.values) v *= c;
    return out;
}

ProjectiveCF multiply_proj(const ProjectiveCF& a, const ProjectiveCF& b, int max_cells) {
    auto [ra, rb] = refine_common_proj(a, b, max_cells);
    for (std::size_t i = 0; i < ra.values.size(); ++i) ra.values[i] *= rb.values[i];
    return std::move(ra);
}

bool proj_equal(const ProjectiveCF& a, const ProjectiveCF& b, int max_cells) {
    if (a.proj_dim != b.proj_dim) return false;
    if (a.arr.forms == b.arr.forms) return a.values == b.values;
    auto [ra, rb] = refine_common_proj(a, b, max_cells);
    return ra.values == rb.values;
}

Int integrate_proj(const ProjectiveCF& cf) {
    Int acc = 0;
    for (std::size_t i = 0; i < cf.cells.size(); ++i)
        if (is_pair_representative(cf.cells[i]))
            acc += parity_term_proj(cf.values[i], cf.cells[i].dim);
    return acc;
}

ProjectiveCF dual_proj(const ProjectiveCF& cf) {
    ProjectiveCF out = cf;
    parallel_for(cf.cells.size(), [&](std::size_t d) {
        Int acc = 0;
        for (std::size_t c = 0; c < cf.cells.size(); ++c)
            if (face_leq(cf.cells[d].signs, cf.cells[c].signs))
                acc += parity_term_proj(cf.values[c], cf.cells[c].dim);
        out.values[d] = acc;
    });
    return out;
}

ProjectiveCF embed_eim(const AffineCF& cf, int max_cells) {
    const int n = cf.dim();
    std::vector<AffineForm> forms;
    forms.reserve(cf.arr.form_count());
    for (const auto& f : cf.arr.forms) {
        AffineForm g;
        g.linear = f.linear;
        g.linear.push_back(f.constant);  // a.x + b -> a.x + b*x_{n+1}
        forms.push_back(std::move(g));
    }
    ProjectiveCF out;
    out.proj_dim = n;
    out.arr = make_central_arrangement(n + 1, std::move(forms));
    out.cells = enumerate_cells(out.arr, max_cells);
    out.values.resize(out.cells.size());
    parallel_for(out.cells.size(), [&](std::size_t i) {
        const RatVector& s = out.cells[i].sample;
        const Rational& last = s[static_cast<std::size_t>(n)];
        if (last == 0) {
            out.values[i] = 0;
            return;
        }
        RatVector p(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) p[j] = s[j] / last;
        out.values[i] = evaluate(cf, p);
    });
    return out;
}

ProjectiveCF embed_oim(const AffineCF& cf, int max_cells) {
    return dual_proj(embed_eim(dual(cf), max_cells));
}

AffineCF restrict_chart(const ProjectiveCF& cf, int chart_index, int max_cells) {
    const int n = cf.proj_dim;
    if (chart_index < 1 || chart_index > n + 1)
        throw InputError("restrict_chart: chart index out of range");
    const int ci = chart_index - 1;
    std::vector<AffineForm> forms;
    for (const auto& f : cf.arr.forms) {
        AffineForm g;
        g.linear.reserve(n);
        for (int j = 0; j <= n; ++j)
            if (j != ci) g.linear.push_back(f.linear[j]);
        g.constant = f.linear[ci];
        if (!g.degenerate()) forms.push_back(std::move(g));
    }
    AffineCF out;
    out.arr = make_arrangement(n, std::move(forms));
    out.cells = enumerate_cells(out.arr, max_cells);
    out.values.resize(out.cells.size());
    parallel_for(out.cells.size(), [&](std::size_t i) {
        RatVector h(static_cast<std::size_t>(n) + 1);
        int k = 0;
        for (int j = 0; j <= n; ++j) h[j] = (j == ci) ? Rational(1) : out.cells[i].sample[k++];
        out.values[i] = evaluate_proj(cf, h);
    });
    return out;
}

ProjectiveCF simplify_proj(const ProjectiveCF& cf, int max_cells) {
    const std::size_t nf = cf.arr.form_count();
    std::vector<bool> dropped(nf, false);
    std::size_t n_dropped = 0;
    for (std::size_t fi = 0; fi < nf; ++fi) {
        if (is_coordinate_form(cf.arr.forms[fi])) continue;
        std::map<SignVector, Int> groups;
        bool ok = true;
        for (std::size_t ci = 0; ci < cf.cells.size() && ok; ++ci) {
            SignVector key;
            for (std::size_t j = 0; j < nf; ++j)
                if (!dropped[j] && j != fi) key.push_back(cf.cells[ci].signs[j]);
            auto [it, fresh] = groups.emplace(std::move(key), cf.values[ci]);
            if (!fresh && it->second != cf.values[ci]) ok = false;
        }
        if (ok) {
            dropped[fi] = true;
            ++n_dropped;
        }
    }
    if (n_dropped == 0) return cf;

    std::vector<AffineForm> kept;
    for (std::size_t j = 0; j < nf; ++j)
        if (!dropped[j]) kept.push_back(cf.arr.forms[j]);
    ProjectiveCF out;
    out.proj_dim = cf.proj_dim;
    out.arr = make_central_arrangement(cf.arr.dim, std::move(kept));
    out.cells = enumerate_cells(out.arr, max_cells);
    out.values.resize(out.cells.size());
    parallel_for(out.cells.size(), [&](std::size_t i) {
        out.values[i] = evaluate_proj(cf, out.cells[i].sample);
    });
    return out;
}

void check_evenness(const ProjectiveCF& cf) {
    for (std::size_t i = 0; i < cf.cells.size(); ++i) {
        const std::size_t j = antipodal_index(cf.arr, cf.cells, i);
        if (cf.values[i] != cf.values[j])
            throw InternalError("projective function is not even on antipodal cells");
    }
}

}  // namespace eucalc
