// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#include "eucalc/radon.hpp"

#include <algorithm>
#include <random>

#include "eucalc/errors.hpp"
#include "eucalc/parallel.hpp"

namespace eucalc {

namespace {

Rational det2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    return a * d - b * c;
}

RatVector cross(const RatVector& a, const RatVector& b) {
    return RatVector{det2(a[1], a[2], b[1], b[2]), -det2(a[0], a[2], b[0], b[2]),
                     det2(a[0], a[1], b[0], b[1])};
}

bool is_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// Scale-canonical representative of a nonzero direction.
RatVector normalize_direction(const RatVector& v) {
    return normalize_form(AffineForm{v, Rational(0)}).linear;
}

}  // namespace

Int slice_integral(const ProjectiveCF& cf, const RatVector& y, int max_cells) {
    if (static_cast<int>(y.size()) != cf.proj_dim + 1)
        throw InputError("slice_integral: direction dimension mismatch");
    if (is_zero(y)) throw InputError("slice_integral: zero direction");

    LinearSolution kernel = solve_linear({AffineForm{y, Rational(0)}}, cf.proj_dim + 1);
    Flat flat{zero_vector(cf.proj_dim + 1), kernel.kernel};
    Restriction res = restrict_to_flat(cf.arr, flat, /*make_central=*/true);
    std::vector<Cell> cells = enumerate_cells(res.arr, max_cells);
    Int acc = 0;
    for (const auto& c : cells) {
        if (!is_pair_representative(c)) continue;
        const Int v = evaluate_proj(cf, res.chart.apply(c.sample));
        acc += (c.dim & 1) ? v : -v;
    }
    return acc;
}

ProjectiveCF radon_p2(const ProjectiveCF& cf, const EngineOptions& opts) {
    if (cf.proj_dim != 2) throw InputError("radon_p2: input must live on the projective plane");

    // Dual walls: the dual point of every pairwise intersection of source
    // planes.
    std::vector<RatVector> points;
    const auto& forms = cf.arr.forms;
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = i + 1; j < forms.size(); ++j) {
            RatVector v = cross(forms[i].linear, forms[j].linear);
            if (!is_zero(v)) points.push_back(normalize_direction(v));
        }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    // Every source plane must carry at least two of these points so that its
    // own dual point [a_i] is pinned as a 0-cell; top up from the plane's
    // kernel basis when the arrangement is too small.
    std::vector<RatVector> aux;
    for (const auto& f : forms) {
        int on_plane = 0;
        for (const auto& v : points)
            if (dot(f.linear, v) == 0) ++on_plane;
        if (on_plane >= 2) continue;
        LinearSolution kernel = solve_linear({AffineForm{f.linear, Rational(0)}}, 3);
        for (const auto& v : kernel.kernel) aux.push_back(normalize_direction(v));
    }
    points.insert(points.end(), aux.begin(), aux.end());

    std::vector<AffineForm> walls;
    walls.reserve(points.size());
    for (auto& v : points) walls.push_back(AffineForm{std::move(v), Rational(0)});

    ProjectiveCF out;
    out.proj_dim = 2;
    out.arr = make_central_arrangement(3, std::move(walls));
    out.cells = enumerate_cells(out.arr, opts.max_cells);
    out.values.resize(out.cells.size());

    parallel_for(out.cells.size(), [&](std::size_t i) {
        const Int v = slice_integral(cf, out.cells[i].sample, opts.max_cells);
        std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ULL + 0x94d049bb133111ebULL * (i + 1));
        for (int rep = 0; rep < opts.oversample; ++rep) {
            RatVector p = random_point_in_cell(out.arr, out.cells[i], rng);
            const Int w = slice_integral(cf, p, opts.max_cells);
            if (w != v)
                throw InternalError("radon_p2: dual stratification insufficient at cell " +
                                    std::to_string(i) + ": slice integrals " + std::to_string(v) +
                                    " vs " + std::to_string(w));
        }
        out.values[i] = v;
    });
    return simplify_proj(out, opts.max_cells);
}

ProjectiveCF radon_dual_p2(const ProjectiveCF& cf, const EngineOptions& opts) {
    // <x, y> = 0 is symmetric in x and y.
    return radon_p2(cf, opts);
}

RadonInversion radon_invert_check(const ProjectiveCF& cf, const EngineOptions& opts) {
    RadonInversion result;
    result.lhs = radon_dual_p2(radon_p2(cf, opts), opts);
    result.rhs = add_proj(scale_proj(cf, -1), constant_proj(2, integrate_proj(cf)), opts.max_cells);
    result.equal = proj_equal(result.lhs, result.rhs, opts.max_cells);
    return result;
}

std::pair<Int, Int> lambda_kernel_check(std::uint64_t seed, int n_pairs) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
    std::uniform_int_distribution<int> coeff(-4, 4);
    auto random_point = [&] {
        RatVector v(3);
        do {
            for (auto& x : v) x = coeff(rng);
        } while (is_zero(v));
        return v;
    };

    // lambda(x, x') counts lines through both points: the indicator of
    // {y : x.y = 0} times the indicator of {y : x'.y = 0}, integrated over
    // the dual plane.
    auto lambda = [&](const RatVector& x, const RatVector& xp) {
        ProjectiveCF hx = proj_hyperplane_indicator(x);
        if (normalize_direction(x) == normalize_direction(xp)) return integrate_proj(hx);
        return integrate_proj(multiply_proj(hx, proj_hyperplane_indicator(xp)));
    };

    Int a = 0, b = 0;
    bool have_a = false, have_b = false;
    for (int k = 0; k < n_pairs; ++k) {
        RatVector x = random_point();
        RatVector xp = random_point();
        if (normalize_direction(x) == normalize_direction(xp)) xp[0] += 1;
        if (is_zero(xp) || normalize_direction(x) == normalize_direction(xp)) continue;
        const Int va = lambda(x, xp);
        if (have_a && va != a)
            throw InternalError("lambda_kernel_check: off-diagonal value not constant");
        a = va;
        have_a = true;
        const Int vb = lambda(x, x);
        if (have_b && vb != b)
            throw InternalError("lambda_kernel_check: diagonal value not constant");
        b = vb;
        have_b = true;
    }
    if (!have_a || !have_b) throw InternalError("lambda_kernel_check: no pairs sampled");
    return {a, b};
}

Int slice_eval_r3(const AffineCF& cf, const AffineForm& plane, int max_cells) {
    if (cf.dim() != 3) throw InputError("slice_eval_r3: function must live on R^3");
    if (plane.dim() != 3 || plane.degenerate()) throw InputError("slice_eval_r3: invalid plane");
    if (!has_compact_support(cf))
        throw InputError("slice_eval_r3: support is not compact");
    auto flat = flat_from_equalities({plane}, 3);
    if (!flat) throw InputError("slice_eval_r3: degenerate plane");
    return fiber_integral(cf, *flat, max_cells);
}

AffineCF slice_cf_r3(const AffineCF& cf, const AffineForm& plane, int max_cells) {
    if (cf.dim() != 3) throw InputError("slice_cf_r3: function must live on R^3");
    if (plane.dim() != 3 || plane.degenerate()) throw InputError("slice_cf_r3: invalid plane");
    auto flat = flat_from_equalities({plane}, 3);
    if (!flat) throw InputError("slice_cf_r3: degenerate plane");
    Restriction res = restrict_to_flat(cf.arr, *flat, /*make_central=*/false);
    AffineCF out;
    out.arr = std::move(res.arr);
    out.cells = enumerate_cells(out.arr, max_cells);
    out.values.resize(out.cells.size());
    parallel_for(out.cells.size(), [&](std::size_t i) {
        out.values[i] = evaluate(cf, res.chart.apply(out.cells[i].sample));
    });
    return out;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

Int component_count(const std::vector<Cell>& cells, const std::vector<std::size_t>& members) {
    UnionFind uf(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const auto& a = cells[members[i]].signs;
            const auto& b = cells[members[j]].signs;
            if (face_leq(a, b) || face_leq(b, a)) uf.unite(i, j);
        }
    Int components = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
        if (uf.find(i) == i) ++components;
    return components;
}

}  // namespace

BettiPair betti_slice(const AffineCF& cf) {
    if (cf.dim() != 2) throw InputError("betti_slice: function must live on R^2");
    if (!has_compact_support(cf)) throw InputError("betti_slice: support is not compact");

    std::vector<std::size_t> support, complement;
    for (std::size_t i = 0; i < cf.cells.size(); ++i)
        (cf.values[i] != 0 ? support : complement).push_back(i);
    if (support.empty()) return {0, 0};

    BettiPair betti;
    betti.b0 = component_count(cf.cells, support);
    Int chi = 0;  // chi of the support as a set
    for (std::size_t i : support) chi += (cf.cells[i].dim & 1) ? -1 : 1;
    betti.b1 = betti.b0 - chi;

    const Int holes = component_count(cf.cells, complement) - 1;
    if (holes != betti.b1)
        throw InternalError("betti_slice: hole counts disagree: b0 - chi = " +
                            std::to_string(betti.b1) + ", complement components - 1 = " +
                            std::to_string(holes));
    return betti;
}

}  // namespace eucalc
