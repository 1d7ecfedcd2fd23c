// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#include "eucalc/suite.hpp"

#include <chrono>
#include <functional>

#include "eucalc/errors.hpp"
#include "eucalc/oracles.hpp"

namespace eucalc {

namespace {

Rational random_coeff(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> num(-bound, bound);
    return Rational(num(rng));
}

AffineForm random_form(std::mt19937_64& rng, int dim, int coeff_bound) {
    AffineForm f;
    f.linear = zero_vector(dim);
    bool nonzero = false;
    while (!nonzero) {
        for (auto& a : f.linear) {
            a = random_coeff(rng, coeff_bound);
            nonzero = nonzero || a != 0;
        }
    }
    f.constant = random_coeff(rng, coeff_bound);
    return f;
}

}  // namespace

AffineCF random_affine_cf(std::mt19937_64& rng, int dim, int max_forms, int value_bound,
                          int coeff_bound) {
    std::uniform_int_distribution<int> nf(1, max_forms);
    std::vector<AffineForm> forms;
    const int count = nf(rng);
    for (int i = 0; i < count; ++i) forms.push_back(random_form(rng, dim, coeff_bound));
    AffineCF cf;
    cf.arr = make_arrangement(dim, std::move(forms));
    cf.cells = enumerate_cells(cf.arr);
    std::uniform_int_distribution<Int> val(-value_bound, value_bound);
    cf.values.resize(cf.cells.size());
    for (auto& v : cf.values) v = val(rng);
    return cf;
}

AffineCF random_compact_cf(std::mt19937_64& rng, int dim, int max_forms, int value_bound,
                           int coeff_bound) {
    AffineCF cf = random_affine_cf(rng, dim, max_forms, value_bound, coeff_bound);
    std::uniform_int_distribution<int> size(1, 3);
    const int b = size(rng);
    PolyhedronSpec box;
    box.dim = dim;
    for (int i = 0; i < dim; ++i) {
        AffineForm lo, hi;
        lo.linear = zero_vector(dim);
        lo.linear[i] = 1;
        lo.constant = b;  // x_i + b >= 0
        hi.linear = zero_vector(dim);
        hi.linear[i] = -1;
        hi.constant = b;  // b - x_i >= 0
        box.constraints.push_back({std::move(lo), RelOp::GE});
        box.constraints.push_back({std::move(hi), RelOp::GE});
    }
    return multiply(cf, indicator(box));
}

AffineMap random_surjective_map(std::mt19937_64& rng, int dim_in, int dim_out, int coeff_bound) {
    AffineMap m;
    for (;;) {
        m.matrix.assign(dim_out, zero_vector(dim_in));
        for (auto& row : m.matrix)
            for (auto& a : row) a = random_coeff(rng, coeff_bound);
        if (rank(m.matrix) == dim_out) break;
    }
    m.translation = zero_vector(dim_out);
    for (auto& t : m.translation) t = random_coeff(rng, coeff_bound);
    return m;
}

namespace {

// ---------------------------------------------------------------------------
// Small builders used by several criteria.

AffineForm form1(std::initializer_list<int> linear, int constant) {
    AffineForm f;
    for (int a : linear) f.linear.emplace_back(a);
    f.constant = constant;
    return f;
}

AffineCF interval_cf(const Rational& a, const Rational& b, bool closed_left, bool closed_right) {
    PolyhedronSpec spec;
    spec.dim = 1;
    AffineForm left{RatVector{Rational(1)}, -a};   // x - a
    AffineForm right{RatVector{Rational(-1)}, b};  // b - x
    spec.constraints.push_back({left, closed_left ? RelOp::GE : RelOp::GT});
    spec.constraints.push_back({right, closed_right ? RelOp::GE : RelOp::GT});
    return indicator(spec);
}

AffineCF ray_cf(const Rational& b, bool closed) {  // (-inf, b] or (-inf, b)
    PolyhedronSpec spec;
    spec.dim = 1;
    AffineForm right{RatVector{Rational(-1)}, b};
    spec.constraints.push_back({right, closed ? RelOp::GE : RelOp::GT});
    return indicator(spec);
}

// Indicator of the closed simplex with the given affinely independent
// vertices (d+1 vertices in R^d).
AffineCF simplex_cf(const std::vector<RatVector>& verts) {
    const int d = static_cast<int>(verts[0].size());
    PolyhedronSpec spec;
    spec.dim = d;
    for (std::size_t skip = 0; skip < verts.size(); ++skip) {
        std::vector<AffineForm> directions;
        const RatVector* base = nullptr;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (i == skip) continue;
            if (!base) {
                base = &verts[i];
                continue;
            }
            RatVector edge = zero_vector(d);
            for (int k = 0; k < d; ++k) edge[k] = verts[i][k] - (*base)[k];
            directions.push_back(AffineForm{std::move(edge), Rational(0)});
        }
        LinearSolution normal = solve_linear(directions, d);
        if (normal.kernel.size() != 1) throw InputError("simplex_cf: degenerate vertices");
        AffineForm facet;
        facet.linear = normal.kernel[0];
        facet.constant = -dot(facet.linear, *base);
        if (facet.eval(verts[skip]) < 0) {
            for (auto& x : facet.linear) x = -x;
            facet.constant = -facet.constant;
        }
        if (facet.eval(verts[skip]) == 0) throw InputError("simplex_cf: degenerate vertices");
        spec.constraints.push_back({std::move(facet), RelOp::GE});
    }
    return indicator(spec);
}

std::vector<RatVector> random_simplex_vertices(std::mt19937_64& rng, int d) {
    std::uniform_int_distribution<int> coord(-6, 6);
    for (;;) {
        std::vector<RatVector> verts(static_cast<std::size_t>(d) + 1, zero_vector(d));
        for (auto& v : verts)
            for (auto& x : v) x = Rational(coord(rng), 2);
        std::vector<RatVector> edges;
        for (int i = 1; i <= d; ++i) {
            RatVector e = zero_vector(d);
            for (int k = 0; k < d; ++k) e[k] = verts[i][k] - verts[0][k];
            edges.push_back(std::move(e));
        }
        if (rank(edges) == d) return verts;
    }
}

AffineCF box_cf(const std::vector<std::pair<Rational, Rational>>& ranges) {
    const int d = static_cast<int>(ranges.size());
    PolyhedronSpec spec;
    spec.dim = d;
    for (int i = 0; i < d; ++i) {
        AffineForm lo, hi;
        lo.linear = zero_vector(d);
        lo.linear[i] = 1;
        lo.constant = -ranges[i].first;
        hi.linear = zero_vector(d);
        hi.linear[i] = -1;
        hi.constant = ranges[i].second;
        spec.constraints.push_back({std::move(lo), RelOp::GE});
        spec.constraints.push_back({std::move(hi), RelOp::GE});
    }
    return indicator(spec);
}

AffineCF triangle_cf(int ax, int ay, int bx, int by, int cx, int cy) {
    return simplex_cf({RatVector{Rational(ax), Rational(ay)}, RatVector{Rational(bx), Rational(by)},
                       RatVector{Rational(cx), Rational(cy)}});
}

// ---------------------------------------------------------------------------
// Criteria.

bool crit_1d_table(const SuiteOptions&, std::string& detail) {
    const Rational a(-1), b(2);
    struct Row {
        AffineCF cf;
        Int expect_int, expect_np;
    };
    std::vector<Row> rows;
    rows.push_back({constant_cf(1, 1), -1, 1});
    rows.push_back({ray_cf(b, false), -1, 0});
    rows.push_back({ray_cf(b, true), 0, 1});
    rows.push_back({interval_cf(a, b, true, true), 1, 1});
    rows.push_back({interval_cf(a, b, false, false), -1, -1});
    rows.push_back({interval_cf(a, b, true, false), 0, 0});
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Int vi = integrate(rows[i].cf);
        const Int vn = integrate_np(rows[i].cf);
        if (vi != rows[i].expect_int || vn != rows[i].expect_np) {
            detail = "row " + std::to_string(i) + ": got (" + std::to_string(vi) + ", " +
                     std::to_string(vn) + ")";
            return false;
        }
    }
    detail = "12 table values exact";
    return true;
}

bool crit_chi_pn(const SuiteOptions&, std::string& detail) {
    const Int expected[] = {0, 1, 0};
    for (int n = 1; n <= 3; ++n) {
        const Int chi = integrate_proj(constant_proj(n, 1));
        if (chi != expected[n - 1]) {
            detail = "chi(P^" + std::to_string(n) + ") = " + std::to_string(chi);
            return false;
        }
    }
    detail = "chi(P^1,P^2,P^3) = 0,1,0";
    return true;
}

bool crit_involution(const SuiteOptions& opts, std::string& detail) {
    std::mt19937_64 rng(opts.seed + 3);
    int count = 0;
    for (int i = 0; i < 100; ++i) {
        const int dim = 1 + i % 3;
        AffineCF cf = random_affine_cf(rng, dim, 8, 5);
        AffineCF dd = dual(dual(cf));
        if (dd.values != cf.values) {
            detail = "instance " + std::to_string(i) + " (dim " + std::to_string(dim) + ") failed";
            return false;
        }
        ++count;
    }
    detail = std::to_string(count) + " random functions, D(D(f)) = f cellwise";
    return true;
}

bool crit_dual_pushforward(const SuiteOptions& opts, std::string& detail) {
    std::mt19937_64 rng(opts.seed + 4);
    int count = 0;
    for (int i = 0; i < 50; ++i) {
        const bool big = i % 10 == 0;
        const int m = big ? 3 : 2;
        const int k = big ? (i % 20 == 0 ? 2 : 1) : 1;
        AffineCF cf = random_compact_cf(rng, m, big ? 2 : 4, 4);
        AffineMap f = random_surjective_map(rng, m, k);
        EngineOptions eopts{opts.max_cells, 1, opts.seed + 100 + static_cast<std::uint64_t>(i)};
        AffineCF lhs = dual(pushforward(cf, f, eopts));
        AffineCF rhs = pushforward(dual(cf), f, eopts);
        if (!cf_equal(lhs, rhs, opts.max_cells)) {
            detail = "instance " + std::to_string(i) + " failed";
            return false;
        }
        ++count;
    }
    detail = std::to_string(count) + " compactly supported pairs, D(push f) = push(D f)";
    return true;
}

bool crit_base_change_projection(const SuiteOptions& opts, std::string& detail) {
    std::mt19937_64 rng(opts.seed + 5);
    EngineOptions eopts{opts.max_cells, 1, opts.seed + 500};

    for (int i = 0; i < 25; ++i) {
        const int m = 2, p = 1;
        const int n = (i % 5 == 0) ? 2 : 1;
        AffineCF cf = random_affine_cf(rng, m, 3, 3);
        AffineMap f = random_surjective_map(rng, m, p);
        AffineMap g;
        g.matrix.assign(p, zero_vector(n));
        for (auto& row : g.matrix)
            for (auto& x : row) x = random_coeff(rng, 2);
        g.translation = zero_vector(p);
        for (auto& t : g.translation) t = random_coeff(rng, 2);

        AffineCF lhs = pullback(pushforward(cf, f, eopts), g, opts.max_cells);

        // Fiber product W = {(x, y) : f(x) = g(y)} inside R^{m+n}.
        std::vector<AffineForm> eqs;
        for (int r = 0; r < p; ++r) {
            AffineForm e;
            e.linear = zero_vector(m + n);
            for (int c = 0; c < m; ++c) e.linear[c] = f.matrix[r][c];
            for (int c = 0; c < n; ++c) e.linear[m + c] = -g.matrix[r][c];
            e.constant = f.translation[r] - g.translation[r];
            eqs.push_back(std::move(e));
        }
        auto w = flat_from_equalities(eqs, m + n);
        if (!w) {
            detail = "fiber product unexpectedly empty";
            return false;
        }
        const AffineMap chart = w->chart();
        std::vector<int> xs(m), ys(n);
        for (int c = 0; c < m; ++c) xs[c] = c;
        for (int c = 0; c < n; ++c) ys[c] = m + c;
        AffineMap gp = compose(AffineMap::coordinate_projection(m + n, xs), chart);
        AffineMap fp = compose(AffineMap::coordinate_projection(m + n, ys), chart);
        AffineCF rhs = pushforward(pullback(cf, gp, opts.max_cells), fp, eopts);
        if (!cf_equal(lhs, rhs, opts.max_cells)) {
            detail = "base change instance " + std::to_string(i) + " failed";
            return false;
        }
    }

    for (int i = 0; i < 25; ++i) {
        const int m = 2, k = 1;
        AffineCF cf = random_affine_cf(rng, m, 3, 3);
        AffineCF psi = random_affine_cf(rng, k, 3, 3);
        AffineMap f = random_surjective_map(rng, m, k);
        AffineCF lhs = pushforward(multiply(cf, pullback(psi, f, opts.max_cells)), f, eopts);
        AffineCF rhs = multiply(psi, pushforward(cf, f, eopts), opts.max_cells);
        if (!cf_equal(lhs, rhs, opts.max_cells)) {
            detail = "projection formula instance " + std::to_string(i) + " failed";
            return false;
        }
    }
    detail = "25 base-change + 25 projection-formula instances exact";
    return true;
}

bool crit_kernel_associativity(const SuiteOptions& opts, std::string& detail) {
    std::mt19937_64 rng(opts.seed + 6);
    EngineOptions eopts{opts.max_cells, 1, opts.seed + 600};
    for (int i = 0; i < 10; ++i) {
        AffineCF k12 = random_affine_cf(rng, 2, 3, 2, 2);
        AffineCF k23 = random_affine_cf(rng, 2, 3, 2, 2);
        AffineCF k34 = random_affine_cf(rng, 2, 3, 2, 2);
        AffineCF left = compose_kernels(compose_kernels(k12, 1, 1, k23, 1, eopts), 1, 1, k34, 1, eopts);
        AffineCF right = compose_kernels(k12, 1, 1, compose_kernels(k23, 1, 1, k34, 1, eopts), 1, eopts);
        if (!cf_equal(left, right, opts.max_cells)) {
            detail = "triple " + std::to_string(i) + " failed";
            return false;
        }
    }
    detail = "10 random kernel triples associate exactly";
    return true;
}

bool crit_convolution(const SuiteOptions& opts, std::string& detail) {
    std::mt19937_64 rng(opts.seed + 7);
    EngineOptions eopts{opts.max_cells, 1, opts.seed + 700};
    const AffineCF delta = delta_cf(RatVector{Rational(0)});
    for (int i = 0; i < 25; ++i) {
        AffineCF a = random_affine_cf(rng, 1, 4, 3);
        AffineCF b = random_affine_cf(rng, 1, 4, 3);
        if (!cf_equal(convolve(delta, a, eopts), a, opts.max_cells)) {
            detail = "unit failed at pair " + std::to_string(i);
            return false;
        }
        if (!cf_equal(convolve(a, b, eopts), convolve(b, a, eopts), opts.max_cells)) {
            detail = "commutativity failed at pair " + std::to_string(i);
            return false;
        }
        AffineCF np = convolve_np(a, b, eopts);
        AffineCF via_dual = dual(convolve(dual(a), dual(b), eopts));
        if (!cf_equal(np, via_dual, opts.max_cells)) {
            detail = "duality identity failed at pair " + std::to_string(i);
            return false;
        }
    }
    for (int i = 0; i < 10; ++i) {
        AffineCF a = random_affine_cf(rng, 1, 3, 2);
        AffineCF b = random_affine_cf(rng, 1, 3, 2);
        AffineCF c = random_affine_cf(rng, 1, 3, 2);
        if (!cf_equal(convolve(convolve(a, b, eopts), c, eopts),
                      convolve(a, convolve(b, c, eopts), eopts), opts.max_cells)) {
            detail = "star associativity failed at triple " + std::to_string(i);
            return false;
        }
        if (!cf_equal(convolve_np(convolve_np(a, b, eopts), c, eopts),
                      convolve_np(a, convolve_np(b, c, eopts), eopts), opts.max_cells)) {
            detail = "np associativity failed at triple " + std::to_string(i);
            return false;
        }
    }
    detail = "unit, commutativity, duality identity (25 pairs); both associativities (10 triples)";
    return true;
}

bool crit_gamma_idempotent(const SuiteOptions& opts, std::string& detail) {
    std::mt19937_64 rng(opts.seed + 8);
    EngineOptions eopts{opts.max_cells, 1, opts.seed + 800};

    PolyhedronSpec half;  // [0, inf) in R^1
    half.dim = 1;
    half.constraints.push_back({form1({1}, 0), RelOp::GE});

    PolyhedronSpec cone;  // {x >= 0, 3y - x >= 0} in R^2
    cone.dim = 2;
    cone.constraints.push_back({form1({1, 0}, 0), RelOp::GE});
    cone.constraints.push_back({form1({-1, 3}, 0), RelOp::GE});

    for (int i = 0; i < 25; ++i) {
        AffineCF cf = random_affine_cf(rng, 1, 4, 3);
        AffineCF once = gamma_project(cf, half, eopts);
        if (!cf_equal(gamma_project(once, half, eopts), once, opts.max_cells)) {
            detail = "half-line instance " + std::to_string(i) + " not idempotent";
            return false;
        }
    }
    for (int i = 0; i < 25; ++i) {
        AffineCF cf = random_affine_cf(rng, 2, 3, 3, 2);
        AffineCF once = gamma_project(cf, cone, eopts);
        if (!cf_equal(gamma_project(once, cone, eopts), once, opts.max_cells)) {
            detail = "plane cone instance " + std::to_string(i) + " not idempotent";
            return false;
        }
    }
    detail = "25 half-line + 25 plane-cone projections idempotent";
    return true;
}

bool crit_euler_formula(const SuiteOptions& opts, std::string& detail) {
    std::mt19937_64 rng(opts.seed + 9);
    for (int d = 1; d <= 3; ++d) {
        for (int rep = 0; rep < 4; ++rep) {
            AffineCF closed = simplex_cf(random_simplex_vertices(rng, d));
            // Interior: same facets taken strictly. The stored forms are
            // normalized, so recover the inward orientation from an interior
            // point first.
            PolyhedronSpec open_part;
            open_part.dim = d;
            for (const auto& f : closed.arr.forms) open_part.constraints.push_back({f, RelOp::GT});
            RatVector centroid = zero_vector(d);
            {
                Int inside_cells = 0;
                for (std::size_t i = 0; i < closed.cells.size(); ++i)
                    if (closed.values[i] == 1 && closed.cells[i].dim == d) {
                        centroid = closed.cells[i].sample;
                        ++inside_cells;
                    }
                if (inside_cells != 1) {
                    detail = "simplex indicator has unexpected interior";
                    return false;
                }
            }
            for (auto& c : open_part.constraints)
                if (c.form.eval(centroid) < 0) c.rel = RelOp::LT;
            AffineCF interior = indicator(open_part);
            AffineCF boundary = add(closed, scale(interior, -1));
            const Int whole = integrate(closed);
            const Int expected = (1 - ((d & 1) ? -1 : 1)) * whole;
            if (whole != 1 || integrate(boundary) != expected) {
                detail = "d=" + std::to_string(d) + ": got chi(Z)=" + std::to_string(whole) +
                         ", chi(dZ)=" + std::to_string(integrate(boundary));
                return false;
            }
        }
    }
    detail = "12 random simplices, chi(boundary) = (1-(-1)^d) chi(Z)";
    return true;
}

ProjectiveCF embed_triangle(int ax, int ay, int bx, int by, int cx, int cy) {
    return embed_eim(triangle_cf(ax, ay, bx, by, cx, cy));
}

bool crit_radon_inversion(const SuiteOptions& opts, std::string& detail) {
    EngineOptions eopts{opts.max_cells, opts.oversample, opts.seed + 1000};

    std::vector<std::pair<std::string, ProjectiveCF>> corpus;
    corpus.emplace_back("point", proj_point_indicator(RatVector{Rational(1), Rational(2), Rational(1)}));
    corpus.emplace_back("line", proj_hyperplane_indicator(RatVector{Rational(1), Rational(-1), Rational(2)}));
    corpus.emplace_back("triangle", embed_triangle(0, 0, 2, 0, 0, 2));
    {
        AffineCF two = add(triangle_cf(0, 0, 1, 0, 0, 1), triangle_cf(3, 3, 4, 3, 3, 4));
        corpus.emplace_back("two triangles", embed_eim(two));
    }
    {
        AffineCF tri = triangle_cf(0, 0, 2, 0, 0, 2);
        PolyhedronSpec inner;
        inner.dim = 2;
        inner.constraints.push_back({form1({1, 0}, 0), RelOp::GT});
        inner.constraints.push_back({form1({0, 1}, 0), RelOp::GT});
        inner.constraints.push_back({form1({-1, -1}, 2), RelOp::GT});
        corpus.emplace_back("triangle boundary", embed_eim(add(tri, scale(indicator(inner), -1))));
    }
    {
        AffineCF mix = add(triangle_cf(-2, -2, 0, -2, -2, 0), scale(triangle_cf(3, 0, 4, 0, 3, 1), -2));
        corpus.emplace_back("value -2 region", embed_eim(mix));
    }
    corpus.emplace_back("constant one", constant_proj(2, 1));
    {
        AffineCF square = box_cf({{Rational(0), Rational(1)}, {Rational(0), Rational(1)}});
        corpus.emplace_back("square", embed_eim(square));
    }

    for (auto& [name, cf] : corpus) {
        RadonInversion inv = radon_invert_check(cf, eopts);
        if (!inv.equal) {
            detail = "inversion failed for " + name;
            return false;
        }
    }
    auto [a, b] = lambda_kernel_check(opts.seed, 10);
    if (a != 1 || b != 0) {
        detail = "lambda kernel returned (" + std::to_string(a) + ", " + std::to_string(b) + ")";
        return false;
    }
    detail = std::to_string(corpus.size()) + " functions inverted exactly; lambda kernel (1, 0)";
    return true;
}

bool crit_slice_corollary(const SuiteOptions& opts, std::string& detail) {
    std::vector<std::pair<std::string, AffineCF>> bodies;
    bodies.emplace_back("cube", box_cf({{Rational(0), Rational(2)},
                                        {Rational(0), Rational(2)},
                                        {Rational(0), Rational(2)}}));
    bodies.emplace_back("two cubes", add(box_cf({{Rational(0), Rational(1)},
                                                 {Rational(0), Rational(1)},
                                                 {Rational(0), Rational(1)}}),
                                         box_cf({{Rational(3), Rational(4)},
                                                 {Rational(0), Rational(1)},
                                                 {Rational(0), Rational(1)}})));
    {
        AffineCF big = box_cf({{Rational(0), Rational(3)},
                               {Rational(0), Rational(3)},
                               {Rational(0), Rational(1)}});
        PolyhedronSpec tube;  // open square tube through the cube along z
        tube.dim = 3;
        tube.constraints.push_back({form1({1, 0, 0}, -1), RelOp::GT});
        tube.constraints.push_back({form1({-1, 0, 0}, 2), RelOp::GT});
        tube.constraints.push_back({form1({0, 1, 0}, -1), RelOp::GT});
        tube.constraints.push_back({form1({0, -1, 0}, 2), RelOp::GT});
        AffineCF hole = multiply(big, indicator(tube));
        bodies.emplace_back("cube with through-hole", add(big, scale(hole, -1)));
    }

    const std::vector<AffineForm> planes = {
        form1({0, 0, 1}, 0),          // z = 0 (tangent to the cubes' bottoms)
        form1({0, 0, 2}, -1),         // z = 1/2
        form1({1, 0, 0}, -1),         // x = 1
        form1({1, 1, 1}, -2),         // tilted
        form1({0, 0, 1}, 5),          // misses everything
        form1({2, -1, 0}, 1),
    };

    for (auto& [name, body] : bodies) {
        for (std::size_t pi = 0; pi < planes.size(); ++pi) {
            const Int direct = slice_eval_r3(body, planes[pi], opts.max_cells);
            BettiPair betti = betti_slice(slice_cf_r3(body, planes[pi], opts.max_cells));
            if (direct != betti.b0 - betti.b1) {
                detail = name + ", plane " + std::to_string(pi) + ": integral " +
                         std::to_string(direct) + " vs b0-b1 = " +
                         std::to_string(betti.b0 - betti.b1);
                return false;
            }
        }
    }
    detail = "3 bodies x 6 planes: slice integral = b0 - b1, complement count agrees";
    return true;
}

bool crit_oracles(const SuiteOptions& opts, std::string& detail) {
    std::mt19937_64 rng(opts.seed + 12);
    for (int i = 0; i < 20; ++i) {
        AffineCF cf = random_affine_cf(rng, 1 + i % 2, 4, 3);
        AffineCF fast = dual(cf);
        AffineCF slow = dual_by_ball(cf);
        if (fast.values != slow.values) {
            detail = "ball oracle disagrees at instance " + std::to_string(i);
            return false;
        }
    }
    for (int i = 0; i < 10; ++i) {
        const int dim = 1 + i % 3;
        AffineCF cf = random_affine_cf(rng, dim, 6, 1);
        std::vector<Cell> fast = cf.cells;
        std::vector<Cell> slow = enumerate_cells_by_sign_scan(cf.arr);
        if (fast.size() != slow.size()) {
            detail = "sign scan count mismatch at instance " + std::to_string(i);
            return false;
        }
        for (std::size_t k = 0; k < fast.size(); ++k) {
            if (fast[k].signs != slow[k].signs || fast[k].dim != slow[k].dim) {
                detail = "sign scan cell mismatch at instance " + std::to_string(i);
                return false;
            }
            if (locate(cf.arr, fast, slow[k].sample) != k) {
                detail = "oracle sample locates to the wrong cell";
                return false;
            }
        }
    }
    for (int i = 0; i < 5; ++i) {
        AffineCF cf = random_compact_cf(rng, 2, 4, 3);
        AffineMap f = random_surjective_map(rng, 2, 1);
        EngineOptions eopts{opts.max_cells, 2, opts.seed + 1200 + static_cast<std::uint64_t>(i)};
        AffineCF pushed = pushforward(cf, f, eopts);
        std::mt19937_64 probe(opts.seed + 777 + static_cast<std::uint64_t>(i));
        for (std::size_t c = 0; c < pushed.cells.size(); ++c) {
            RatVector y = random_point_in_cell(pushed.arr, pushed.cells[c], probe);
            std::vector<AffineForm> eqs;
            for (int r = 0; r < f.dim_out(); ++r) {
                AffineForm e;
                e.linear = f.matrix[r];
                e.constant = f.translation[r] - y[r];
                eqs.push_back(std::move(e));
            }
            auto flat = flat_from_equalities(eqs, 2);
            if (!flat || fiber_integral(cf, *flat) != pushed.values[c]) {
                detail = "pushforward value differs from a fresh fiber integral";
                return false;
            }
        }
    }
    detail = "ball duality (20), sign-scan enumeration (10), fiber spot checks (5) all agree";
    return true;
}

}  // namespace

std::vector<CheckResult> run_acceptance_suite(const SuiteOptions& opts) {
    using Fn = std::function<bool(const SuiteOptions&, std::string&)>;
    struct Item {
        std::string name;
        double limit;
        Fn fn;
    };
    const std::vector<Item> items = {
        {"1d-integral-table", 1.0, crit_1d_table},
        {"chi-projective", 1.0, crit_chi_pn},
        {"duality-involution", 60.0, crit_involution},
        {"duality-pushforward", 60.0, crit_dual_pushforward},
        {"base-change-projection", 120.0, crit_base_change_projection},
        {"kernel-associativity", 120.0, crit_kernel_associativity},
        {"convolution-identities", 120.0, crit_convolution},
        {"gamma-idempotence", 120.0, crit_gamma_idempotent},
        {"euler-formula", 60.0, crit_euler_formula},
        {"radon-inversion", 300.0, crit_radon_inversion},
        {"r3-slice-corollary", 120.0, crit_slice_corollary},
        {"oracle-equivalence", 0.0, crit_oracles},
    };

    std::vector<CheckResult> results;
    for (const auto& item : items) {
        CheckResult r;
        r.name = item.name;
        const auto start = std::chrono::steady_clock::now();
        try {
            r.pass = item.fn(opts, r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.pass && item.limit > 0 && r.seconds > item.limit) {
            r.pass = false;
            r.detail += " (exceeded " + std::to_string(item.limit) + "s budget)";
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace eucalc
