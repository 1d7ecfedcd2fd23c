// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#include "eucalc/constructible.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "eucalc/errors.hpp"
#include "eucalc/parallel.hpp"

namespace eucalc {

namespace {

Int parity_term(Int value, int dim) { return (dim & 1) ? -value : value; }

std::mt19937_64 cell_rng(std::uint64_t seed, std::size_t idx) {
    return std::mt19937_64(seed * 0x9e3779b97f4a7c15ULL + 0xbf58476d1ce4e5b9ULL * (idx + 1));
}

}  // namespace

AffineCF make_cf(Arrangement arr, const std::vector<Int>& cell_values) {
    AffineCF cf;
    cf.arr = std::move(arr);
    cf.cells = enumerate_cells(cf.arr);
    if (cf.cells.size() != cell_values.size())
        throw InputError("make_cf: value count does not match cell count");
    cf.values = cell_values;
    return cf;
}

AffineCF constant_cf(int dim, Int value) {
    AffineCF cf;
    cf.arr = make_arrangement(dim, {});
    cf.cells = enumerate_cells(cf.arr);
    cf.values.assign(cf.cells.size(), value);
    return cf;
}

AffineCF zero_cf(int dim) { return constant_cf(dim, 0); }

AffineCF delta_cf(const RatVector& point) {
    const int n = static_cast<int>(point.size());
    PolyhedronSpec spec;
    spec.dim = n;
    for (int i = 0; i < n; ++i) {
        AffineForm f;
        f.linear = zero_vector(n);
        f.linear[i] = 1;
        f.constant = -point[i];
        spec.constraints.push_back({std::move(f), RelOp::EQ});
    }
    return indicator(spec);
}

AffineCF indicator(const PolyhedronSpec& spec, int max_cells) {
    // Degenerate (constant) constraints don't shape the arrangement: they
    // are either vacuous or force the empty set.
    struct Use {
        AffineForm norm;
        bool flipped;
        RelOp rel;
    };
    std::vector<Use> uses;
    for (const auto& c : spec.constraints) {
        if (c.form.dim() != spec.dim) throw InputError("indicator: constraint dimension mismatch");
        if (c.form.degenerate()) {
            const int s = sign_of(c.form.constant);
            const bool ok = (c.rel == RelOp::LT && s < 0) || (c.rel == RelOp::LE && s <= 0) ||
                            (c.rel == RelOp::EQ && s == 0) || (c.rel == RelOp::GE && s >= 0) ||
                            (c.rel == RelOp::GT && s > 0);
            if (!ok) return zero_cf(spec.dim);
            continue;
        }
        bool flipped = false;
        Use u{normalize_form(c.form, &flipped), flipped, c.rel};
        uses.push_back(std::move(u));
    }
    std::vector<AffineForm> forms;
    forms.reserve(uses.size());
    for (const auto& u : uses) forms.push_back(u.norm);
    AffineCF cf;
    cf.arr = make_arrangement(spec.dim, std::move(forms));
    cf.cells = enumerate_cells(cf.arr, max_cells);

    // Map each constraint to its (deduplicated) position in the arrangement.
    std::vector<std::size_t> pos(uses.size());
    for (std::size_t i = 0; i < uses.size(); ++i) {
        auto it = std::lower_bound(cf.arr.forms.begin(), cf.arr.forms.end(), uses[i].norm);
        pos[i] = static_cast<std::size_t>(it - cf.arr.forms.begin());
    }

    cf.values.assign(cf.cells.size(), 0);
    for (std::size_t ci = 0; ci < cf.cells.size(); ++ci) {
        bool inside = true;
        for (std::size_t i = 0; i < uses.size() && inside; ++i) {
            int s = cf.cells[ci].signs[pos[i]];
            if (uses[i].flipped) s = -s;
            switch (uses[i].rel) {
                case RelOp::LT: inside = s < 0; break;
                case RelOp::LE: inside = s <= 0; break;
                case RelOp::EQ: inside = s == 0; break;
                case RelOp::GE: inside = s >= 0; break;
                case RelOp::GT: inside = s > 0; break;
            }
        }
        cf.values[ci] = inside ? 1 : 0;
    }
    return cf;
}

Int evaluate(const AffineCF& cf, const RatVector& point) {
    return cf.values[locate(cf.arr, cf.cells, point)];
}

std::pair<AffineCF, AffineCF> refine_common(const AffineCF& a, const AffineCF& b, int max_cells) {
    if (a.dim() != b.dim()) throw InputError("refine_common: dimension mismatch");
    AffineCF ra, rb;
    ra.arr = merge_arrangements(a.arr, b.arr);
    ra.cells = enumerate_cells(ra.arr, max_cells);
    rb.arr = ra.arr;
    rb.cells = ra.cells;
    ra.values.resize(ra.cells.size());
    rb.values.resize(ra.cells.size());
    parallel_for(ra.cells.size(), [&](std::size_t i) {
        ra.values[i] = evaluate(a, ra.cells[i].sample);
        rb.values[i] = evaluate(b, ra.cells[i].sample);
    });
    return {std::move(ra), std::move(rb)};
}

AffineCF add(const AffineCF& a, const AffineCF& b, int max_cells) {
    auto [ra, rb] = refine_common(a, b, max_cells);
    for (std::size_t i = 0; i < ra.values.size(); ++i) ra.values[i] += rb.values[i];
    return std::move(ra);
}

AffineCF scale(const AffineCF& a, Int c) {
    AffineCF out = a;
    for (auto& v : out.values) v *= c;
    return out;
}

AffineCF multiply(const AffineCF& a, const AffineCF& b, int max_cells) {
    auto [ra, rb] = refine_common(a, b, max_cells);
    for (std::size_t i = 0; i < ra.values.size(); ++i) ra.values[i] *= rb.values[i];
    return std::move(ra);
}

bool cf_equal(const AffineCF& a, const AffineCF& b, int max_cells) {
    if (a.dim() != b.dim()) return false;
    if (a.arr.forms == b.arr.forms) return a.values == b.values;
    auto [ra, rb] = refine_common(a, b, max_cells);
    return ra.values == rb.values;
}

AffineCF external_product(const AffineCF& a, const AffineCF& b, int max_cells) {
    const int m = a.dim(), n = b.dim();
    std::vector<AffineForm> lifted;
    lifted.reserve(a.arr.form_count() + b.arr.form_count());
    for (const auto& f : a.arr.forms) {
        AffineForm g;
        g.linear = f.linear;
        g.linear.resize(m + n, Rational(0));
        g.constant = f.constant;
        lifted.push_back(std::move(g));
    }
    for (const auto& f : b.arr.forms) {
        AffineForm g;
        g.linear = zero_vector(m + n);
        for (int j = 0; j < n; ++j) g.linear[m + j] = f.linear[j];
        g.constant = f.constant;
        lifted.push_back(std::move(g));
    }
    AffineCF out;
    out.arr = make_arrangement(m + n, lifted);
    if (out.arr.form_count() != lifted.size())
        throw InternalError("external_product: lifted forms collided");

    // Positions of the lifted forms in the sorted merged list.
    std::vector<std::size_t> pos(lifted.size());
    for (std::size_t i = 0; i < lifted.size(); ++i) {
        auto it = std::lower_bound(out.arr.forms.begin(), out.arr.forms.end(), lifted[i]);
        pos[i] = static_cast<std::size_t>(it - out.arr.forms.begin());
    }

    const std::size_t count = a.cells.size() * b.cells.size();
    if (count > static_cast<std::size_t>(max_cells))
        throw ResourceError("cell budget exceeded: " + std::to_string(count) + " cells (max " +
                            std::to_string(max_cells) + ")");
    out.cells.reserve(count);
    out.values.reserve(count);
    for (std::size_t i = 0; i < a.cells.size(); ++i)
        for (std::size_t j = 0; j < b.cells.size(); ++j) {
            Cell c;
            c.signs.assign(lifted.size(), 0);
            for (std::size_t k = 0; k < a.arr.form_count(); ++k)
                c.signs[pos[k]] = a.cells[i].signs[k];
            for (std::size_t k = 0; k < b.arr.form_count(); ++k)
                c.signs[pos[a.arr.form_count() + k]] = b.cells[j].signs[k];
            c.dim = a.cells[i].dim + b.cells[j].dim;
            c.sample = a.cells[i].sample;
            c.sample.insert(c.sample.end(), b.cells[j].sample.begin(), b.cells[j].sample.end());
            out.cells.push_back(std::move(c));
            out.values.push_back(a.values[i] * b.values[j]);
        }

    std::vector<std::size_t> order(out.cells.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return out.cells[x].signs < out.cells[y].signs;
    });
    AffineCF sorted;
    sorted.arr = std::move(out.arr);
    sorted.cells.reserve(out.cells.size());
    sorted.values.reserve(out.values.size());
    for (std::size_t i : order) {
        sorted.cells.push_back(std::move(out.cells[i]));
        sorted.values.push_back(out.values[i]);
    }
    return sorted;
}

Int integrate(const AffineCF& cf) {
    Int acc = 0;
    for (std::size_t i = 0; i < cf.cells.size(); ++i) acc += parity_term(cf.values[i], cf.cells[i].dim);
    return acc;
}

AffineCF dual(const AffineCF& cf) {
    AffineCF out = cf;
    parallel_for(cf.cells.size(), [&](std::size_t d) {
        Int acc = 0;
        for (std::size_t c = 0; c < cf.cells.size(); ++c)
            if (face_leq(cf.cells[d].signs, cf.cells[c].signs))
                acc += parity_term(cf.values[c], cf.cells[c].dim);
        out.values[d] = acc;
    });
    return out;
}

Int integrate_np(const AffineCF& cf) { return integrate(dual(cf)); }

AffineCF pullback(const AffineCF& cf, const AffineMap& map, int max_cells) {
    if (map.dim_out() != cf.dim()) throw InputError("pullback: dimension mismatch");
    std::vector<AffineForm> pulled;
    for (const auto& f : cf.arr.forms) {
        AffineForm g = pull_form(f, map);
        if (!g.degenerate()) pulled.push_back(std::move(g));
    }
    AffineCF out;
    out.arr = make_arrangement(map.dim_in(), std::move(pulled));
    out.cells = enumerate_cells(out.arr, max_cells);
    out.values.resize(out.cells.size());
    parallel_for(out.cells.size(), [&](std::size_t i) {
        out.values[i] = evaluate(cf, map.apply(out.cells[i].sample));
    });
    return out;
}

namespace {

// All nonempty intersections of subsets of the arrangement's hyperplanes,
// including the whole space, deduplicated by their affine hull.
std::vector<Flat> arrangement_flats(const Arrangement& arr) {
    std::vector<Flat> flats;
    std::set<std::string> seen;

    auto key_of = [&](const Flat& flat) {
        // Canonical key: reduced equality system of the affine hull.
        LinearSolution normals = solve_linear(
            [&] {
                std::vector<AffineForm> sys;
                for (const auto& b : flat.basis) sys.push_back(AffineForm{b, Rational(0)});
                return sys;
            }(),
            arr.dim);
        // The kernel basis is canonical for the direction span (reduced
        // echelon form), so the sorted normalized equality forms identify
        // the flat uniquely.
        std::vector<AffineForm> eqs;
        for (const auto& nu : normals.kernel) {
            AffineForm f;
            f.linear = nu;
            f.constant = -dot(nu, flat.point);
            eqs.push_back(normalize_form(f));
        }
        std::sort(eqs.begin(), eqs.end());
        std::string key;
        for (const auto& f : eqs) {
            for (const auto& a : f.linear) key += a.get_str() + ",";
            key += f.constant.get_str() + ";";
        }
        return key;
    };

    Flat whole;
    whole.point = zero_vector(arr.dim);
    for (int i = 0; i < arr.dim; ++i) {
        RatVector e = zero_vector(arr.dim);
        e[i] = 1;
        whole.basis.push_back(std::move(e));
    }
    flats.push_back(whole);
    seen.insert(key_of(whole));

    for (std::size_t i = 0; i < flats.size(); ++i) {
        if (flats[i].dim() == 0) continue;
        const Flat flat = flats[i];  // copy: flats grows below
        const AffineMap chart = flat.chart();
        for (const auto& h : arr.forms) {
            AffineForm g = pull_form(h, chart);
            if (g.degenerate()) continue;
            LinearSolution sub = solve_linear({g}, flat.dim());
            if (!sub.consistent) continue;
            Flat cut;
            cut.point = chart.apply(sub.point);
            for (const auto& d : sub.kernel) {
                RatVector dir = zero_vector(arr.dim);
                for (int c = 0; c < flat.dim(); ++c)
                    for (int r = 0; r < arr.dim; ++r) dir[r] += d[c] * flat.basis[c][r];
                cut.basis.push_back(std::move(dir));
            }
            std::string key = key_of(cut);
            if (seen.insert(std::move(key)).second) flats.push_back(std::move(cut));
        }
    }
    return flats;
}

}  // namespace

Int fiber_integral(const AffineCF& cf, const Flat& flat, int max_cells) {
    Restriction res = restrict_to_flat(cf.arr, flat, false);
    std::vector<Cell> cells = enumerate_cells(res.arr, max_cells);
    Int acc = 0;
    for (const auto& c : cells)
        acc += parity_term(evaluate(cf, res.chart.apply(c.sample)), c.dim);
    return acc;
}

AffineCF pushforward(const AffineCF& cf, const AffineMap& map, const EngineOptions& opts) {
    const int m = cf.dim(), k = map.dim_out();
    if (map.dim_in() != m) throw InputError("pushforward: dimension mismatch");
    if (rank(map.matrix) != k)
        throw InputError("pushforward: map must have surjective linear part");

    // Candidate walls: images of source flats that map onto hyperplanes.
    std::vector<AffineForm> walls;
    for (const auto& flat : arrangement_flats(cf.arr)) {
        std::vector<RatVector> image_dirs;
        image_dirs.reserve(flat.basis.size());
        for (const auto& b : flat.basis) {
            RatVector d = zero_vector(k);
            for (int r = 0; r < k; ++r) d[r] = dot(map.matrix[r], b);
            image_dirs.push_back(std::move(d));
        }
        if (rank(image_dirs) != k - 1) continue;
        LinearSolution normals = solve_linear(
            [&] {
                std::vector<AffineForm> sys;
                for (const auto& d : image_dirs) sys.push_back(AffineForm{d, Rational(0)});
                return sys;
            }(),
            k);
        if (normals.kernel.size() != 1) continue;
        AffineForm wall;
        wall.linear = normals.kernel[0];
        wall.constant = -dot(wall.linear, map.apply(flat.point));
        walls.push_back(std::move(wall));
    }

    AffineCF out;
    out.arr = make_arrangement(k, std::move(walls));
    out.cells = enumerate_cells(out.arr, opts.max_cells);
    out.values.resize(out.cells.size());

    auto fiber_at = [&](const RatVector& y) {
        std::vector<AffineForm> eqs;
        eqs.reserve(k);
        for (int r = 0; r < k; ++r) {
            AffineForm f;
            f.linear = map.matrix[r];
            f.constant = map.translation[r] - y[r];
            eqs.push_back(std::move(f));
        }
        auto flat = flat_from_equalities(eqs, m);
        if (!flat) throw InternalError("pushforward: empty fiber under a surjective map");
        return fiber_integral(cf, *flat, opts.max_cells);
    };

    parallel_for(out.cells.size(), [&](std::size_t i) {
        const Int v = fiber_at(out.cells[i].sample);
        auto rng = cell_rng(opts.seed, i);
        for (int rep = 0; rep < opts.oversample; ++rep) {
            RatVector p = random_point_in_cell(out.arr, out.cells[i], rng);
            const Int w = fiber_at(p);
            if (w != v)
                throw InternalError("pushforward: wall set insufficient at output cell " +
                                    std::to_string(i) + ": fiber integrals " + std::to_string(v) +
                                    " vs " + std::to_string(w));
        }
        out.values[i] = v;
    });
    return simplify(out, opts.max_cells);
}

AffineCF pushforward_np(const AffineCF& cf, const AffineMap& map, const EngineOptions& opts) {
    return dual(pushforward(dual(cf), map, opts));
}

AffineCF hom_cf(const AffineCF& a, const AffineCF& b, int max_cells) {
    return dual(multiply(dual(b), a, max_cells));
}

AffineCF epb(const AffineMap& map, const AffineCF& b, int max_cells) {
    return dual(pullback(dual(b), map, max_cells));
}

namespace {

AffineMap addition_map(int n) {
    AffineMap s;
    s.matrix.assign(n, zero_vector(2 * n));
    for (int i = 0; i < n; ++i) {
        s.matrix[i][i] = 1;
        s.matrix[i][n + i] = 1;
    }
    s.translation = zero_vector(n);
    return s;
}

}  // namespace

AffineCF convolve(const AffineCF& a, const AffineCF& b, const EngineOptions& opts) {
    if (a.dim() != b.dim()) throw InputError("convolve: dimension mismatch");
    return pushforward(external_product(a, b, opts.max_cells), addition_map(a.dim()), opts);
}

AffineCF convolve_np(const AffineCF& a, const AffineCF& b, const EngineOptions& opts) {
    if (a.dim() != b.dim()) throw InputError("convolve_np: dimension mismatch");
    return pushforward_np(external_product(a, b, opts.max_cells), addition_map(a.dim()), opts);
}

AffineCF gamma_project(const AffineCF& cf, const PolyhedronSpec& gamma, const EngineOptions& opts) {
    const int n = cf.dim();
    if (gamma.dim != n) throw InputError("gamma_project: cone dimension mismatch");
    std::vector<AffineForm> outward;  // gamma = {x : a.x >= 0 for all a}
    for (const auto& c : gamma.constraints) {
        if (c.form.degenerate()) throw InputError("gamma_project: degenerate cone constraint");
        if (c.form.constant != 0)
            throw InputError("gamma_project: cone constraints must be homogeneous");
        if (c.rel == RelOp::LT || c.rel == RelOp::GT || c.rel == RelOp::EQ)
            throw InputError("gamma_project: cone must be closed and full-dimensional (use <= or >=)");
        AffineForm a = c.form;
        if (c.rel == RelOp::LE)
            for (auto& v : a.linear) v = -v;
        outward.push_back(normalize_form(a));
    }
    std::sort(outward.begin(), outward.end());
    outward.erase(std::unique(outward.begin(), outward.end()), outward.end());

    // Drop implied constraints.
    for (std::size_t i = 0; i < outward.size();) {
        std::vector<Constraint> probe;
        for (std::size_t j = 0; j < outward.size(); ++j) {
            if (j == i) continue;
            probe.push_back({outward[j], Rel::GE});
        }
        AffineForm neg = outward[i];
        for (auto& v : neg.linear) v = -v;
        probe.push_back({std::move(neg), Rel::GT});
        if (!find_point(n, probe))
            outward.erase(outward.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }

    {
        std::vector<RatVector> rows;
        for (const auto& a : outward) rows.push_back(a.linear);
        if (rank(std::move(rows)) != n)
            throw InputError("gamma_project: cone contains a line (not proper)");
        std::vector<Constraint> interior;
        for (const auto& a : outward) interior.push_back({a, Rel::GT});
        if (!find_point(n, interior))
            throw InputError("gamma_project: cone has empty interior");
    }

    PolyhedronSpec anti;  // -gamma = {x : a.x <= 0}
    anti.dim = n;
    for (const auto& a : outward) anti.constraints.push_back({a, RelOp::LE});
    return convolve_np(cf, indicator(anti, opts.max_cells), opts);
}

AffineCF compose_kernels(const AffineCF& lambda12, int n1, int n2, const AffineCF& lambda23,
                         int n3, const EngineOptions& opts) {
    if (lambda12.dim() != n1 + n2 || lambda23.dim() != n2 + n3)
        throw InputError("compose_kernels: dimension mismatch");
    const int total = n1 + n2 + n3;
    std::vector<int> c12(n1 + n2), c23(n2 + n3), c13(n1 + n3);
    for (int i = 0; i < n1 + n2; ++i) c12[i] = i;
    for (int i = 0; i < n2 + n3; ++i) c23[i] = n1 + i;
    for (int i = 0; i < n1; ++i) c13[i] = i;
    for (int i = 0; i < n3; ++i) c13[n1 + i] = n1 + n2 + i;
    AffineCF p12 = pullback(lambda12, AffineMap::coordinate_projection(total, c12), opts.max_cells);
    AffineCF p23 = pullback(lambda23, AffineMap::coordinate_projection(total, c23), opts.max_cells);
    AffineCF prod = multiply(p12, p23, opts.max_cells);
    return pushforward(prod, AffineMap::coordinate_projection(total, c13), opts);
}

AffineCF simplify(const AffineCF& cf, int max_cells) {
    const std::size_t nf = cf.arr.form_count();
    if (nf == 0) return cf;
    std::vector<bool> dropped(nf, false);
    std::size_t n_dropped = 0;

    for (std::size_t fi = 0; fi < nf; ++fi) {
        std::map<SignVector, Int> groups;
        bool ok = true;
        for (std::size_t ci = 0; ci < cf.cells.size() && ok; ++ci) {
            SignVector key;
            key.reserve(nf - n_dropped - 1);
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
    AffineCF out;
    out.arr = cf.arr.central ? make_central_arrangement(cf.dim(), std::move(kept))
                             : make_arrangement(cf.dim(), std::move(kept));
    out.cells = enumerate_cells(out.arr, max_cells);
    out.values.resize(out.cells.size());
    parallel_for(out.cells.size(), [&](std::size_t i) {
        out.values[i] = evaluate(cf, out.cells[i].sample);
    });
    return out;
}

bool has_compact_support(const AffineCF& cf) {
    for (std::size_t i = 0; i < cf.cells.size(); ++i)
        if (cf.values[i] != 0 && !cell_bounded(cf.arr, cf.cells[i])) return false;
    return true;
}

}  // namespace eucalc
