// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#include "eucalc/arrangement.hpp"

#include <algorithm>

#include "eucalc/errors.hpp"
#include "eucalc/parallel.hpp"

namespace eucalc {

namespace {

std::vector<AffineForm> canonical_forms(int dim, std::vector<AffineForm> forms) {
    std::vector<AffineForm> out;
    out.reserve(forms.size());
    for (auto& f : forms) {
        if (f.dim() != dim) throw InputError("arrangement: form dimension mismatch");
        AffineForm n = normalize_form(f);
        if (n.degenerate()) throw InputError("arrangement: degenerate form (zero linear part)");
        out.push_back(std::move(n));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

AffineForm coordinate_form(int dim, int i) {
    AffineForm f;
    f.linear = zero_vector(dim);
    f.linear[i] = 1;
    return f;
}

}  // namespace

Arrangement make_arrangement(int dim, std::vector<AffineForm> forms) {
    Arrangement arr;
    arr.dim = dim;
    arr.forms = canonical_forms(dim, std::move(forms));
    arr.central = false;
    return arr;
}

Arrangement make_central_arrangement(int ambient_dim, std::vector<AffineForm> forms) {
    for (const auto& f : forms)
        if (f.constant != 0) throw InputError("central arrangement: form has nonzero constant");
    for (int i = 0; i < ambient_dim; ++i) forms.push_back(coordinate_form(ambient_dim, i));
    Arrangement arr;
    arr.dim = ambient_dim;
    arr.forms = canonical_forms(ambient_dim, std::move(forms));
    arr.central = true;
    return arr;
}

Arrangement merge_arrangements(const Arrangement& a, const Arrangement& b) {
    if (a.dim != b.dim) throw InputError("merge_arrangements: dimension mismatch");
    if (a.central != b.central) throw InputError("merge_arrangements: mixed central/affine");
    std::vector<AffineForm> forms = a.forms;
    forms.insert(forms.end(), b.forms.begin(), b.forms.end());
    return a.central ? make_central_arrangement(a.dim, [&] {
        std::vector<AffineForm> fs = std::move(forms);
        return fs;
    }())
                     : make_arrangement(a.dim, std::move(forms));
}

SignVector signs_at(const Arrangement& arr, const RatVector& point) {
    SignVector s(arr.forms.size());
    for (std::size_t i = 0; i < arr.forms.size(); ++i)
        s[i] = static_cast<Sign>(arr.forms[i].sign_at(point));
    return s;
}

namespace {

// Largest-step walk: p + tau*d stays inside the open region cut out by the
// strict constraints that currently hold at p; tau is half the distance to
// the nearest wall along d (1 if unobstructed).
RatVector step_within(const std::vector<const AffineForm*>& strict_forms,
                      const std::vector<int>& strict_signs, const RatVector& p,
                      const RatVector& d) {
    Rational tau(1);
    bool bounded = false;
    for (std::size_t i = 0; i < strict_forms.size(); ++i) {
        Rational slope(0);
        const auto& lin = strict_forms[i]->linear;
        for (std::size_t j = 0; j < lin.size(); ++j) slope += lin[j] * d[j];
        slope *= strict_signs[i];
        if (slope >= 0) continue;
        Rational value = strict_forms[i]->eval(p) * strict_signs[i];
        Rational bound = value / -slope;
        if (!bounded || bound < tau) {
            tau = bound;
            bounded = true;
        }
    }
    if (bounded) tau /= 2;
    RatVector q(p);
    for (std::size_t j = 0; j < q.size(); ++j) q[j] += tau * d[j];
    return q;
}

int cell_dimension(const Arrangement& arr, const SignVector& signs) {
    std::vector<RatVector> zero_rows;
    for (std::size_t i = 0; i < signs.size(); ++i)
        if (signs[i] == 0) zero_rows.push_back(arr.forms[i].linear);
    return arr.dim - rank(std::move(zero_rows));
}

void sort_cells(std::vector<Cell>& cells) {
    std::sort(cells.begin(), cells.end(),
              [](const Cell& a, const Cell& b) { return a.signs < b.signs; });
}

void check_budget(std::size_t count, int max_cells) {
    if (count > static_cast<std::size_t>(max_cells))
        throw ResourceError("cell budget exceeded: " + std::to_string(count) + " cells (max " +
                            std::to_string(max_cells) + ")");
}

// On a line the cells are just the sorted form roots and the intervals
// between them; no feasibility work needed.
std::vector<Cell> enumerate_line(const Arrangement& arr, int max_cells) {
    std::vector<Rational> roots;
    roots.reserve(arr.forms.size());
    for (const auto& f : arr.forms) roots.push_back(-f.constant / f.linear[0]);
    std::vector<Rational> sorted = roots;
    std::sort(sorted.begin(), sorted.end());
    check_budget(2 * sorted.size() + 1, max_cells);

    std::vector<Cell> cells;
    auto emit = [&](RatVector sample, int dim) {
        Cell c;
        c.signs.resize(arr.forms.size());
        for (std::size_t i = 0; i < arr.forms.size(); ++i) {
            const int s = cmp(sample[0], roots[i]);
            c.signs[i] = static_cast<Sign>(s);
        }
        c.dim = dim;
        c.sample = std::move(sample);
        cells.push_back(std::move(c));
    };
    if (sorted.empty()) {
        emit(RatVector{Rational(0)}, 1);
    } else {
        emit(RatVector{sorted.front() - 1}, 1);
        for (std::size_t k = 0; k < sorted.size(); ++k) {
            emit(RatVector{sorted[k]}, 0);
            if (k + 1 < sorted.size())
                emit(RatVector{(sorted[k] + sorted[k + 1]) / 2}, 1);
        }
        emit(RatVector{sorted.back() + 1}, 1);
    }
    sort_cells(cells);
    return cells;
}

// Central arrangements in the plane: rays and sectors around the origin in
// exact angular order.
std::vector<Cell> enumerate_central_plane(const Arrangement& arr, int max_cells) {
    std::vector<RatVector> rays;
    for (const auto& f : arr.forms) {
        rays.push_back(RatVector{-f.linear[1], f.linear[0]});
        rays.push_back(RatVector{f.linear[1], -f.linear[0]});
    }
    auto upper = [](const RatVector& d) { return d[1] > 0 || (d[1] == 0 && d[0] > 0); };
    std::sort(rays.begin(), rays.end(), [&](const RatVector& a, const RatVector& b) {
        const bool ua = upper(a), ub = upper(b);
        if (ua != ub) return ua;
        return sign_of(a[0] * b[1] - a[1] * b[0]) > 0;  // a strictly before b
    });
    rays.erase(std::unique(rays.begin(), rays.end(),
                           [](const RatVector& a, const RatVector& b) {
                               return a[0] * b[1] - a[1] * b[0] == 0 && dot(a, b) > 0;
                           }),
               rays.end());
    check_budget(2 * rays.size(), max_cells);

    std::vector<Cell> cells;
    auto emit = [&](RatVector sample, int dim) {
        Cell c;
        c.signs = signs_at(arr, sample);
        c.dim = dim;
        c.sample = std::move(sample);
        cells.push_back(std::move(c));
    };
    for (std::size_t k = 0; k < rays.size(); ++k) {
        emit(rays[k], 1);
        const RatVector& a = rays[k];
        const RatVector& b = rays[(k + 1) % rays.size()];
        RatVector mid{a[0] + b[0], a[1] + b[1]};
        if (a[0] * b[1] - a[1] * b[0] == 0) mid = RatVector{-a[1], a[0]};  // antipodal pair
        emit(std::move(mid), 2);
    }
    sort_cells(cells);
    return cells;
}

}  // namespace

std::vector<Cell> enumerate_cells(const Arrangement& arr, int max_cells) {
    if (arr.dim == 1 && !arr.central && !arr.forms.empty()) return enumerate_line(arr, max_cells);
    if (arr.dim == 2 && arr.central && !arr.forms.empty())
        return enumerate_central_plane(arr, max_cells);
    std::vector<Cell> cells;
    cells.push_back(Cell{{}, arr.dim, zero_vector(arr.dim)});

    for (std::size_t fi = 0; fi < arr.forms.size(); ++fi) {
        const AffineForm& h = arr.forms[fi];
        std::vector<std::vector<Cell>> split(cells.size());

        parallel_for(cells.size(), [&](std::size_t ci) {
            const Cell& cell = cells[ci];
            std::vector<Constraint> base;
            base.reserve(fi + 1);
            std::vector<const AffineForm*> strict_forms;
            std::vector<int> strict_signs;
            for (std::size_t k = 0; k < fi; ++k) {
                if (cell.signs[k] == 0) {
                    base.push_back({arr.forms[k], Rel::EQ});
                } else {
                    AffineForm g = arr.forms[k];
                    if (cell.signs[k] < 0) {
                        for (auto& a : g.linear) a = -a;
                        g.constant = -g.constant;
                    }
                    base.push_back({std::move(g), Rel::GT});
                    strict_forms.push_back(&arr.forms[k]);
                    strict_signs.push_back(cell.signs[k]);
                }
            }

            const int s = h.sign_at(cell.sample);
            auto emit = [&](Sign sign, RatVector sample) {
                Cell c;
                c.signs = cell.signs;
                c.signs.push_back(sign);
                c.sample = std::move(sample);
                split[ci].push_back(std::move(c));
            };

            if (s != 0) {
                auto on = base;
                on.push_back({h, Rel::EQ});
                auto w = find_point(arr.dim, on);
                if (!w) {
                    emit(static_cast<Sign>(s), cell.sample);
                } else {
                    // Both open sides are nonempty: h vanishes at *w inside
                    // the relatively open cell but not at the sample.
                    RatVector d(w->size());
                    for (std::size_t j = 0; j < d.size(); ++j) d[j] = (*w)[j] - cell.sample[j];
                    RatVector far = step_within(strict_forms, strict_signs, *w, d);
                    if (s > 0) {
                        emit(-1, std::move(far));
                        emit(0, *w);
                        emit(+1, cell.sample);
                    } else {
                        emit(-1, cell.sample);
                        emit(0, *w);
                        emit(+1, std::move(far));
                    }
                }
            } else {
                auto pos = base;
                pos.push_back({h, Rel::GT});
                auto w = find_point(arr.dim, pos);
                if (!w) {
                    emit(0, cell.sample);  // h vanishes identically on the cell
                } else {
                    RatVector d(w->size());
                    for (std::size_t j = 0; j < d.size(); ++j) d[j] = cell.sample[j] - (*w)[j];
                    RatVector neg = step_within(strict_forms, strict_signs, cell.sample, d);
                    emit(-1, std::move(neg));
                    emit(0, cell.sample);
                    emit(+1, *w);
                }
            }
        });

        std::vector<Cell> next;
        next.reserve(cells.size() + cells.size() / 2);
        for (auto& chunk : split)
            for (auto& c : chunk) next.push_back(std::move(c));
        cells = std::move(next);
        if (static_cast<int>(cells.size()) > max_cells)
            throw ResourceError("cell budget exceeded: " + std::to_string(cells.size()) +
                                " cells (max " + std::to_string(max_cells) + ")");
    }

    if (arr.central) {
        std::erase_if(cells, [](const Cell& c) {
            return std::all_of(c.signs.begin(), c.signs.end(), [](Sign s) { return s == 0; });
        });
    }

    parallel_for(cells.size(), [&](std::size_t i) { cells[i].dim = cell_dimension(arr, cells[i].signs); });
    std::sort(cells.begin(), cells.end(),
              [](const Cell& a, const Cell& b) { return a.signs < b.signs; });
    return cells;
}

std::size_t locate(const Arrangement& arr, const std::vector<Cell>& cells, const RatVector& point) {
    if (static_cast<int>(point.size()) != arr.dim) throw InputError("locate: dimension mismatch");
    SignVector s = signs_at(arr, point);
    if (arr.central && std::all_of(s.begin(), s.end(), [](Sign v) { return v == 0; }))
        throw InputError("locate: the origin is not a point of a central arrangement's cell set");
    auto it = std::lower_bound(cells.begin(), cells.end(), s,
                               [](const Cell& c, const SignVector& v) { return c.signs < v; });
    if (it == cells.end() || it->signs != s) throw InternalError("locate: sign vector not enumerated");
    return static_cast<std::size_t>(it - cells.begin());
}

bool face_leq(const SignVector& d, const SignVector& c) {
    if (d.size() != c.size()) throw InputError("face_leq: sign length mismatch");
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0 && d[i] != c[i]) return false;
    return true;
}

FacePoset face_poset(const std::vector<Cell>& cells) {
    FacePoset p;
    p.leq.assign(cells.size(), std::vector<bool>(cells.size(), false));
    for (std::size_t d = 0; d < cells.size(); ++d)
        for (std::size_t c = 0; c < cells.size(); ++c)
            p.leq[d][c] = face_leq(cells[d].signs, cells[c].signs);
    return p;
}

std::size_t antipodal_index(const Arrangement& arr, const std::vector<Cell>& cells, std::size_t idx) {
    if (!arr.central) throw InputError("antipodal_index: arrangement is not central");
    SignVector neg = cells[idx].signs;
    for (auto& s : neg) s = static_cast<Sign>(-s);
    auto it = std::lower_bound(cells.begin(), cells.end(), neg,
                               [](const Cell& c, const SignVector& v) { return c.signs < v; });
    if (it == cells.end() || it->signs != neg)
        throw InternalError("antipodal_index: negated sign vector not found");
    const std::size_t j = static_cast<std::size_t>(it - cells.begin());
    if (j == idx) throw InternalError("antipodal_index: self-antipodal cell (salience violated)");
    return j;
}

bool is_pair_representative(const Cell& cell) {
    for (Sign s : cell.signs) {
        if (s > 0) return true;
        if (s < 0) return false;
    }
    return false;  // all-zero vector never occurs among central cells
}

bool cell_bounded(const Arrangement& arr, const Cell& cell) {
    if (cell.dim == 0) return true;
    // Unbounded iff the closure's recession cone contains a nonzero vector;
    // probe with d_j = +-1 for each coordinate.
    std::vector<Constraint> cone;
    cone.reserve(arr.forms.size() + 1);
    for (std::size_t i = 0; i < arr.forms.size(); ++i) {
        AffineForm g;
        g.linear = arr.forms[i].linear;
        if (cell.signs[i] < 0)
            for (auto& a : g.linear) a = -a;
        cone.push_back({std::move(g), cell.signs[i] == 0 ? Rel::EQ : Rel::GE});
    }
    for (int j = 0; j < arr.dim; ++j) {
        for (int s : {+1, -1}) {
            AffineForm fix;
            fix.linear = zero_vector(arr.dim);
            fix.linear[j] = 1;
            fix.constant = -s;  // d_j = s
            cone.push_back({fix, Rel::EQ});
            const bool feasible = find_point(arr.dim, cone).has_value();
            cone.pop_back();
            if (feasible) return false;
        }
    }
    return true;
}

RatVector random_point_in_cell(const Arrangement& arr, const Cell& cell, std::mt19937_64& rng) {
    std::vector<RatVector> zero_rows;
    std::vector<const AffineForm*> strict_forms;
    std::vector<int> strict_signs;
    for (std::size_t i = 0; i < arr.forms.size(); ++i) {
        if (cell.signs[i] == 0) {
            AffineForm h;
            h.linear = arr.forms[i].linear;
            zero_rows.push_back(h.linear);
        } else {
            strict_forms.push_back(&arr.forms[i]);
            strict_signs.push_back(cell.signs[i]);
        }
    }
    LinearSolution hom = solve_linear(
        [&] {
            std::vector<AffineForm> sys;
            for (auto& r : zero_rows) sys.push_back(AffineForm{r, Rational(0)});
            return sys;
        }(),
        arr.dim);
    if (hom.kernel.empty()) return cell.sample;

    std::uniform_int_distribution<int> coeff(-3, 3);
    RatVector point = cell.sample;
    for (int hop = 0; hop < 2; ++hop) {
        RatVector d = zero_vector(arr.dim);
        bool nonzero = false;
        while (!nonzero) {
            for (const auto& k : hom.kernel) {
                const int c = coeff(rng);
                if (c == 0) continue;
                nonzero = true;
                for (int j = 0; j < arr.dim; ++j) d[j] += c * k[j];
            }
        }
        point = step_within(strict_forms, strict_signs, point, d);
    }
    return point;
}

Restriction restrict_to_flat(const Arrangement& arr, const Flat& flat, bool make_central) {
    if (flat.ambient_dim() != arr.dim) throw InputError("restrict_to_flat: dimension mismatch");
    {
        std::vector<RatVector> rows = flat.basis;
        if (rank(std::move(rows)) != flat.dim())
            throw InputError("restrict_to_flat: degenerate flat description");
    }
    Restriction out;
    out.chart = flat.chart();
    out.fate.reserve(arr.forms.size());
    std::vector<AffineForm> kept;
    for (const auto& f : arr.forms) {
        AffineForm g = pull_form(f, out.chart);
        if (g.degenerate()) {
            out.fate.push_back(g.constant == 0 ? FormOnFlat::ContainsFlat : FormOnFlat::MissesFlat);
            continue;
        }
        out.fate.push_back(FormOnFlat::Kept);
        kept.push_back(std::move(g));
    }
    if (make_central) {
        for (const auto& v : flat.point)
            if (v != 0) throw InputError("restrict_to_flat: central restriction needs a flat through 0");
        out.arr = make_central_arrangement(flat.dim(), std::move(kept));
    } else {
        out.arr = make_arrangement(flat.dim(), std::move(kept));
    }
    return out;
}

}  // namespace eucalc
