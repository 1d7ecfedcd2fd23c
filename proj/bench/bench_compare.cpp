// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

// Timing comparison of the OpenMP kernels against the serial reference path
// on representative workloads. Both paths must produce identical results;
// that is asserted here as well, so the benchmark doubles as a smoke test.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "eucalc/parallel.hpp"
#include "eucalc/suite.hpp"

using namespace eucalc;

namespace {

double time_of(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Workload {
    std::string name;
    std::function<void()> run;
    std::function<bool()> agree;  // serial vs parallel results identical
};

}  // namespace

int main() {
    std::mt19937_64 rng(7);

    // Workload inputs, built once.
    AffineCF big2d = random_affine_cf(rng, 2, 10, 4);
    AffineCF big3d = random_affine_cf(rng, 3, 8, 4);
    AffineCF compact2d = random_compact_cf(rng, 2, 5, 4);
    AffineMap proj21 = AffineMap::coordinate_projection(2, {0});
    ProjectiveCF tri = embed_eim([&] {
        PolyhedronSpec spec;
        spec.dim = 2;
        AffineForm fx{RatVector{Rational(1), Rational(0)}, Rational(0)};
        AffineForm fy{RatVector{Rational(0), Rational(1)}, Rational(0)};
        AffineForm diag{RatVector{Rational(-1), Rational(-1)}, Rational(2)};
        spec.constraints.push_back({fx, RelOp::GE});
        spec.constraints.push_back({fy, RelOp::GE});
        spec.constraints.push_back({diag, RelOp::GE});
        return indicator(spec);
    }());

    std::vector<Workload> workloads;
    workloads.push_back({"enumerate 8-plane arrangement in R^3",
                         [&] { enumerate_cells(big3d.arr); },
                         [&] {
                             set_parallel(false);
                             auto a = enumerate_cells(big3d.arr);
                             set_parallel(true);
                             auto b = enumerate_cells(big3d.arr);
                             return a.size() == b.size();
                         }});
    workloads.push_back({"duality on a 10-line planar function",
                         [&] { dual(big2d); },
                         [&] {
                             set_parallel(false);
                             auto a = dual(big2d);
                             set_parallel(true);
                             auto b = dual(big2d);
                             return a.values == b.values;
                         }});
    workloads.push_back({"pushforward R^2 -> R^1",
                         [&] { pushforward(compact2d, proj21); },
                         [&] {
                             set_parallel(false);
                             auto a = pushforward(compact2d, proj21);
                             set_parallel(true);
                             auto b = pushforward(compact2d, proj21);
                             return a.values == b.values && a.arr.forms == b.arr.forms;
                         }});
    workloads.push_back({"radon transform of a triangle",
                         [&] { radon_p2(tri); },
                         [&] {
                             set_parallel(false);
                             auto a = radon_p2(tri);
                             set_parallel(true);
                             auto b = radon_p2(tri);
                             return a.values == b.values && a.arr.forms == b.arr.forms;
                         }});

    std::printf("%-42s %12s %12s %8s\n", "workload", "serial [s]", "openmp [s]", "speedup");
    bool all_agree = true;
    for (auto& w : workloads) {
        set_parallel(false);
        const double serial = time_of(w.run);
        set_parallel(true);
        const double parallel = time_of(w.run);
        const bool same = w.agree();
        all_agree = all_agree && same;
        std::printf("%-42s %12.3f %12.3f %7.2fx%s\n", w.name.c_str(), serial, parallel,
                    parallel > 0 ? serial / parallel : 0.0, same ? "" : "  MISMATCH");
    }
    if (!all_agree) {
        std::fprintf(stderr, "serial and parallel results disagree\n");
        return 1;
    }
    return 0;
}
