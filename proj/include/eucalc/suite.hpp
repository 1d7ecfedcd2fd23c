// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <random>
#include <string>

#include "eucalc/radon.hpp"

namespace eucalc {

// Seeded generators shared by the check suite and the tests.
AffineCF random_affine_cf(std::mt19937_64& rng, int dim, int max_forms, int value_bound,
                          int coeff_bound = 3);
AffineCF random_compact_cf(std::mt19937_64& rng, int dim, int max_forms, int value_bound,
                           int coeff_bound = 3);
AffineMap random_surjective_map(std::mt19937_64& rng, int dim_in, int dim_out,
                                int coeff_bound = 2);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    int max_cells = kDefaultMaxCells;
    int oversample = 3;
};

// The full identity battery: exact equalities throughout, one result per
// criterion with its wall-clock budget enforced.
std::vector<CheckResult> run_acceptance_suite(const SuiteOptions& opts = {});

}  // namespace eucalc
