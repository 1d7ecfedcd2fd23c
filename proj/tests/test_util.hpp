// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "eucalc/suite.hpp"

namespace test_util {

using namespace eucalc;

inline Rational rat(int p, int q = 1) { return Rational(p, q); }

inline AffineForm form(std::initializer_list<int> linear, int constant = 0) {
    AffineForm f;
    for (int a : linear) f.linear.emplace_back(a);
    f.constant = constant;
    return f;
}

inline RatVector vec(std::initializer_list<int> xs) {
    RatVector v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

// 1_{[a,b]} and friends on the line.
inline AffineCF interval(const Rational& a, const Rational& b, bool closed_left,
                         bool closed_right) {
    PolyhedronSpec spec;
    spec.dim = 1;
    spec.constraints.push_back({AffineForm{{rat(1)}, -a}, closed_left ? RelOp::GE : RelOp::GT});
    spec.constraints.push_back({AffineForm{{rat(-1)}, b}, closed_right ? RelOp::GE : RelOp::GT});
    return indicator(spec);
}

inline AffineCF box(const std::vector<std::pair<Rational, Rational>>& ranges) {
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

// Closed triangle with the given vertices.
inline AffineCF triangle(std::initializer_list<std::pair<int, int>> verts_in) {
    std::vector<RatVector> verts;
    for (auto [x, y] : verts_in) verts.push_back(RatVector{rat(x), rat(y)});
    PolyhedronSpec spec;
    spec.dim = 2;
    for (std::size_t skip = 0; skip < 3; ++skip) {
        const RatVector& p = verts[(skip + 1) % 3];
        const RatVector& q = verts[(skip + 2) % 3];
        AffineForm facet;
        facet.linear = RatVector{p[1] - q[1], q[0] - p[0]};
        facet.constant = p[0] * q[1] - p[1] * q[0];
        if (facet.eval(verts[skip]) < 0) {
            for (auto& v : facet.linear) v = -v;
            facet.constant = -facet.constant;
        }
        spec.constraints.push_back({std::move(facet), RelOp::GE});
    }
    return indicator(spec);
}

}  // namespace test_util
