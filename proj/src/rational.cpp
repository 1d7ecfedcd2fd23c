// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#include "eucalc/rational.hpp"

#include <cctype>
#include <sstream>

#include "eucalc/errors.hpp"

namespace eucalc {

Rational parse_rational(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw InputError("empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw InputError("malformed rational literal: '" + text + "'");
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, s.c_str(), 10) != 0) {
        mpq_clear(q);
        throw InputError("malformed rational literal: '" + text + "'");
    }
    if (mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        throw InputError("zero denominator in rational literal: '" + text + "'");
    }
    mpq_canonicalize(q);
    Rational r(q);
    mpq_clear(q);
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const RatVector& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].get_str();
    }
    return os.str();
}

RatVector parse_rat_vector(const std::string& text) {
    RatVector out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) out.push_back(parse_rational(item));
    return out;
}

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
    Rational acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace eucalc
