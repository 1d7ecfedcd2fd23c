// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <variant>

#include "eucalc/projective.hpp"

namespace eucalc {

// JSON documents for constructible functions, affine maps and polyhedra.
// All numbers are rational strings ("p" or "p/q"), never floats, so a
// save/load round trip is exact. Zero-valued cells may be omitted; every
// listed sign vector is validated against the arrangement on load.

using CFVariant = std::variant<AffineCF, ProjectiveCF>;

CFVariant parse_cf_document(const std::string& json_text, int max_cells = kDefaultMaxCells);
CFVariant load_cf(const std::string& path, int max_cells = kDefaultMaxCells);

std::string cf_document_text(const AffineCF& cf, const std::string& name = "");
std::string cf_document_text(const ProjectiveCF& cf, const std::string& name = "");
void save_cf(const CFVariant& cf, const std::string& path, const std::string& name = "");

AffineMap parse_affine_map_document(const std::string& json_text);
AffineMap load_affine_map(const std::string& path);

PolyhedronSpec parse_polyhedron_document(const std::string& json_text);
PolyhedronSpec load_polyhedron(const std::string& path);

}  // namespace eucalc
