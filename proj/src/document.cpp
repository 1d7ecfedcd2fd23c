// Copyright (c) 2026 The eucalc authors. See the LICENSE file for details.
// SPDX-License-Identifier: Apache-2.0

#include "eucalc/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eucalc/errors.hpp"

namespace eucalc {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("document parse error: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

RatVector parse_coeffs(const Json& j, const std::string& what) {
    if (!j.is_array()) throw InputError(what + ": expected an array of rational strings");
    RatVector v;
    v.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_string()) throw InputError(what + ": coefficients must be strings");
        v.push_back(parse_rational(item.get<std::string>()));
    }
    return v;
}

struct ParsedCells {
    std::vector<SignVector> signs;
    std::vector<Int> values;
};

ParsedCells parse_cells(const Json& doc, std::size_t n_forms) {
    ParsedCells out;
    if (!doc.contains("cells")) return out;
    const Json& cells = doc.at("cells");
    if (!cells.is_array()) throw InputError("cells: expected an array");
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const Json& c = cells[k];
        if (!c.is_object() || !c.contains("signs") || !c.contains("value"))
            throw InputError("cell " + std::to_string(k) + ": needs signs and value");
        const std::string s = c.at("signs").get<std::string>();
        if (s.size() != n_forms)
            throw InputError("cell " + std::to_string(k) + ": signs length " +
                             std::to_string(s.size()) + " does not match " +
                             std::to_string(n_forms) + " forms");
        SignVector sv(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '-')
                sv[i] = -1;
            else if (s[i] == '0')
                sv[i] = 0;
            else if (s[i] == '+')
                sv[i] = 1;
            else
                throw InputError("cell " + std::to_string(k) + ": invalid sign character '" +
                                 std::string(1, s[i]) + "' at position " + std::to_string(i));
        }
        if (!c.at("value").is_number_integer())
            throw InputError("cell " + std::to_string(k) + ": value must be an integer");
        out.signs.push_back(std::move(sv));
        out.values.push_back(c.at("value").get<Int>());
    }
    return out;
}

std::string signs_to_string(const SignVector& s) {
    std::string out(s.size(), '0');
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] < 0 ? '-' : s[i] > 0 ? '+' : '0';
    return out;
}

// Document forms are normalized and sorted into canonical order; doc_to_arr
// maps document index -> arrangement index, flip records sign reversals.
struct FormMapping {
    std::vector<std::size_t> doc_to_arr;
    std::vector<bool> flip;
};

FormMapping map_forms(const std::vector<AffineForm>& doc_forms, const Arrangement& arr) {
    FormMapping m;
    m.doc_to_arr.resize(doc_forms.size());
    m.flip.resize(doc_forms.size());
    for (std::size_t i = 0; i < doc_forms.size(); ++i) {
        bool flipped = false;
        AffineForm n = normalize_form(doc_forms[i], &flipped);
        auto it = std::lower_bound(arr.forms.begin(), arr.forms.end(), n);
        if (it == arr.forms.end() || !(*it == n))
            throw InternalError("document form lost during canonicalization");
        m.doc_to_arr[i] = static_cast<std::size_t>(it - arr.forms.begin());
        m.flip[i] = flipped;
    }
    return m;
}

std::size_t find_cell(const std::vector<Cell>& cells, const SignVector& signs) {
    auto it = std::lower_bound(cells.begin(), cells.end(), signs,
                               [](const Cell& c, const SignVector& v) { return c.signs < v; });
    if (it == cells.end() || it->signs != signs) return cells.size();
    return static_cast<std::size_t>(it - cells.begin());
}

CFVariant parse_affine(const Json& doc, int max_cells) {
    const int dim = doc.at("dim").get<int>();
    if (dim < 0) throw InputError("dim must be nonnegative");
    std::vector<AffineForm> doc_forms;
    for (const auto& row : doc.value("forms", Json::array())) {
        RatVector v = parse_coeffs(row, "form");
        if (static_cast<int>(v.size()) != dim + 1)
            throw InputError("form: expected " + std::to_string(dim + 1) + " coefficients");
        AffineForm f;
        f.constant = v.back();
        v.pop_back();
        f.linear = std::move(v);
        if (f.degenerate()) throw InputError("form: zero linear part");
        doc_forms.push_back(std::move(f));
    }

    AffineCF cf;
    cf.arr = make_arrangement(dim, doc_forms);
    if (cf.arr.form_count() != doc_forms.size())
        throw InputError("forms: duplicate hyperplane after normalization");
    cf.cells = enumerate_cells(cf.arr, max_cells);
    cf.values.assign(cf.cells.size(), 0);

    const FormMapping fm = map_forms(doc_forms, cf.arr);
    const ParsedCells pc = parse_cells(doc, doc_forms.size());
    std::vector<bool> assigned(cf.cells.size(), false);
    for (std::size_t k = 0; k < pc.signs.size(); ++k) {
        SignVector canonical(doc_forms.size());
        for (std::size_t i = 0; i < doc_forms.size(); ++i) {
            Sign s = pc.signs[k][i];
            if (fm.flip[i]) s = static_cast<Sign>(-s);
            canonical[fm.doc_to_arr[i]] = s;
        }
        const std::size_t idx = find_cell(cf.cells, canonical);
        if (idx == cf.cells.size())
            throw InputError("cell " + std::to_string(k) + " (signs \"" +
                             signs_to_string(pc.signs[k]) + "\") is not realizable");
        if (assigned[idx] && cf.values[idx] != pc.values[k])
            throw InputError("cell " + std::to_string(k) + ": conflicting values for one cell");
        assigned[idx] = true;
        cf.values[idx] = pc.values[k];
    }
    return cf;
}

CFVariant parse_projective(const Json& doc, int max_cells) {
    const int n = doc.at("dim").get<int>();
    if (n < 1) throw InputError("projective dim must be at least 1");
    std::vector<AffineForm> doc_forms;
    for (const auto& row : doc.value("forms", Json::array())) {
        RatVector v = parse_coeffs(row, "form");
        if (static_cast<int>(v.size()) != n + 1)
            throw InputError("form: expected " + std::to_string(n + 1) + " coefficients");
        AffineForm f{std::move(v), Rational(0)};
        if (f.degenerate()) throw InputError("form: zero linear part");
        doc_forms.push_back(std::move(f));
    }

    ProjectiveCF cf;
    cf.proj_dim = n;
    cf.arr = make_central_arrangement(n + 1, doc_forms);
    if (cf.arr.form_count() != doc_forms.size())
        throw InputError(
            "projective document must list every form once, including all coordinate forms");
    cf.cells = enumerate_cells(cf.arr, max_cells);
    cf.values.assign(cf.cells.size(), 0);

    const FormMapping fm = map_forms(doc_forms, cf.arr);
    const ParsedCells pc = parse_cells(doc, doc_forms.size());
    std::vector<bool> assigned(cf.cells.size(), false);
    for (std::size_t k = 0; k < pc.signs.size(); ++k) {
        SignVector canonical(doc_forms.size());
        for (std::size_t i = 0; i < doc_forms.size(); ++i) {
            Sign s = pc.signs[k][i];
            if (fm.flip[i]) s = static_cast<Sign>(-s);
            canonical[fm.doc_to_arr[i]] = s;
        }
        const std::size_t idx = find_cell(cf.cells, canonical);
        if (idx == cf.cells.size())
            throw InputError("cell " + std::to_string(k) + " (signs \"" +
                             signs_to_string(pc.signs[k]) + "\") is not realizable");
        if (assigned[idx] && cf.values[idx] != pc.values[k])
            throw InputError("cell " + std::to_string(k) + ": conflicting values for one cell");
        assigned[idx] = true;
        cf.values[idx] = pc.values[k];
    }
    // A document may list either member of an antipodal pair; the partner
    // inherits the value. Conflicting explicit values violate evenness.
    for (std::size_t i = 0; i < cf.cells.size(); ++i) {
        const std::size_t j = antipodal_index(cf.arr, cf.cells, i);
        if (assigned[i] && assigned[j]) {
            if (cf.values[i] != cf.values[j])
                throw InputError("evenness violation: antipodal cells \"" +
                                 signs_to_string(cf.cells[i].signs) + "\" and \"" +
                                 signs_to_string(cf.cells[j].signs) + "\" carry different values");
        } else if (assigned[i]) {
            cf.values[j] = cf.values[i];
        } else if (assigned[j]) {
            cf.values[i] = cf.values[j];
        }
    }
    return cf;
}

Json forms_json_affine(const Arrangement& arr) {
    Json forms = Json::array();
    for (const auto& f : arr.forms) {
        Json row = Json::array();
        for (const auto& a : f.linear) row.push_back(a.get_str());
        row.push_back(f.constant.get_str());
        forms.push_back(std::move(row));
    }
    return forms;
}

Json forms_json_central(const Arrangement& arr) {
    Json forms = Json::array();
    for (const auto& f : arr.forms) {
        Json row = Json::array();
        for (const auto& a : f.linear) row.push_back(a.get_str());
        forms.push_back(std::move(row));
    }
    return forms;
}

}  // namespace

CFVariant parse_cf_document(const std::string& json_text, int max_cells) {
    Json doc = parse_json(json_text);
    if (!doc.is_object() || !doc.contains("kind")) throw InputError("document: missing kind");
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "affine") return parse_affine(doc, max_cells);
    if (kind == "projective") return parse_projective(doc, max_cells);
    throw InputError("document: unknown kind '" + kind + "'");
}

CFVariant load_cf(const std::string& path, int max_cells) {
    return parse_cf_document(read_file(path), max_cells);
}

std::string cf_document_text(const AffineCF& cf, const std::string& name) {
    Json doc;
    doc["kind"] = "affine";
    doc["dim"] = cf.dim();
    doc["forms"] = forms_json_affine(cf.arr);
    Json cells = Json::array();
    for (std::size_t i = 0; i < cf.cells.size(); ++i) {
        if (cf.values[i] == 0) continue;
        Json c;
        c["signs"] = signs_to_string(cf.cells[i].signs);
        c["value"] = cf.values[i];
        cells.push_back(std::move(c));
    }
    doc["cells"] = std::move(cells);
    if (!name.empty()) doc["metadata"] = Json{{"name", name}};
    return doc.dump(2) + "\n";
}

std::string cf_document_text(const ProjectiveCF& cf, const std::string& name) {
    Json doc;
    doc["kind"] = "projective";
    doc["dim"] = cf.proj_dim;
    doc["forms"] = forms_json_central(cf.arr);
    Json cells = Json::array();
    for (std::size_t i = 0; i < cf.cells.size(); ++i) {
        if (cf.values[i] == 0 || !is_pair_representative(cf.cells[i])) continue;
        Json c;
        c["signs"] = signs_to_string(cf.cells[i].signs);
        c["value"] = cf.values[i];
        cells.push_back(std::move(c));
    }
    doc["cells"] = std::move(cells);
    if (!name.empty()) doc["metadata"] = Json{{"name", name}};
    return doc.dump(2) + "\n";
}

void save_cf(const CFVariant& cf, const std::string& path, const std::string& name) {
    if (std::holds_alternative<AffineCF>(cf))
        write_file(path, cf_document_text(std::get<AffineCF>(cf), name));
    else
        write_file(path, cf_document_text(std::get<ProjectiveCF>(cf), name));
}

AffineMap parse_affine_map_document(const std::string& json_text) {
    Json doc = parse_json(json_text);
    AffineMap m;
    if (!doc.contains("matrix") || !doc.at("matrix").is_array() || doc.at("matrix").empty())
        throw InputError("map document: missing matrix");
    for (const auto& row : doc.at("matrix")) m.matrix.push_back(parse_coeffs(row, "matrix row"));
    const std::size_t n_in = m.matrix[0].size();
    for (const auto& row : m.matrix)
        if (row.size() != n_in) throw InputError("map document: ragged matrix");
    if (doc.contains("translation"))
        m.translation = parse_coeffs(doc.at("translation"), "translation");
    else
        m.translation = zero_vector(static_cast<int>(m.matrix.size()));
    if (m.translation.size() != m.matrix.size())
        throw InputError("map document: translation length does not match matrix rows");
    return m;
}

AffineMap load_affine_map(const std::string& path) {
    return parse_affine_map_document(read_file(path));
}

PolyhedronSpec parse_polyhedron_document(const std::string& json_text) {
    Json doc = parse_json(json_text);
    PolyhedronSpec spec;
    spec.dim = doc.at("dim").get<int>();
    if (spec.dim < 0) throw InputError("polyhedron document: dim must be nonnegative");
    for (const auto& c : doc.value("constraints", Json::array())) {
        if (!c.is_object() || !c.contains("coeffs") || !c.contains("rel"))
            throw InputError("polyhedron document: constraint needs coeffs and rel");
        RatVector v = parse_coeffs(c.at("coeffs"), "constraint");
        if (static_cast<int>(v.size()) != spec.dim + 1)
            throw InputError("polyhedron document: expected " + std::to_string(spec.dim + 1) +
                             " coefficients");
        AffineForm f;
        f.constant = v.back();
        v.pop_back();
        f.linear = std::move(v);
        const std::string rel = c.at("rel").get<std::string>();
        RelOp op;
        if (rel == "<")
            op = RelOp::LT;
        else if (rel == "<=")
            op = RelOp::LE;
        else if (rel == "=" || rel == "==")
            op = RelOp::EQ;
        else if (rel == ">=")
            op = RelOp::GE;
        else if (rel == ">")
            op = RelOp::GT;
        else
            throw InputError("polyhedron document: unknown relation '" + rel + "'");
        spec.constraints.push_back({std::move(f), op});
    }
    return spec;
}

PolyhedronSpec load_polyhedron(const std::string& path) {
    return parse_polyhedron_document(read_file(path));
}

}  // namespace eucalc
