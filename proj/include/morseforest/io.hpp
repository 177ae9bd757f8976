#pragma once

// JSON reading and writing for complexes, matchings, rooted forests,
// reports and matrices. Exact integers are written as decimal strings.

#include "morseforest/complex.hpp"
#include "morseforest/error.hpp"
#include "morseforest/forests.hpp"
#include "morseforest/integer.hpp"
#include "morseforest/matrix.hpp"
#include "morseforest/morse.hpp"
#include "morseforest/verify.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace morseforest::io {

using nlohmann::json;

/// Parses {"name": optional string, "maximal_faces": [[int, ...], ...]}.
/// Unknown keys, negative or non-integer vertices and loops are rejected.
inline SimplicialComplex complex_from_json(const json& j, std::string fallback_name = {}) {
    if (!j.is_object())
        throw Error("complex file must be a JSON object");
    for (const auto& [key, _] : j.items())
        if (key != "name" && key != "maximal_faces")
            throw Error("unknown key '" + key + "' in complex file");
    std::string name = std::move(fallback_name);
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw Error("\"name\" must be a string");
        name = j["name"].get<std::string>();
    }
    if (!j.contains("maximal_faces") || !j["maximal_faces"].is_array())
        throw Error("\"maximal_faces\" must be an array of vertex lists");
    std::vector<std::vector<Vertex>> faces;
    for (const auto& face : j["maximal_faces"]) {
        if (!face.is_array())
            throw Error("each face must be an array of vertices");
        std::vector<Vertex> vs;
        for (const auto& v : face) {
            if (!v.is_number_integer())
                throw Error("vertex ids must be integers");
            const auto x = v.get<long long>();
            if (x < 0 || x > std::numeric_limits<Vertex>::max())
                throw Error("vertex ids must be non-negative 32-bit integers");
            vs.push_back(static_cast<Vertex>(x));
        }
        if (vs.empty())
            throw Error("empty face");
        faces.push_back(std::move(vs));
    }
    return SimplicialComplex::from_maximal_faces(faces, name);
}

inline SimplicialComplex parse_complex(const std::string& text, std::string fallback_name = {}) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
    return complex_from_json(j, std::move(fallback_name));
}

inline SimplicialComplex read_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_complex(text, path);
}

/// Maximal faces only, so reading the output back gives an equal complex.
inline json complex_to_json(const SimplicialComplex& K) {
    json faces = json::array();
    for (int d = 0; d <= K.dim(); ++d)
        for (std::size_t i = 0; i < K.size(d); ++i)
            if (d == K.dim() || K.cofaces(d, i).empty())
                faces.push_back(K.cell(d, i).vertex_list());
    json j;
    if (!K.name().empty())
        j["name"] = K.name();
    j["maximal_faces"] = std::move(faces);
    return j;
}

inline json integers_to_json(const std::vector<Integer>& xs) {
    json a = json::array();
    for (const auto& x : xs)
        a.push_back(x.str());
    return a;
}

inline std::vector<Integer> integers_from_json(const json& a) {
    std::vector<Integer> out;
    for (const auto& s : a) {
        if (!s.is_string())
            throw Error("exact integers must be decimal strings");
        try {
            out.emplace_back(s.get<std::string>());
        } catch (const std::exception&) {
            throw Error("not a decimal integer: " + s.get<std::string>());
        }
    }
    return out;
}

inline json polynomial_to_json(const IntegerPolynomial& p, std::size_t length = 0) {
    return json{{"coeffs", integers_to_json(p.padded(length))}};
}

/// Matrix dump: rows of decimal strings, with labels when present.
inline json matrix_to_json(const IntegerMatrix& M) {
    json rows = json::array();
    for (std::size_t r = 0; r < M.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < M.cols(); ++c)
            row.push_back(M(r, c).str());
        rows.push_back(std::move(row));
    }
    json j{{"rows", M.rows()}, {"cols", M.cols()}, {"entries", std::move(rows)}};
    if (M.row_labels() && M.col_labels()) {
        json rl = json::array(), cl = json::array();
        for (const auto& c : *M.row_labels())
            rl.push_back(c.vertex_list());
        for (const auto& c : *M.col_labels())
            cl.push_back(c.vertex_list());
        j["row_labels"] = std::move(rl);
        j["col_labels"] = std::move(cl);
    }
    return j;
}

/// [[tail vertices], [head vertices]] per arrow.
inline json field_to_json(const VectorField& V) {
    json a = json::array();
    for (const auto& arrow : V.arrows())
        a.push_back(json::array({arrow.tail.vertex_list(), arrow.head.vertex_list()}));
    return a;
}

inline VectorField field_from_json(const json& a) {
    if (!a.is_array())
        throw Error("a matching must be an array of [tail, head] pairs");
    std::vector<Arrow> arrows;
    for (const auto& pair : a) {
        if (!pair.is_array() || pair.size() != 2)
            throw Error("a matching must be an array of [tail, head] pairs");
        arrows.push_back({Cell::from_unsorted(pair[0].get<std::vector<Vertex>>()),
                          Cell::from_unsorted(pair[1].get<std::vector<Vertex>>())});
    }
    return VectorField(std::move(arrows));
}

inline json rooted_forest_to_json(const SimplicialComplex& K, const RootedForest& rf) {
    json forest = json::array(), root = json::array();
    for (const auto& c : rf.forest_cells(K))
        forest.push_back(c.vertex_list());
    for (const auto& c : rf.root_cells(K))
        root.push_back(c.vertex_list());
    return json{{"forest", std::move(forest)},
                {"root", std::move(root)},
                {"weight", to_int64(Integer(rf.weight * rf.weight))},
                {"collapses", collapses_to_root(K, rf)}};
}

inline json report_to_json(const SimplicialComplex& K, const VerificationReport& r, bool timing = true) {
    json witnesses = json::array();
    for (const auto& w : r.witnesses) {
        json members = json::array();
        for (const auto& rf : w.members)
            members.push_back(rooted_forest_to_json(K, rf));
        witnesses.push_back(json{{"root_size", w.root_size}, {"epsilon", w.epsilon.str()}, {"members", members}});
    }
    return json{{"complex", r.complex},
                {"theorem", r.theorem},
                {"lhs", integers_to_json(r.lhs)},
                {"rhs", integers_to_json(r.rhs)},
                {"delta", integers_to_json(r.delta)},
                {"witnesses", std::move(witnesses)},
                {"verdict", r.verdict()},
                {"ms", timing ? r.ms : 0}};
}

} // namespace morseforest::io
