#pragma once

#include <variant>

#include <json.hpp>

#include "kmp/cartan.hpp"
#include "kmp/series.hpp"

namespace kmp {

// Insertion-ordered JSON keeps CLI output byte-deterministic.
using Json = nlohmann::ordered_json;

inline Json poly_to_json(const IntPoly& p) {
    Json arr = Json::array();
    for (const Int& c : p.coeffs()) arr.push_back(c.get_str());
    if (p.is_zero()) arr.push_back("0");  // serialized zero polynomial is ["0"]
    return arr;
}

inline IntPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("polynomial must be a JSON array of coefficients");
    std::vector<Int> c;
    c.reserve(j.size());
    for (const auto& v : j) {
        if (v.is_number_integer())
            c.emplace_back(static_cast<long>(v.get<long long>()));
        else if (v.is_string())
            c.emplace_back(v.get<std::string>());
        else
            throw InputError("polynomial coefficients must be integers or decimal strings");
    }
    return IntPoly(std::move(c));
}

// {"num": [...], "den": [...]}, ascending coefficients, decimal strings
inline Json ratfunc_to_json(const RatFunc& f) {
    Json j;
    j["num"] = poly_to_json(f.num());
    j["den"] = poly_to_json(f.den());
    return j;
}

inline RatFunc ratfunc_from_json(const Json& j) {
    if (!j.contains("num") || !j.contains("den"))
        throw InputError("rational function needs \"num\" and \"den\" arrays");
    return RatFunc(poly_from_json(j["num"]), poly_from_json(j["den"]));
}

inline Json series_to_json(const TruncSeries& s) {
    Json j;
    j["order"] = s.order();
    Json arr = Json::array();
    for (const Rat& c : s.coeffs()) arr.push_back(c.get_str());
    j["coeffs"] = arr;
    return j;
}

inline Json typeclass_to_json(const TypeClass& tc) {
    Json j;
    Json comps = Json::array();
    for (const auto& c : tc.components) {
        Json cj;
        Json support = Json::array();
        for (int v : c.support) support.push_back(v + 1);  // 1-based for the CLI
        cj["support"] = support;
        cj["kind"] = kind_name(c.kind);
        if (c.kind == Kind::Finite) {
            cj["label"] = c.label;
            cj["degrees"] = c.degrees;
        }
        comps.push_back(cj);
    }
    j["components"] = comps;
    if (tc.dim_flag.has_value())
        j["dim_flag"] = *tc.dim_flag;
    else
        j["dim_flag"] = "infinity";
    return j;
}

/**
 * Input schema: {"cartan": [[...row...], ...]} or
 * {"coxeter_graph": {"n": int, "edges": [[i, j, multiplicity], ...]}} with
 * 1-based vertex indices.
 */
inline std::variant<CartanMatrix, CoxeterGraph> parse_input(const Json& j) {
    if (j.contains("cartan")) {
        const Json& m = j["cartan"];
        if (!m.is_array() || m.empty()) throw InputError("\"cartan\" must be a non-empty array of rows");
        std::vector<std::vector<int>> rows;
        for (const auto& r : m) {
            if (!r.is_array()) throw InputError("\"cartan\" rows must be arrays");
            std::vector<int> row;
            for (const auto& v : r) {
                if (!v.is_number_integer()) throw InputError("Cartan entries must be integers");
                row.push_back(v.get<int>());
            }
            rows.push_back(std::move(row));
        }
        return CartanMatrix::from_rows(rows);
    }
    if (j.contains("coxeter_graph")) {
        const Json& g = j["coxeter_graph"];
        if (!g.contains("n") || !g["n"].is_number_integer())
            throw InputError("\"coxeter_graph\" needs an integer vertex count \"n\"");
        CoxeterGraph graph(g["n"].get<int>());
        if (g.contains("edges")) {
            for (const auto& e : g["edges"]) {
                if (!e.is_array() || e.size() != 3) throw InputError("edges must be [i, j, multiplicity]");
                graph.set_multiplicity(e[0].get<int>() - 1, e[1].get<int>() - 1, e[2].get<int>());
            }
        }
        return graph;
    }
    throw InputError("input must contain \"cartan\" or \"coxeter_graph\"");
}

inline std::variant<CartanMatrix, CoxeterGraph> parse_input_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return parse_input(j);
}

// matrix view of either input kind
inline CartanMatrix to_matrix(const std::variant<CartanMatrix, CoxeterGraph>& input) {
    if (std::holds_alternative<CartanMatrix>(input)) return std::get<CartanMatrix>(input);
    return std::get<CoxeterGraph>(input).to_cartan();
}

}  // namespace kmp
