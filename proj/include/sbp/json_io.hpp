#pragma once

/**
 * @file json_io.hpp
 * @brief File formats. All element indices are 1-based on disk and 0-based
 *        in memory; unknown fields are rejected.
 *
 * Magma:  {"order": n, "table": [[...n rows of n entries...]]}
 * Map:    {"dom": n, "cod": m, "values": [...]}
 * Action: {"X": n, "B": m, "theta": [[...]], "phi": [flattened (x,b,x',b')
 *          row-major], "h": [...], "t": [...]}
 * Sbp:    {"X": magma, "A": magma, "B": magma, "k": [..], "p": [..],
 *          "q": [..], "s": [..]}
 */

#include "action.hpp"
#include "errors.hpp"
#include "magma.hpp"
#include "semibiproduct.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sbp {

using nlohmann::json;

namespace detail {

inline void require_keys(const json& j, std::initializer_list<const char*> keys,
                         const std::string& where) {
    if (!j.is_object()) throw schema_error("expected an object", where);
    for (const char* k : keys)
        if (!j.contains(k)) throw schema_error(std::string("missing field '") + k + "'", where);
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : keys)
            if (it.key() == k) known = true;
        if (!known) throw schema_error("unknown field '" + it.key() + "'", where);
    }
}

inline int get_order(const json& j, const char* key, const std::string& where) {
    const json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 1)
        throw schema_error(std::string("'") + key + "' must be a positive integer", where);
    return v.get<int>();
}

// 1-based entry in {1..bound}
inline int get_entry(const json& v, int bound, const std::string& where) {
    if (!v.is_number_integer())
        throw schema_error("expected an integer entry", where);
    long long e = v.get<long long>();
    if (e < 1 || e > bound)
        throw schema_error("entry " + std::to_string(e) + " outside 1.." +
                               std::to_string(bound), where);
    return int(e) - 1;
}

inline std::vector<int> get_values(const json& arr, std::size_t len, int bound,
                                   const std::string& where) {
    if (!arr.is_array() || arr.size() != len)
        throw schema_error("expected an array of length " + std::to_string(len), where);
    std::vector<int> out(len);
    for (std::size_t i = 0; i < len; ++i)
        out[i] = get_entry(arr[i], bound, where + "[" + std::to_string(i) + "]");
    return out;
}

inline std::vector<int> get_table(const json& rows, int n, int bound,
                                  const std::string& where) {
    if (!rows.is_array() || (int)rows.size() != n)
        throw schema_error("expected " + std::to_string(n) + " rows", where);
    std::vector<int> out;
    out.reserve(std::size_t(n) * n);
    for (int i = 0; i < n; ++i) {
        std::string rw = where + "[" + std::to_string(i) + "]";
        auto row = get_values(rows[i], std::size_t(n), bound, rw);
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

inline json table_rows(const std::vector<int>& t, int rows, int cols) {
    json out = json::array();
    for (int i = 0; i < rows; ++i) {
        json row = json::array();
        for (int j = 0; j < cols; ++j) row.push_back(t[i * cols + j] + 1);
        out.push_back(row);
    }
    return out;
}

inline json values_1based(const std::vector<int>& v) {
    json out = json::array();
    for (int x : v) out.push_back(x + 1);
    return out;
}

} // namespace detail

inline Magma magma_from_json(const json& j, const std::string& where = "$") {
    detail::require_keys(j, {"order", "table"}, where);
    int n = detail::get_order(j, "order", where);
    return Magma{n, detail::get_table(j.at("table"), n, n, where + ".table")};
}

inline json magma_to_json(const Magma& m) {
    return json{{"order", m.order}, {"table", detail::table_rows(m.table, m.order, m.order)}};
}

inline Map map_from_json(const json& j, const std::string& where = "$") {
    detail::require_keys(j, {"dom", "cod", "values"}, where);
    int dom = detail::get_order(j, "dom", where);
    int cod = detail::get_order(j, "cod", where);
    return Map{dom, cod,
               detail::get_values(j.at("values"), std::size_t(dom), cod, where + ".values")};
}

inline json map_to_json(const Map& f) {
    return json{{"dom", f.dom}, {"cod", f.cod}, {"values", detail::values_1based(f.values)}};
}

inline MagmaAction action_from_json(const json& j, const std::string& where = "$") {
    detail::require_keys(j, {"X", "B", "theta", "phi", "h", "t"}, where);
    MagmaAction a;
    a.x_order = detail::get_order(j, "X", where);
    a.b_order = detail::get_order(j, "B", where);
    a.theta = Magma{a.b_order,
                    detail::get_table(j.at("theta"), a.b_order, a.b_order, where + ".theta")};
    std::size_t phi_len = std::size_t(a.x_order) * a.b_order * a.x_order * a.b_order;
    a.phi = detail::get_values(j.at("phi"), phi_len, a.x_order, where + ".phi");
    a.h = Map{a.x_order, a.b_order,
              detail::get_values(j.at("h"), std::size_t(a.x_order), a.b_order, where + ".h")};
    a.t = Map{a.b_order, a.x_order,
              detail::get_values(j.at("t"), std::size_t(a.b_order), a.x_order, where + ".t")};
    return a;
}

inline json action_to_json(const MagmaAction& a) {
    return json{{"X", a.x_order},
                {"B", a.b_order},
                {"theta", detail::table_rows(a.theta.table, a.b_order, a.b_order)},
                {"phi", detail::values_1based(a.phi)},
                {"h", detail::values_1based(a.h.values)},
                {"t", detail::values_1based(a.t.values)}};
}

inline Semibiproduct sbp_from_json(const json& j, const std::string& where = "$") {
    detail::require_keys(j, {"X", "A", "B", "k", "p", "q", "s"}, where);
    Semibiproduct sb;
    sb.X = magma_from_json(j.at("X"), where + ".X");
    sb.A = magma_from_json(j.at("A"), where + ".A");
    sb.B = magma_from_json(j.at("B"), where + ".B");
    sb.k = Map{sb.X.order, sb.A.order,
               detail::get_values(j.at("k"), std::size_t(sb.X.order), sb.A.order, where + ".k")};
    sb.p = Map{sb.A.order, sb.B.order,
               detail::get_values(j.at("p"), std::size_t(sb.A.order), sb.B.order, where + ".p")};
    sb.q = Map{sb.A.order, sb.X.order,
               detail::get_values(j.at("q"), std::size_t(sb.A.order), sb.X.order, where + ".q")};
    sb.s = Map{sb.B.order, sb.A.order,
               detail::get_values(j.at("s"), std::size_t(sb.B.order), sb.A.order, where + ".s")};
    return sb;
}

inline json sbp_to_json(const Semibiproduct& sb) {
    return json{{"X", magma_to_json(sb.X)},
                {"A", magma_to_json(sb.A)},
                {"B", magma_to_json(sb.B)},
                {"k", detail::values_1based(sb.k.values)},
                {"p", detail::values_1based(sb.p.values)},
                {"q", detail::values_1based(sb.q.values)},
                {"s", detail::values_1based(sb.s.values)}};
}

inline json derived_to_json(const PseudoActionData& d, const RMagma& r) {
    json pairs = json::array();
    for (const RPair& rp : r.pairs) pairs.push_back(json::array({rp.x + 1, rp.b + 1}));
    return json{{"h", detail::values_1based(d.h.values)},
                {"rho", detail::table_rows(d.rho, d.x_order, d.b_order)},
                {"phi", detail::table_rows(d.phi_pre, d.b_order, d.x_order)},
                {"gamma", detail::table_rows(d.gamma, d.b_order, d.b_order)},
                {"t", detail::values_1based(d.t.values)},
                {"R", pairs},
                {"R_table", detail::table_rows(r.op, r.size(), r.size())}};
}

} // namespace sbp
