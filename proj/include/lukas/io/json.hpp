#pragma once

/**
 * @file json.hpp
 * @brief JSON encodings of polynomials, tables, series, paths and reports.
 *
 * Rationals travel as "num/den" strings so that big values survive round
 * trips exactly. Monomials are lists of [k, n, exponent] triples.
 */

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lukas/algebra/coeff_table.hpp"
#include "lukas/algebra/number.hpp"
#include "lukas/algebra/ring.hpp"
#include "lukas/algebra/weight_poly.hpp"
#include "lukas/errors.hpp"
#include "lukas/paths/lattice_path.hpp"
#include "lukas/series/laurent.hpp"
#include "lukas/vcf/report.hpp"

namespace lukas::io {

using json = nlohmann::ordered_json;

inline json to_json(const Monomial& m) {
    json out = json::array();
    for (auto& f : m.factors()) {
        auto v = VariableId::from_key(f.var);
        out.push_back({v.k, v.n, f.exp});
    }
    return out;
}

/// Array of {"coeff", "vars"} in monomial order.
inline json to_json(const WeightPoly& p) {
    json terms = json::array();
    for (auto& [m, c] : p.terms()) terms.push_back({{"coeff", c.str()}, {"vars", to_json(m)}});
    return terms;
}

inline WeightPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw domain_error("weight polynomial JSON must be an array");
    WeightPoly out;
    for (auto& t : j) {
        std::vector<std::uint64_t> keys;
        for (auto& f : t.at("vars")) {
            int k = f.at(0).get<int>(), n = f.at(1).get<int>(), e = f.at(2).get<int>();
            if (e < 1) throw domain_error("monomial exponent must be positive");
            for (int i = 0; i < e; ++i) keys.push_back(VariableId{k, n}.key());
        }
        out = out + WeightPoly::monomial(Monomial::from_keys(std::move(keys)), BigInt(t.at("coeff").get<std::string>()));
    }
    return out;
}

/// Symbolic elements as polynomial arrays, numeric ones as "num/den".
inline json to_json(const RingElement& r) {
    if (r.is_symbolic()) return to_json(r.poly());
    return format_rational(r.rational());
}

inline json to_json(const ZPolynomial& p) {
    json c = json::array();
    for (auto& x : p.coeffs()) c.push_back(to_json(x));
    return {{"text", p.to_string()}, {"ascending", c}};
}

/// {"min_exp", "valid_to", "coeffs": [[e, value], ...]} through min(valid_to, upto).
/// An exact series reports valid_to = upto and "exact": true.
inline json to_json(const LaurentSeries& s, int upto) {
    int top = std::min(s.valid_to(), upto);
    json coeffs = json::array();
    for (int e = s.min_exp(); e <= top; ++e) coeffs.push_back({e, to_json(s.coeff(e))});
    json out{{"min_exp", s.min_exp()}, {"valid_to", top}};
    if (s.exact()) out["exact"] = true;
    out["coeffs"] = coeffs;
    return out;
}

inline json to_json(const std::vector<std::vector<RingElement>>& m) {
    json rows = json::array();
    for (auto& row : m) {
        json r = json::array();
        for (auto& x : row) r.push_back(to_json(x));
        rows.push_back(r);
    }
    return rows;
}

inline json to_json(const LatticePath& g) {
    return {{"start", {g.x0, g.y0}}, {"rises", g.rises}, {"text", encode(g)}};
}

inline json to_json(const Report& r) {
    json fails = json::array();
    for (auto& f : r.failures)
        fails.push_back({{"component", f.component}, {"exponent", f.exponent}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    json out{{"identity", r.identity}, {"p", r.p},          {"N", r.N},
             {"status", r.pass ? "pass" : "fail"}, {"failures", fails}, {"table", r.table}};
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

inline json to_json(const std::vector<Report>& rs) {
    json arr = json::array();
    std::size_t failed = 0;
    for (auto& r : rs) {
        arr.push_back(to_json(r));
        if (!r.pass) ++failed;
    }
    return {{"status", failed == 0 ? "pass" : "fail"}, {"checked", rs.size()}, {"failed", failed}, {"reports", arr}};
}

inline json to_json(const CoeffTable& t) {
    json values = json::array();
    for (auto& [key, v] : t.values()) values.push_back({key.first, key.second, format_rational(v)});
    json out{{"p", t.p()}, {"mode", to_string(t.mode())}};
    if (t.mode() == RingKind::numeric) {
        auto [lo, hi] = t.window();
        out["window"] = {lo, hi};
    }
    out["values"] = values;
    if (t.bidiagonal()) out["bidiagonal"] = true;
    return out;
}

/// {"p", "mode": "numeric", "window": [lo, hi], "values": [[k, n, "num/den"], ...], "bidiagonal"?}.
inline CoeffTable table_from_json(const json& j) {
    try {
        int p = j.at("p").get<int>();
        bool bd = j.value("bidiagonal", false);
        std::string mode = j.value("mode", std::string("numeric"));
        if (mode == "symbolic") return CoeffTable::symbolic(p, bd);
        if (mode != "numeric") throw domain_error("unknown table mode '" + mode + "'");
        auto w = j.at("window");
        CoeffTable t = CoeffTable::numeric(p, w.at(0).get<int>(), w.at(1).get<int>(), bd);
        for (auto& e : j.value("values", json::array())) {
            const auto& v = e.at(2);
            BigRational x = v.is_string() ? parse_rational(v.get<std::string>()) : BigRational(v.get<long long>());
            t.set(e.at(0).get<int>(), e.at(1).get<int>(), x);
        }
        return t;
    } catch (const json::exception& e) {
        throw domain_error(std::string("malformed coefficient table: ") + e.what());
    }
}

inline CoeffTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open coefficient file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw domain_error("coefficient file '" + path + "' is not valid JSON: " + e.what());
    }
    return table_from_json(j);
}

}  // namespace lukas::io
