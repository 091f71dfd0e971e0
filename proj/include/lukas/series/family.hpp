#pragma once

/**
 * @file family.hpp
 * @brief Generating series of the path families, rational expansion and vector division.
 */

#include <string>
#include <vector>

#include "lukas/algebra/coeff_table.hpp"
#include "lukas/errors.hpp"
#include "lukas/paths/enumerate.hpp"
#include "lukas/series/laurent.hpp"

namespace lukas {

/// W, A, B generate from P, D, Dhat; R, S, T from R, S, Shat.
enum class SeriesFamily { W, A, B, R, S, T };

inline const char* to_string(SeriesFamily f) {
    switch (f) {
        case SeriesFamily::W: return "W";
        case SeriesFamily::A: return "A";
        case SeriesFamily::B: return "B";
        case SeriesFamily::R: return "R";
        case SeriesFamily::S: return "S";
        case SeriesFamily::T: return "T";
    }
    return "?";
}

inline SeriesFamily parse_series_family(const std::string& s) {
    if (s == "W") return SeriesFamily::W;
    if (s == "A") return SeriesFamily::A;
    if (s == "B") return SeriesFamily::B;
    if (s == "R") return SeriesFamily::R;
    if (s == "S") return SeriesFamily::S;
    if (s == "T") return SeriesFamily::T;
    throw domain_error("unknown series family: " + s);
}

inline Family path_family(SeriesFamily f) {
    switch (f) {
        case SeriesFamily::W: return Family::P;
        case SeriesFamily::A: return Family::D;
        case SeriesFamily::B: return Family::Dhat;
        case SeriesFamily::R: return Family::R;
        case SeriesFamily::S: return Family::S;
        case SeriesFamily::T: return Family::Shat;
    }
    return Family::P;
}

/// sum_{n=0}^{N-1} F_[n,j] z^(-n-1), valid to z^(-N); starts at z^(-j-1).
inline LaurentSeries series_from_family(SeriesFamily f, int j, int q, int N, const CoeffTable& table) {
    int p = table.p();
    if (j < 0 || j > p) throw domain_error("series index j outside [0, p]");
    if (q != 0 && (f == SeriesFamily::W || f == SeriesFamily::R)) throw domain_error("W and R take no shift");
    auto w = weight_polynomials_upto(path_family(f), j, q, N - 1, table);
    std::vector<RingElement> c;
    for (int n = j; n < int(w.size()); ++n) c.push_back(w[std::size_t(n)]);
    return LaurentSeries(table.mode(), j + 1, std::max(N, j), std::move(c));
}

/// Expansion of numer / denom at infinity, valid to z^(-N).
inline LaurentSeries rational_to_series(const ZPolynomial& numer, const ZPolynomial& denom, int N) {
    if (denom.is_zero()) throw domain_error("zero denominator");
    if (numer.is_zero()) return LaurentSeries::zero(denom.kind());
    auto inv = denom.to_series().invert(N + numer.degree());
    return LaurentSeries::product(numer.to_series(), inv, N);
}

using SeriesVector = std::vector<LaurentSeries>;

/// (f_1/g_p, f_2 g_1/g_p, ..., f_p g_{p-1}/g_p), each component capped at z^(-N).
inline SeriesVector vector_divide(const SeriesVector& f, const SeriesVector& g, int N) {
    if (f.empty() || f.size() != g.size()) throw domain_error("vector_divide: length mismatch");
    std::size_t p = f.size();
    SeriesVector num;
    num.reserve(p);
    int lowest = 0;
    for (std::size_t i = 0; i < p; ++i) {
        num.push_back(i == 0 ? f[0] : f[i] * g[i - 1]);
        lowest = std::min(lowest, num.back().min_exp());
    }
    auto inv = g[p - 1].invert(N - lowest);
    SeriesVector out;
    out.reserve(p);
    for (auto& x : num) out.push_back(LaurentSeries::product(x, inv, N));
    return out;
}

}  // namespace lukas
