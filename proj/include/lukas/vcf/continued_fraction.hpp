#pragma once

/**
 * @file continued_fraction.hpp
 * @brief Stages of the Jacobi-Perron vector continued fraction and its finite evaluation.
 *
 * Components are indexed t = 0..p-1 below.
 *   c_k[0]  = 1 for k <= p, -a^(p)_{k-p-1} for k >= p+1; other entries 1
 *   d_k[t]  = -a^(p-1-t)_{k-p+t} when k-p+t >= 0, else 0   (t < p-1)
 *   d_k[p-1] = z - a^(0)_{k-1}
 *   v_k[t]  = A^(k)_t                                    when k-p+t < 0
 *           = -sum_{i=p-t}^{p} a^(i)_{k-p+t} A^(k)_{i-p+t}  otherwise
 * Both regimes of each vector are the same expression read off by t.
 */

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lukas/algebra/coeff_table.hpp"
#include "lukas/errors.hpp"
#include "lukas/series/family.hpp"
#include "lukas/series/laurent.hpp"

namespace lukas {

struct CFTerm {
    int k = 1;
    std::vector<RingElement> c;  ///< numerator constants
    std::vector<ZPolynomial> d;  ///< denominator polynomials of degree <= 1
};

inline CFTerm cf_term(int k, const CoeffTable& table) {
    if (k < 1) throw domain_error("cf_term: stage must be at least 1");
    int p = table.p();
    CFTerm t;
    t.k = k;
    t.c.assign(std::size_t(p), table.one());
    if (k >= p + 1) t.c[0] = -table.lookup(p, k - p - 1);
    for (int i = 0; i < p - 1; ++i) {
        int off = k - p + i;
        t.d.push_back(off >= 0 ? ZPolynomial::constant(-table.lookup(p - 1 - i, off)) : ZPolynomial(table.mode()));
    }
    t.d.push_back(ZPolynomial::linear(table.lookup(0, k - 1)));
    return t;
}

/// Stage k of the alternative bidiagonal expansion: c = (1,...,1) for k = 1,
/// (1,...,1,-a^(p)_{k-2}) for k >= 2, and d = (0,...,0,z).
inline CFTerm akv_term(int k, const CoeffTable& table) {
    if (k < 1) throw domain_error("akv_term: stage must be at least 1");
    int p = table.p();
    CFTerm t;
    t.k = k;
    t.c.assign(std::size_t(p), table.one());
    if (k >= 2) t.c[std::size_t(p - 1)] = -table.lookup(p, k - 2);
    t.d.assign(std::size_t(p - 1), ZPolynomial(table.mode()));
    t.d.push_back(ZPolynomial(table.mode(), {table.zero(), table.one()}));
    return t;
}

/// Source of the shifted series A^(q)_j (j, q) used by the tail vectors.
using ShiftedSeries = std::function<LaurentSeries(int j, int q)>;

inline ShiftedSeries family_source(int N, const CoeffTable& table) {
    return [N, &table](int j, int q) { return series_from_family(SeriesFamily::A, j, q, N, table); };
}

inline SeriesVector tail_vector(int k, const CoeffTable& table, const ShiftedSeries& A) {
    if (k < 0) throw domain_error("tail_vector: stage must be nonnegative");
    int p = table.p();
    SeriesVector v;
    for (int t = 0; t < p; ++t) {
        int off = k - p + t;
        if (off < 0) {
            v.push_back(A(t, k));
            continue;
        }
        LaurentSeries s = LaurentSeries::zero(table.mode());
        for (int i = p - t; i <= p; ++i) {
            RingElement a = table.lookup(i, off);
            if (a.is_zero()) continue;
            s = s + A(i - p + t, k).scaled(a);
        }
        v.push_back(-s);
    }
    return v;
}

inline SeriesVector tail_vector(int k, int N, const CoeffTable& table) {
    return tail_vector(k, table, family_source(N, table));
}

inline SeriesVector numerators(const CFTerm& t) {
    SeriesVector out;
    for (auto& x : t.c) out.push_back(LaurentSeries::constant(x));
    return out;
}

inline SeriesVector denominators(const CFTerm& t) {
    SeriesVector out;
    for (auto& x : t.d) out.push_back(x.to_series());
    return out;
}

inline SeriesVector add(const SeriesVector& a, const SeriesVector& b) {
    if (a.size() != b.size()) throw domain_error("series vector length mismatch");
    SeriesVector out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return out;
}

/// c_1 / (d_1 + c_2 / (d_2 + ... + c_n / (d_n + tail))), folded right to left.
inline SeriesVector eval_finite_cf(const std::vector<CFTerm>& terms, const std::optional<SeriesVector>& tail, int N) {
    if (terms.empty()) throw domain_error("eval_finite_cf: no stages");
    std::optional<SeriesVector> inner = tail;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        SeriesVector g = denominators(*it);
        if (inner) g = add(g, *inner);
        inner = vector_divide(numerators(*it), g, N);
    }
    return *inner;
}

/// Tail about which nothing is known except that every component starts at z^-1.
inline SeriesVector unknown_tail(const CoeffTable& table) {
    return SeriesVector(std::size_t(table.p()), LaurentSeries::unknown(table.mode(), 1));
}

inline std::vector<CFTerm> cf_terms(int n, const CoeffTable& table) {
    std::vector<CFTerm> out;
    for (int k = 1; k <= n; ++k) out.push_back(cf_term(k, table));
    return out;
}

/// Depth-limited alternative expansion with an unknown remainder; the returned
/// validity ranges are exactly the guaranteed agreement ranges.
inline SeriesVector akv_expansion(int depth, int N, const CoeffTable& table) {
    if (depth < 1) throw domain_error("akv_expansion: depth must be at least 1");
    if (!table.is_bidiagonal())
        throw domain_error("akv_expansion requires a bidiagonal table");
    std::vector<CFTerm> terms;
    for (int k = 1; k <= depth; ++k) terms.push_back(akv_term(k, table));
    return eval_finite_cf(terms, unknown_tail(table), N);
}

}  // namespace lukas
