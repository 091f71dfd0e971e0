#pragma once

/**
 * @file charpoly.hpp
 * @brief Characteristic polynomials of the truncations H_n and the Hermite-Pade defect.
 *
 * q_n = det(z I_n - H_n) and q_{n,k} = det(z I_{n-k} - H_n^[k]), where H_n^[k]
 * drops the first k rows and columns. Both satisfy
 *   y_{m+1} = (z - a^(0)_m) y_m - sum_{i=1}^{p} a^(i)_{m-i} y_{m-i}
 * with y_0 = 1 for q_n and y_k = 1, y_m = 0 (m < k) for q_{n,k}; in
 * particular q_{n,k} = 0 when n < k.
 */

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lukas/algebra/coeff_table.hpp"
#include "lukas/errors.hpp"
#include "lukas/operators/hessenberg.hpp"
#include "lukas/series/laurent.hpp"

namespace lukas {

struct CharPolyPair {
    int n = 0;
    ZPolynomial q;                ///< q_n
    std::vector<ZPolynomial> qk;  ///< qk[k-1] = q_{n,k}, k = 1..p
};

namespace detail {

/// Solutions y_0..y_n of the difference equation with y_start = 1 and zeros before.
inline std::vector<ZPolynomial> charpoly_sequence(int start, int n, const CoeffTable& table) {
    RingKind kind = table.mode();
    int p = table.p();
    std::vector<ZPolynomial> y(std::size_t(std::max(n, start) + 1), ZPolynomial(kind));
    if (start <= n) y[std::size_t(start)] = ZPolynomial::constant(table.one());
    for (int m = start; m < n; ++m) {
        ZPolynomial next = ZPolynomial::linear(table.lookup(0, m)) * y[std::size_t(m)];
        for (int i = 1; i <= p && m - i >= start; ++i)
            next = next - y[std::size_t(m - i)].scaled(table.lookup(i, m - i));
        y[std::size_t(m + 1)] = next;
    }
    return y;
}

}  // namespace detail

inline CharPolyPair char_polys(int n, const CoeffTable& table) {
    if (n < 1) throw domain_error("char_polys: n must be at least 1");
    CharPolyPair out;
    out.n = n;
    out.q = detail::charpoly_sequence(0, n, table)[std::size_t(n)];
    for (int k = 1; k <= table.p(); ++k) {
        if (n < k)
            out.qk.emplace_back(table.mode());
        else
            out.qk.push_back(detail::charpoly_sequence(k, n, table)[std::size_t(n)]);
    }
    return out;
}

/// det(z I - M) for the block of H_n with indices [skip, n) by cofactor expansion.
/// Division-free, memoised over column subsets; intended for n <= 12.
inline ZPolynomial determinant_oracle(int n, int skip, const CoeffTable& table) {
    if (n - skip > 16) throw domain_error("determinant_oracle: block too large");
    RingKind kind = table.mode();
    int size = n - skip;
    if (size <= 0) return ZPolynomial::constant(table.one());
    BandedMatrixView view(OperatorKind::forward(0), table);
    std::vector<std::vector<ZPolynomial>> a(std::size_t(size), std::vector<ZPolynomial>(std::size_t(size), ZPolynomial{kind}));
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            ZPolynomial e = ZPolynomial::constant(-view.entry(i + skip, j + skip));
            if (i == j) e = e + ZPolynomial(kind, {table.zero(), table.one()});
            a[i][j] = e;
        }
    std::unordered_map<std::uint32_t, ZPolynomial> memo;
    // det of rows [row, size) against the columns in mask.
    std::function<ZPolynomial(int, std::uint32_t)> rec = [&](int row, std::uint32_t mask) -> ZPolynomial {
        if (row == size) return ZPolynomial::constant(table.one());
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        ZPolynomial sum(kind);
        int sign_pos = 0;
        for (int c = 0; c < size; ++c) {
            if (!(mask & (1u << c))) continue;
            if (!a[row][c].is_zero()) {
                ZPolynomial term = a[row][c] * rec(row + 1, mask & ~(1u << c));
                sum = (sign_pos % 2 == 0) ? sum + term : sum - term;
            }
            ++sign_pos;
        }
        memo.emplace(mask, sum);
        return sum;
    };
    return rec(0, (size == 32 ? 0u : (1u << size)) - 1u);
}

/// First exponent e with a nonzero coefficient of q_n phi_k - q_{n,k+1} up to z^(-N),
/// or N + 1 if every coefficient through z^(-N) vanishes. phi must be the forward
/// resolvent series of index k, valid to at least z^(-(N+n)).
inline int hp_defect_order(int n, int k, int N, const LaurentSeries& phi, const CoeffTable& table) {
    int p = table.p();
    if (n < 1) throw domain_error("hp_defect_order: n must be at least 1");
    if (k < 0 || k >= p) throw domain_error("hp_defect_order: k outside [0, p-1]");
    int nk = (n - k) >= 0 ? (n - k) / p : -1;
    if (N < nk + 2)
        throw validity_error("hp_defect_order: N=" + std::to_string(N) + " below required " + std::to_string(nk + 2));
    auto cp = char_polys(n, table);
    auto defect = LaurentSeries::product(cp.q.to_series(), phi, N) - cp.qk[std::size_t(k)].to_series();
    defect = defect.truncated(N);
    if (defect.valid_to() < N) throw validity_error("hp_defect_order: insufficient validity");
    for (int e = defect.min_exp(); e <= N; ++e)
        if (!defect.coeff(e).is_zero()) return e;
    return N + 1;
}

inline int hp_defect_order(int n, int k, int N, const CoeffTable& table) {
    if (k < 0 || k >= table.p()) throw domain_error("hp_defect_order: k outside [0, p-1]");
    return hp_defect_order(n, k, N, resolvent_series(OperatorKind::forward(0), k, N + n, table), table);
}

}  // namespace lukas
