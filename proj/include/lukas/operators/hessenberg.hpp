#pragma once

/**
 * @file hessenberg.hpp
 * @brief Banded Hessenberg operators, their moments and resolvent series.
 *
 * Every kind acts on basis vectors as M e_c = e_{c-1} + sum_k h_{c+k,c} e_{c+k}:
 *   Forward(q)    h_{c+k,c} = a^(k)_{c+q}         c >= 0, e_{-1} = 0
 *   Reflected(q)  h_{c+k,c} = a^(k)_{-k-q-c}      c >= 0, e_{-1} = 0
 *   TwoSided      h_{c+k,c} = a^(k)_c             c in Z
 * A moment <M^n e_j, e_0> is read off after n sparse applications. A
 * component at index c reaches 0 in r further steps only if c <= r, and for
 * the two-sided kind only if c >= -p r; anything else is dropped early.
 */

#include <map>
#include <string>
#include <vector>

#include "lukas/algebra/coeff_table.hpp"
#include "lukas/algebra/ring.hpp"
#include "lukas/errors.hpp"
#include "lukas/series/laurent.hpp"

namespace lukas {

struct OperatorKind {
    enum class Tag { forward, reflected, two_sided };
    Tag tag = Tag::forward;
    int q = 0;

    static OperatorKind forward(int q) { return {Tag::forward, q}; }
    static OperatorKind reflected(int q) { return {Tag::reflected, q}; }
    static OperatorKind two_sided() { return {Tag::two_sided, 0}; }

    bool one_sided() const { return tag != Tag::two_sided; }

    std::string to_string() const {
        switch (tag) {
            case Tag::forward: return "forward(" + std::to_string(q) + ")";
            case Tag::reflected: return "reflected(" + std::to_string(q) + ")";
            case Tag::two_sided: return "two-sided";
        }
        return "?";
    }
};

inline OperatorKind parse_operator_kind(const std::string& s, int q) {
    if (q < 0) throw domain_error("operator shift q must be nonnegative");
    if (s == "forward") return OperatorKind::forward(q);
    if (s == "reflected") return OperatorKind::reflected(q);
    if (s == "two-sided" || s == "twosided") {
        if (q != 0) throw domain_error("two-sided operator takes no shift");
        return OperatorKind::two_sided();
    }
    throw domain_error("unknown operator kind: " + s);
}

/// Read-only entry access for one operator over a coefficient table.
class BandedMatrixView {
  public:
    BandedMatrixView(OperatorKind kind, const CoeffTable& table) : kind_(kind), table_(table) {
        if (kind.q < 0) throw domain_error("operator shift q must be nonnegative");
    }

    OperatorKind kind() const { return kind_; }
    const CoeffTable& table() const { return table_; }
    int p() const { return table_.p(); }

    /// h_{c+k,c}, the coefficient of e_{c+k} in M e_c, for 0 <= k <= p.
    RingElement band(int c, int k) const {
        switch (kind_.tag) {
            case OperatorKind::Tag::forward: return table_.lookup(k, c + kind_.q);
            case OperatorKind::Tag::reflected: return table_.lookup(k, -k - kind_.q - c);
            case OperatorKind::Tag::two_sided: return table_.lookup(k, c);
        }
        return table_.zero();
    }

    /// Matrix entry h_{i,j}.
    RingElement entry(int i, int j) const {
        if (i == j - 1) return table_.one();
        int k = i - j;
        if (k < 0 || k > p()) return table_.zero();
        if (kind_.one_sided() && j < 0) return table_.zero();
        return band(j, k);
    }

    /// Principal n x n truncation (indices 0..n-1).
    std::vector<std::vector<RingElement>> dense(int n) const {
        std::vector<std::vector<RingElement>> m(std::size_t(n), std::vector<RingElement>(std::size_t(n), table_.zero()));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = entry(i, j);
        return m;
    }

  private:
    OperatorKind kind_;
    const CoeffTable& table_;
};

/// <M^n e_j, e_0> for n = 0..nmax.
inline std::vector<RingElement> moments_upto(OperatorKind kind, int nmax, int j, const CoeffTable& table) {
    int p = table.p();
    if (j < 0 || j > p) throw domain_error("basis index j outside [0, p]");
    if (nmax < 0) return {};
    BandedMatrixView view(kind, table);
    std::map<int, RingElement> v{{j, table.one()}};
    std::vector<RingElement> out;
    out.reserve(std::size_t(nmax + 1));
    auto read0 = [&] {
        auto it = v.find(0);
        return it == v.end() ? table.zero() : it->second;
    };
    out.push_back(read0());
    for (int t = 1; t <= nmax; ++t) {
        int rem = nmax - t;
        std::map<int, RingElement> w;
        auto add = [&](int c, const RingElement& x) {
            if (x.is_zero() || c > rem) return;
            if (kind.one_sided() && c < 0) return;
            if (!kind.one_sided() && c < -p * rem) return;
            auto [it, fresh] = w.try_emplace(c, x);
            if (!fresh) it->second += x;
        };
        for (auto& [c, x] : v) {
            add(c - 1, x);
            for (int k = 0; k <= p; ++k) {
                if (c + k > rem) break;
                RingElement h = view.band(c, k);
                if (!h.is_zero()) add(c + k, h * x);
            }
        }
        for (auto it = w.begin(); it != w.end();)
            it = it->second.is_zero() ? w.erase(it) : std::next(it);
        v = std::move(w);
        out.push_back(read0());
    }
    return out;
}

inline RingElement moment(OperatorKind kind, int n, int j, const CoeffTable& table) {
    if (n < 0) throw domain_error("moment power must be nonnegative");
    return moments_upto(kind, n, j, table).back();
}

/// sum_{n=0}^{N-1} <M^n e_j, e_0> z^(-n-1), valid to z^(-N); starts at z^(-j-1).
inline LaurentSeries resolvent_series(OperatorKind kind, int j, int N, const CoeffTable& table) {
    auto m = moments_upto(kind, N - 1, j, table);
    std::vector<RingElement> c;
    for (int n = 0; n < int(m.size()); ++n) {
        if (n < j) {
            if (!m[std::size_t(n)].is_zero()) throw error("nonzero moment below index j");
            continue;
        }
        c.push_back(m[std::size_t(n)]);
    }
    return LaurentSeries(table.mode(), j + 1, std::max(N, j), std::move(c));
}

}  // namespace lukas
