#pragma once

/**
 * @file identities.hpp
 * @brief Verification suites for the series, operator and continued-fraction identities.
 *
 * Every suite takes one coefficient table and returns one Report per
 * identity instance. Inputs are built independently (path enumeration for
 * family series, matrix powers for moments, recurrences for characteristic
 * polynomials) and compared coefficient by coefficient up to z^(-N).
 *
 * A tamper adds one to a single input, either a coefficient of one family
 * series or the constant term of one continued-fraction denominator entry,
 * so that exactly one side of the affected identities moves.
 */

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <variant>
#include <vector>

#include "lukas/algebra/coeff_table.hpp"
#include "lukas/errors.hpp"
#include "lukas/operators/charpoly.hpp"
#include "lukas/operators/hessenberg.hpp"
#include "lukas/paths/enumerate.hpp"
#include "lukas/paths/genetic.hpp"
#include "lukas/series/family.hpp"
#include "lukas/vcf/continued_fraction.hpp"
#include "lukas/vcf/report.hpp"

namespace lukas {

struct SeriesTamper {
    SeriesFamily family = SeriesFamily::A;
    int j = 0;
    int q = 0;
    int exponent = 1;
};

struct CfTamper {
    int stage = 1;
    int component = 0;
};

using Tamper = std::variant<std::monostate, SeriesTamper, CfTamper>;

/// Family series computed once per (family, j, q), valid to z^(-validity).
class SeriesCache {
  public:
    SeriesCache(const CoeffTable& table, int validity, Tamper tamper = {})
        : table_(table), validity_(validity), tamper_(std::move(tamper)) {}

    const CoeffTable& table() const { return table_; }
    int validity() const { return validity_; }

    /// F^(q)_j, with index -1 standing for the constant 1.
    const LaurentSeries& get(SeriesFamily f, int j, int q = 0) {
        auto key = std::make_tuple(int(f), j, q);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        LaurentSeries s = j < 0 ? LaurentSeries::one(table_.mode()) : series_from_family(f, j, q, validity_, table_);
        if (auto* t = std::get_if<SeriesTamper>(&tamper_); t && t->family == f && t->j == j && t->q == q)
            s = (s + LaurentSeries::monomial(table_.one(), t->exponent)).truncated(s.valid_to());
        return cache_.emplace(key, std::move(s)).first->second;
    }

    LaurentSeries A(int j, int q = 0) { return get(SeriesFamily::A, j, q); }
    LaurentSeries B(int j, int q = 0) { return get(SeriesFamily::B, j, q); }
    LaurentSeries W(int j) { return get(SeriesFamily::W, j, 0); }
    LaurentSeries S(int j, int q = 0) { return get(SeriesFamily::S, j, q); }
    LaurentSeries T(int j, int q = 0) { return get(SeriesFamily::T, j, q); }
    LaurentSeries R(int j) { return get(SeriesFamily::R, j, 0); }

    CFTerm term(int k) const { return tampered(cf_term(k, table_)); }
    CFTerm akv(int k) const { return tampered(akv_term(k, table_)); }

  private:
    const CoeffTable& table_;
    int validity_;
    Tamper tamper_;
    std::map<std::tuple<int, int, int>, LaurentSeries> cache_;

    CFTerm tampered(CFTerm t) const {
        if (auto* c = std::get_if<CfTamper>(&tamper_); c && c->stage == t.k) {
            if (c->component < 0 || c->component >= int(t.d.size())) throw domain_error("tamper component outside [0, p-1]");
            t.d[std::size_t(c->component)] = t.d[std::size_t(c->component)] + ZPolynomial::constant(table_.one());
        }
        return t;
    }
};

struct SuiteContext {
    const CoeffTable& table;
    int N;
    std::string label;
    Tamper tamper;

    int p() const { return table.p(); }
    SeriesCache cache() const { return SeriesCache(table, N + 1, tamper); }
    Report report(std::string id) const { return Report{std::move(id), p(), N, label}; }
    Report series(std::string id, const LaurentSeries& lhs, const LaurentSeries& rhs) const {
        return series_report(std::move(id), p(), N, label, lhs, rhs);
    }
};

namespace detail {

inline std::string idx(std::initializer_list<int> xs) {
    std::string s = "[";
    bool first = true;
    for (int x : xs) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + "]";
}

inline LaurentSeries scaled_by(const LaurentSeries& s, const RingElement& c) { return s.scaled(c); }

/// 1 / (z - a^(0)_k - sum_{j=1}^{p} a^(j)_k A^(k+1)_{j-1}).
inline LaurentSeries shifted_a0_inverse(SeriesCache& c, int k, int N) {
    const auto& t = c.table();
    LaurentSeries den = ZPolynomial::linear(t.lookup(0, k)).to_series();
    for (int j = 1; j <= t.p(); ++j) {
        RingElement a = t.lookup(j, k);
        if (!a.is_zero()) den = den - c.A(j - 1, k + 1).scaled(a);
    }
    return den.invert(N + 1);
}

}  // namespace detail

/// Resolvent/continued-fraction relations among the A^(k)_j series.
inline std::vector<Report> suite_theorem_A(const SuiteContext& ctx) {
    auto c = ctx.cache();
    const auto& t = ctx.table;
    int p = ctx.p(), N = ctx.N;
    std::vector<Report> out;
    RingKind kind = t.mode();

    for (int k = 0; k <= p + 1; ++k) {
        std::string sfx = k == 0 ? "" : "-shift" + detail::idx({k});
        out.push_back(ctx.series("A0-inverse" + sfx, c.A(0, k), detail::shifted_a0_inverse(c, k, N)));
        for (int j = 1; j <= p; ++j)
            out.push_back(ctx.series("Aj-product" + sfx + detail::idx({j}), c.A(j, k), c.A(0, k) * c.A(j - 1, k + 1)));
    }

    LaurentSeries lhs = LaurentSeries::z(kind) * c.A(0) - LaurentSeries::one(kind);
    LaurentSeries rhs = LaurentSeries::zero(kind);
    for (int j = 0; j <= p; ++j) {
        RingElement a = t.lookup(j, 0);
        if (!a.is_zero()) rhs = rhs + c.A(j).scaled(a);
    }
    out.push_back(ctx.series("zA0-sum", lhs, rhs));

    for (int j = 1; j <= p; ++j)
        for (int i = 0; i < j; ++i)
            out.push_back(ctx.series("Aj-split" + detail::idx({i, j}), c.A(j), c.A(i) * c.A(j - i - 1, i + 1)));

    // zA_0 - 1 split at every i in [0, p-1].
    for (int i = 0; i < p; ++i) {
        LaurentSeries r = LaurentSeries::zero(kind);
        for (int j = 0; j <= p; ++j) {
            RingElement a = t.lookup(j, 0);
            if (a.is_zero()) continue;
            r = r + (j <= i ? c.A(j) : c.A(i) * c.A(j - i - 1, i + 1)).scaled(a);
        }
        out.push_back(ctx.series("zA0-split" + detail::idx({i}), lhs, r));
    }
    return out;
}

/// Two-sided series W_j against one-sided A^(1), B^(1).
inline std::vector<Report> suite_theorem_W(const SuiteContext& ctx) {
    auto c = ctx.cache();
    const auto& t = ctx.table;
    int p = ctx.p(), N = ctx.N;
    std::vector<Report> out;

    LaurentSeries den = ZPolynomial::linear(t.lookup(0, 0)).to_series();
    for (int j = 1; j <= p; ++j)
        for (int k = 0; k <= j; ++k) {
            RingElement a = t.lookup(j, -k);
            if (a.is_zero()) continue;
            den = den - (c.A(j - k - 1, 1) * c.B(k - 1, 1)).scaled(a);
        }
    out.push_back(ctx.series("W0-inverse", c.W(0), den.invert(N + 1)));
    for (int j = 1; j <= p; ++j)
        out.push_back(ctx.series("Wj-product" + detail::idx({j}), c.W(j), c.W(0) * c.A(j - 1, 1)));
    for (int j = 1; j <= p; ++j)
        for (int i = 0; i < j; ++i)
            out.push_back(ctx.series("Wj-split" + detail::idx({i, j}), c.W(j), c.W(i) * c.A(j - i - 1, i + 1)));
    return out;
}

/// Relations among S, T and R in the bidiagonal case.
inline std::vector<Report> suite_bidiagonal(const SuiteContext& ctx) {
    if (!ctx.table.is_bidiagonal()) throw domain_error("bidiagonal suite requires a bidiagonal table");
    auto c = ctx.cache();
    const auto& t = ctx.table;
    int p = ctx.p(), N = ctx.N;
    RingKind kind = t.mode();
    std::vector<Report> out;
    auto a = [&](int n) { return t.lookup(p, n); };

    LaurentSeries den = LaurentSeries::z(kind) - c.S(p - 1, 1).scaled(a(0));
    out.push_back(ctx.series("S0-inverse", c.S(0), den.invert(N + 1)));
    for (int j = 1; j <= p; ++j)
        out.push_back(ctx.series("Sj-product" + detail::idx({j}), c.S(j), c.S(0) * c.S(j - 1, 1)));
    out.push_back(ctx.series("zS0-sum", LaurentSeries::z(kind) * c.S(0) - LaurentSeries::one(kind), c.S(p).scaled(a(0))));
    for (int j = 1; j <= p; ++j)
        for (int i = 0; i < j; ++i)
            out.push_back(ctx.series("Sj-split" + detail::idx({i, j}), c.S(j), c.S(i) * c.S(j - i - 1, i + 1)));

    LaurentSeries rden = LaurentSeries::z(kind);
    for (int l = 0; l <= p; ++l) rden = rden - (c.S(p - l - 1, 1) * c.T(l - 1, 1)).scaled(a(-l));
    out.push_back(ctx.series("R0-inverse", c.R(0), rden.invert(N + 1)));
    for (int j = 1; j <= p; ++j)
        out.push_back(ctx.series("Rj-product" + detail::idx({j}), c.R(j), c.R(0) * c.S(j - 1, 1)));
    for (int j = 1; j <= p; ++j)
        for (int i = 0; i < j; ++i)
            out.push_back(ctx.series("Rj-split" + detail::idx({i, j}), c.R(j), c.R(i) * c.S(j - i - 1, i + 1)));
    return out;
}

/// Resolvent series of the operators against the family series, shifts q <= 2.
inline std::vector<Report> suite_moments(const SuiteContext& ctx) {
    auto c = SeriesCache(ctx.table, ctx.N, ctx.tamper);
    int p = ctx.p(), N = ctx.N;
    std::vector<Report> out;
    for (int q = 0; q <= 2; ++q)
        for (int j = 0; j <= p; ++j) {
            out.push_back(ctx.series("forward-moments" + detail::idx({q, j}),
                                     resolvent_series(OperatorKind::forward(q), j, N, ctx.table), c.A(j, q)));
            out.push_back(ctx.series("reflected-moments" + detail::idx({q, j}),
                                     resolvent_series(OperatorKind::reflected(q), j, N, ctx.table), c.B(j, q)));
        }
    for (int j = 0; j <= p; ++j)
        out.push_back(ctx.series("two-sided-moments" + detail::idx({j}),
                                 resolvent_series(OperatorKind::two_sided(), j, N, ctx.table), c.W(j)));
    return out;
}

/// Finite continued fractions with and without the exact tail, stages 1..5.
inline std::vector<Report> suite_kalyagin(const SuiteContext& ctx, int max_stages = 5) {
    auto c = ctx.cache();
    const auto& t = ctx.table;
    int p = ctx.p(), N = ctx.N;
    std::vector<Report> out;
    SeriesVector target;
    for (int j = 0; j < p; ++j) target.push_back(c.A(j));
    ShiftedSeries src = [&c](int j, int q) { return c.A(j, q); };

    for (int n = 1; n <= max_stages; ++n) {
        std::vector<CFTerm> terms;
        for (int k = 1; k <= n; ++k) terms.push_back(c.term(k));
        auto with_tail = eval_finite_cf(terms, tail_vector(n, t, src), N);
        int upto = N;
        for (auto& s : with_tail) upto = std::min(upto, s.valid_to());
        Report r = vector_report("cf-with-tail" + detail::idx({n}), p, N, ctx.label, with_tail, target, upto);
        r.note = "guaranteed to z^-" + std::to_string(upto);
        if (upto < 1) r.fail(-1, upto, "empty guaranteed range", "");
        out.push_back(std::move(r));

        auto convergent = eval_finite_cf(terms, std::nullopt, N);
        auto cp = char_polys(n, t);
        SeriesVector hp;
        for (int k = 1; k <= p; ++k) hp.push_back(rational_to_series(cp.qk[std::size_t(k - 1)], cp.q, N));
        out.push_back(vector_report("cf-convergent" + detail::idx({n}), p, N, ctx.label, convergent, hp, N));
    }
    return out;
}

/// v_k = c_{k+1} / (d_{k+1} + v_{k+1}) for k = 0..2p+2.
inline std::vector<Report> suite_lemma_lft(const SuiteContext& ctx) {
    auto c = ctx.cache();
    const auto& t = ctx.table;
    int p = ctx.p(), N = ctx.N;
    std::vector<Report> out;
    ShiftedSeries src = [&c](int j, int q) { return c.A(j, q); };
    for (int k = 0; k <= 2 * p + 2; ++k) {
        auto lhs = tail_vector(k, t, src);
        auto next = c.term(k + 1);
        auto rhs = vector_divide(numerators(next), add(denominators(next), tail_vector(k + 1, t, src)), N);
        out.push_back(vector_report("lft" + detail::idx({k}), p, N, ctx.label, lhs, rhs, N));
    }
    return out;
}

/// Defect order of q_n phi_k - q_{n,k+1} is at least floor((n-k)/p) + 1, n <= 8.
inline std::vector<Report> suite_hp_order(const SuiteContext& ctx, int max_n = 8) {
    int p = ctx.p();
    std::vector<Report> out;
    int top = std::max(ctx.N, max_n / p + 2);
    std::vector<LaurentSeries> phi;
    for (int k = 0; k < p; ++k)
        phi.push_back(resolvent_series(OperatorKind::forward(0), k, top + max_n, ctx.table));
    for (int n = 1; n <= max_n; ++n)
        for (int k = 0; k < p; ++k) {
            int nk = n - k >= 0 ? (n - k) / p : -1;
            int order = hp_defect_order(n, k, std::max(ctx.N, nk + 2), phi[std::size_t(k)], ctx.table);
            Report r = ctx.report("hp-order" + detail::idx({n, k}));
            r.note = "order " + std::to_string(order) + ", required " + std::to_string(nk + 1);
            if (order < nk + 1) r.fail(k, order, "order " + std::to_string(order), ">= " + std::to_string(nk + 1));
            out.push_back(std::move(r));
        }
    return out;
}

/// Nested sums against enumerated R, S^(q), T^(q) polynomials; m <= 3, q <= 2.
inline std::vector<Report> suite_genetic(const SuiteContext& ctx, int max_m = 3) {
    const auto& t = ctx.table;
    int p = ctx.p();
    std::vector<Report> out;
    for (int m = 0; m <= max_m; ++m)
        for (int j = 0; j <= p; ++j)
            for (int q = 0; q <= 2; ++q) {
                int n = m * (p + 1) + j;
                std::vector<std::pair<GeneticFamily, Family>> fams{{GeneticFamily::S, Family::S},
                                                                   {GeneticFamily::T, Family::Shat}};
                if (q == 0) fams.insert(fams.begin(), {GeneticFamily::R, Family::R});
                for (auto [gf, pf] : fams) {
                    std::string name = gf == GeneticFamily::R ? "R" : gf == GeneticFamily::S ? "S" : "T";
                    Report r = ctx.report("genetic-" + name + detail::idx({m, j, q}));
                    auto lhs = genetic_sum(gf, m, j, q, t);
                    auto rhs = weight_polynomial(FamilySpec{pf, p, n, j, q}, t);
                    if (!(lhs == rhs)) r.fail(0, n + 1, lhs.to_string(), rhs.to_string());
                    out.push_back(std::move(r));
                }
            }
    return out;
}

/// Closed-form counts against enumeration; m <= 4.
inline std::vector<Report> suite_count(const SuiteContext& ctx, int max_m = 4) {
    int p = ctx.p();
    std::vector<Report> out;
    for (int m = 0; m <= max_m; ++m)
        for (int j = 0; j <= p; ++j) {
            int n = m * (p + 1) + j;
            for (Family f : {Family::R, Family::S, Family::Shat}) {
                Report r = ctx.report(std::string("count-") + to_string(f) + detail::idx({m, j}));
                BigInt closed = f == Family::R ? binomial(n, m) : fuss_catalan(p, m, j);
                BigInt enumerated = enumeration_count(FamilySpec{f, p, n, j, 0});
                BigInt via_count = count(FamilySpec{f, p, n, j, 0});
                if (closed != enumerated || via_count != enumerated)
                    r.fail(0, n + 1, closed.str(), enumerated.str());
                out.push_back(std::move(r));
            }
        }
    return out;
}

/// T_[n,j] equals S_[n,j] under a_k -> a_{-p-k}; pathwise relabeling for D, n <= 10.
inline std::vector<Report> suite_reflection(const SuiteContext& ctx, int max_n = 10) {
    int p = ctx.p();
    auto sym = CoeffTable::symbolic(p);
    std::vector<Report> out;
    auto relabel = [p](VariableId v) { return v.k == p ? VariableId{p, -p - v.n} : v; };
    for (int n = 0; n <= max_n; ++n)
        for (int j = 0; j <= p; ++j) {
            Report r{"reflection-ST" + detail::idx({n, j}), p, ctx.N, "symbolic"};
            auto s = weight_polynomial(FamilySpec{Family::S, p, n, j, 0}, sym).poly();
            auto tt = weight_polynomial(FamilySpec{Family::Shat, p, n, j, 0}, sym).poly();
            auto mapped = s.substitute(relabel);
            if (!(mapped == tt)) r.fail(0, n + 1, mapped.to_string(), tt.to_string());
            out.push_back(std::move(r));
        }
    for (int n = 0; n <= std::min(max_n, 7); ++n)
        for (int j = 0; j <= p; ++j) {
            Report r{"reflection-D" + detail::idx({n, j}), p, ctx.N, "symbolic"};
            enumerate(FamilySpec{Family::D, p, n, j, 0}, [&](const LatticePath& g) {
                auto h = reflect_hat(g, p);
                if (!is_member(h, FamilySpec{Family::Dhat, p, n, j, 0}) || !(reflect(h) == g)) {
                    r.fail(0, n + 1, encode(g), encode(h));
                    return;
                }
                auto lhs = path_weight(h, sym).poly();
                auto rhs = path_weight(g, sym).poly().substitute(reflect_variable);
                if (!(lhs == rhs)) r.fail(0, n + 1, lhs.to_string(), rhs.to_string());
            });
            Report card{"reflection-card" + detail::idx({n, j}), p, ctx.N, "symbolic"};
            auto cd = enumeration_count(FamilySpec{Family::D, p, n, j, 0});
            auto ch = enumeration_count(FamilySpec{Family::Dhat, p, n, j, 0});
            if (cd != ch) card.fail(0, n + 1, cd.str(), ch.str());
            out.push_back(std::move(r));
            out.push_back(std::move(card));
        }
    return out;
}

/// Alternative bidiagonal expansion: agreement with S on a range that grows with depth.
inline std::vector<Report> suite_akv(const SuiteContext& ctx, int max_depth = 6) {
    if (!ctx.table.is_bidiagonal()) throw domain_error("akv suite requires a bidiagonal table");
    auto c = ctx.cache();
    int p = ctx.p(), N = ctx.N;
    SeriesVector target;
    for (int j = 0; j < p; ++j) target.push_back(c.S(j));
    std::vector<Report> out;
    int prev = INT_MIN;
    int first = 0;
    for (int depth = 1; depth <= max_depth; ++depth) {
        std::vector<CFTerm> terms;
        for (int k = 1; k <= depth; ++k) terms.push_back(c.akv(k));
        auto val = eval_finite_cf(terms, unknown_tail(ctx.table), N);
        int range = N;
        for (auto& s : val) range = std::min(range, s.valid_to());
        Report r = vector_report("akv" + detail::idx({depth}), p, N, ctx.label, val, target, range);
        r.note = "guaranteed to z^-" + std::to_string(range);
        if (range < prev) r.fail(-1, range, "range " + std::to_string(range), ">= " + std::to_string(prev));
        if (depth == 1) first = range;
        if (depth == max_depth && range <= first && range < N)
            r.fail(-1, range, "range did not grow", std::to_string(first));
        prev = range;
        out.push_back(std::move(r));
    }
    return out;
}

/// Scalar case p = 1: low moments, Flajolet's convolution and the Jacobi fraction stages.
inline std::vector<Report> suite_scalar(const SuiteContext& ctx) {
    const auto& t = ctx.table;
    if (t.p() != 1) throw domain_error("scalar suite requires p = 1");
    auto c = ctx.cache();
    int N = ctx.N;
    std::vector<Report> out;
    auto b = [&](int m) { return t.lookup(0, m); };
    auto a = [&](int m) { return t.lookup(1, m); };
    std::vector<RingElement> s{b(0), b(0) * b(0) + a(0),
                               b(0) * b(0) * b(0) + RingElement::from_int(t.mode(), 2) * a(0) * b(0) + a(0) * b(1),
                               b(0) * b(0) * b(0) * b(0) + RingElement::from_int(t.mode(), 3) * a(0) * b(0) * b(0) +
                                   RingElement::from_int(t.mode(), 2) * a(0) * b(0) * b(1) + a(0) * b(1) * b(1) +
                                   a(0) * a(0) + a(0) * a(1)};
    for (int n = 1; n <= 4; ++n) {
        Report r = ctx.report("low-moment" + detail::idx({n}));
        auto w = weight_polynomial(FamilySpec{Family::D, 1, n, 0, 0}, t);
        if (!(w == s[std::size_t(n - 1)])) r.fail(0, n + 1, w.to_string(), s[std::size_t(n - 1)].to_string());
        out.push_back(std::move(r));
    }
    // A_[n] = b_0 A_[n-1] + a_0 sum_{k=0}^{n-2} A^(1)_[k] A_[n-k-2], read off the series.
    auto A = c.A(0), A1 = c.A(0, 1);
    Report f = ctx.report("flajolet");
    for (int n = 1; n < N; ++n) {
        RingElement rhs = b(0) * A.coeff(n);
        for (int k = 0; k <= n - 2; ++k) rhs += a(0) * A1.coeff(k + 1) * A.coeff(n - k - 1);
        if (!(A.coeff(n + 1) == rhs)) f.fail(0, n + 1, A.coeff(n + 1).to_string(), rhs.to_string());
    }
    out.push_back(std::move(f));
    out.push_back(ctx.series("m-inverse", A,
                             (ZPolynomial::linear(b(0)).to_series() - A1.scaled(a(0))).invert(N + 1)));
    Report j = ctx.report("jacobi-stages");
    for (int k = 1; k <= 4; ++k) {
        auto term = c.term(k);
        RingElement ck = k == 1 ? t.one() : -a(k - 2);
        if (!(term.c[0] == ck)) j.fail(0, k, term.c[0].to_string(), ck.to_string());
        if (!(term.d[0] == ZPolynomial::linear(b(k - 1)))) j.fail(0, k, term.d[0].to_string(), "z - b");
    }
    out.push_back(std::move(j));
    return out;
}

/// Names accepted by run_suite, in the order "all" runs them.
inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"scalar",  "prop-4.1",  "theorem-A", "theorem-W",  "bidiagonal",
                                                "akv",     "genetic",   "count",     "kalyagin",   "lemma-lft",
                                                "hp-order", "reflection"};
    return names;
}

/// Suites whose inputs can be tampered with.
inline bool suite_supports_tamper(const std::string& s) {
    return s == "scalar" || s == "prop-4.1" || s == "theorem-A" || s == "theorem-W" || s == "bidiagonal" ||
           s == "akv" || s == "kalyagin" || s == "lemma-lft";
}

/// Tamper used when none is located explicitly: one that the suite is sensitive to.
inline Tamper default_tamper(const std::string& suite, int p) {
    if (suite == "theorem-W") return SeriesTamper{SeriesFamily::W, 0, 0, 3};
    if (suite == "bidiagonal") return SeriesTamper{SeriesFamily::S, 0, 0, 3};
    if (suite == "akv" || suite == "kalyagin" || suite == "lemma-lft") return CfTamper{1, p - 1};
    return SeriesTamper{SeriesFamily::A, 0, 0, 3};
}

/// "series:<F>:<j>:<q>:<exponent>" or "cf:<stage>:<component>".
inline Tamper parse_tamper(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i)
        if (i == text.size() || text[i] == ':') {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    auto num = [&](const std::string& x) {
        try {
            std::size_t used = 0;
            int v = std::stoi(x, &used);
            if (used != x.size()) throw std::invalid_argument(x);
            return v;
        } catch (const std::exception&) {
            throw domain_error("tamper: '" + x + "' is not an integer");
        }
    };
    if (parts.size() == 5 && parts[0] == "series") {
        SeriesTamper t{parse_series_family(parts[1]), num(parts[2]), num(parts[3]), num(parts[4])};
        if (t.j < 0 || t.q < 0 || t.exponent < 1) throw domain_error("tamper: need j, q >= 0 and exponent >= 1");
        return t;
    }
    if (parts.size() == 3 && parts[0] == "cf") {
        CfTamper t{num(parts[1]), num(parts[2])};
        if (t.stage < 1 || t.component < 0) throw domain_error("tamper: need stage >= 1 and component >= 0");
        return t;
    }
    throw domain_error("tamper: expected series:<F>:<j>:<q>:<exponent> or cf:<stage>:<component>");
}

struct RunConfig {
    int p = 1;
    int N = 12;
    RingKind mode = RingKind::symbolic;
    std::optional<CoeffTable> coeffs;  ///< explicit numeric table
    std::uint64_t seed = 1;
    int tables = 1;
    bool tamper = false;
    Tamper tamper_at;  ///< monostate selects default_tamper
};

/// Thread cap from LUKAS_VCF_THREADS, defaulting to the hardware concurrency.
inline unsigned thread_cap() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("LUKAS_VCF_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return unsigned(v);
    }
    return hw;
}

inline std::vector<Report> run_one(const std::string& suite, const SuiteContext& ctx) {
    if (suite == "scalar") return suite_scalar(ctx);
    if (suite == "prop-4.1") return suite_moments(ctx);
    if (suite == "theorem-A") return suite_theorem_A(ctx);
    if (suite == "theorem-W") return suite_theorem_W(ctx);
    if (suite == "bidiagonal") return suite_bidiagonal(ctx);
    if (suite == "akv") return suite_akv(ctx);
    if (suite == "genetic") return suite_genetic(ctx);
    if (suite == "count") return suite_count(ctx);
    if (suite == "kalyagin") return suite_kalyagin(ctx);
    if (suite == "lemma-lft") return suite_lemma_lft(ctx);
    if (suite == "hp-order") return suite_hp_order(ctx);
    if (suite == "reflection") return suite_reflection(ctx);
    throw domain_error("unknown suite '" + suite + "'");
}

/// Runs one suite (or "all") over every table of the configuration. Jobs run in
/// parallel; reports come back in job order, independent of scheduling.
inline std::vector<Report> run_suite(const std::string& suite, const RunConfig& cfg) {
    if (cfg.p < 1) throw domain_error("p must be at least 1");
    if (cfg.N < 1) throw domain_error("N must be at least 1");
    if (cfg.tables < 1) throw domain_error("tables must be at least 1");
    std::vector<std::string> suites;
    if (suite == "all") {
        for (auto& s : suite_names())
            if (s != "scalar" || cfg.p == 1) suites.push_back(s);
    } else {
        if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
            throw domain_error("unknown suite '" + suite + "'");
        if (cfg.tamper && !suite_supports_tamper(suite)) throw domain_error("suite '" + suite + "' cannot be tampered");
        suites.push_back(suite);
    }

    struct Job {
        std::string suite;
        std::size_t table;
        std::string label;
        Tamper tamper;
    };
    std::vector<CoeffTable> tables;
    std::vector<std::string> labels;
    auto add_table = [&](CoeffTable t, std::string label) {
        tables.push_back(std::move(t));
        labels.push_back(std::move(label));
        return tables.size() - 1;
    };
    std::map<bool, std::vector<std::size_t>> by_shape;
    for (bool bd : {false, true}) {
        if (cfg.coeffs) {
            if (bd && !cfg.coeffs->is_bidiagonal()) continue;
            by_shape[bd].push_back(add_table(*cfg.coeffs, "file"));
        } else if (cfg.mode == RingKind::symbolic) {
            by_shape[bd].push_back(add_table(CoeffTable::symbolic(cfg.p, bd), "symbolic"));
        } else {
            auto [lo, hi] = default_window(cfg.p, cfg.N);
            for (int i = 0; i < cfg.tables; ++i) {
                std::uint64_t seed = cfg.seed + std::uint64_t(i);
                by_shape[bd].push_back(add_table(CoeffTable::random(cfg.p, seed, lo, hi, bd), "seed=" + std::to_string(seed)));
            }
        }
    }
    std::vector<Job> jobs;
    for (auto& s : suites) {
        bool bd = s == "bidiagonal" || s == "akv";
        if (bd && by_shape[true].empty()) throw domain_error("suite '" + s + "' requires a bidiagonal table");
        Tamper tp;
        if (cfg.tamper && suite_supports_tamper(s))
            tp = std::holds_alternative<std::monostate>(cfg.tamper_at) ? default_tamper(s, cfg.p) : cfg.tamper_at;
        for (auto idx : by_shape[bd]) jobs.push_back({s, idx, labels[idx], tp});
    }

    std::vector<std::vector<Report>> results(jobs.size());
    std::vector<std::string> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < jobs.size();) {
            try {
                SuiteContext ctx{tables[jobs[i].table], cfg.N, jobs[i].label, jobs[i].tamper};
                results[i] = run_one(jobs[i].suite, ctx);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    unsigned n = std::min<unsigned>(thread_cap(), unsigned(jobs.size()));
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (!e.empty()) throw domain_error(e);
    std::vector<Report> out;
    for (auto& r : results) out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    return out;
}

inline bool all_pass(const std::vector<Report>& rs) {
    return std::all_of(rs.begin(), rs.end(), [](const Report& r) { return r.pass; });
}

}  // namespace lukas
