/**
 * @file acceptance.cpp
 * @brief Acceptance runner: one PASS/FAIL line per criterion, with its runtime limit.
 *
 * Every comparison is exact (zero tolerance); a criterion also fails when it
 * exceeds its wall-clock limit. Exit status is nonzero if any criterion fails.
 */

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lukas/lukas.hpp"

using namespace lukas;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
    /// Folds a batch of reports; the first failing identity becomes the detail.
    void reports(const std::vector<Report>& rs, std::size_t& checked) {
        for (auto& r : rs) {
            ++checked;
            if (!r.pass) {
                std::ostringstream s;
                s << r.identity << " p=" << r.p << " [" << r.table << "]";
                if (!r.failures.empty()) s << " component=" << r.failures[0].component << " exponent=" << r.failures[0].exponent;
                if (!r.note.empty()) s << " (" << r.note << ")";
                require(false, s.str());
            }
        }
    }
};

std::vector<CoeffTable> random_tables(int p, int N, int count, std::uint64_t seed, bool bidiagonal = false) {
    auto [lo, hi] = default_window(p, N);
    std::vector<CoeffTable> out;
    for (int i = 0; i < count; ++i) out.push_back(CoeffTable::random(p, seed + std::uint64_t(i), lo, hi, bidiagonal));
    return out;
}

std::string label(std::uint64_t seed) { return "seed=" + std::to_string(seed); }

/// 1. Scalar weight polynomials s_1..s_4 as structural polynomial equality.
Outcome scalar_regression(std::size_t& checked) {
    Outcome o;
    auto t = CoeffTable::symbolic(1);
    auto b = [&](int m) { return t.lookup(0, m); };
    auto a = [&](int m) { return t.lookup(1, m); };
    auto two = RingElement::from_int(RingKind::symbolic, 2), three = RingElement::from_int(RingKind::symbolic, 3);
    std::vector<RingElement> s{
        b(0),
        b(0) * b(0) + a(0),
        b(0) * b(0) * b(0) + two * a(0) * b(0) + a(0) * b(1),
        b(0) * b(0) * b(0) * b(0) + three * a(0) * b(0) * b(0) + two * a(0) * b(0) * b(1) + a(0) * b(1) * b(1) +
            a(0) * a(0) + a(0) * a(1),
    };
    for (int n = 1; n <= 4; ++n) {
        ++checked;
        auto w = weight_polynomial(FamilySpec{Family::D, 1, n, 0, 0}, t);
        o.require(w == s[std::size_t(n - 1)], "s_" + std::to_string(n) + ": " + w.to_string());
    }
    return o;
}

/// 2. Enumerated weights against matrix-power moments for A, B and W.
Outcome oracle_equivalence(std::size_t& checked) {
    Outcome o;
    const int nmax = 8;
    for (int p = 1; p <= 3; ++p) {
        auto t = CoeffTable::symbolic(p);
        for (int j = 0; j <= p; ++j) {
            for (int q = 0; q <= 2; ++q) {
                auto fwd = moments_upto(OperatorKind::forward(q), nmax, j, t);
                auto ref = moments_upto(OperatorKind::reflected(q), nmax, j, t);
                auto dw = weight_polynomials_upto(Family::D, j, q, nmax, t);
                auto hw = weight_polynomials_upto(Family::Dhat, j, q, nmax, t);
                for (int n = 0; n <= nmax; ++n) {
                    checked += 2;
                    std::string at = " p=" + std::to_string(p) + " q=" + std::to_string(q) + " j=" + std::to_string(j) +
                                     " n=" + std::to_string(n);
                    o.require(fwd[std::size_t(n)] == dw[std::size_t(n)], "A" + at);
                    o.require(ref[std::size_t(n)] == hw[std::size_t(n)], "B" + at);
                }
            }
            auto two = moments_upto(OperatorKind::two_sided(), nmax, j, t);
            auto pw = weight_polynomials_upto(Family::P, j, 0, nmax, t);
            for (int n = 0; n <= nmax; ++n) {
                ++checked;
                o.require(two[std::size_t(n)] == pw[std::size_t(n)],
                          "W p=" + std::to_string(p) + " j=" + std::to_string(j) + " n=" + std::to_string(n));
            }
        }
    }
    return o;
}

/// 3. Resolvent relations among the A series, symbolic to N = 10.
Outcome theorem_a(std::size_t& checked) {
    Outcome o;
    for (int p = 1; p <= 3; ++p) {
        auto t = CoeffTable::symbolic(p);
        o.reports(suite_theorem_A(SuiteContext{t, 10, "symbolic", {}}), checked);
    }
    return o;
}

/// 4. Two-sided relations: symbolic N = 8 for p <= 2, 20 numeric tables for p = 3 at N = 10.
Outcome theorem_w(std::size_t& checked) {
    Outcome o;
    for (int p = 1; p <= 2; ++p) {
        auto t = CoeffTable::symbolic(p);
        o.reports(suite_theorem_W(SuiteContext{t, 8, "symbolic", {}}), checked);
    }
    std::uint64_t seed = 1000;
    for (auto& t : random_tables(3, 10, 20, seed)) o.reports(suite_theorem_W(SuiteContext{t, 10, label(seed++), {}}), checked);
    return o;
}

/// 5. Nested sums against enumerated R, S^(q), T^(q) polynomials.
Outcome genetic(std::size_t& checked) {
    Outcome o;
    for (int p = 1; p <= 3; ++p) {
        auto t = CoeffTable::symbolic(p, true);
        o.reports(suite_genetic(SuiteContext{t, 10, "symbolic", {}}, 3), checked);
    }
    return o;
}

/// 6. Binomial and Fuss-Catalan counts against enumeration.
Outcome counting(std::size_t& checked) {
    Outcome o;
    for (int p = 1; p <= 3; ++p) {
        auto t = CoeffTable::symbolic(p);
        o.reports(suite_count(SuiteContext{t, 10, "symbolic", {}}, 4), checked);
    }
    checked += 2;
    o.require(count(FamilySpec{Family::R, 2, 6, 0, 0}) == 15, "R p=2 m=2 j=0 != 15");
    o.require(count(FamilySpec{Family::S, 2, 6, 0, 0}) == 3, "S p=2 m=2 j=0 != 3");
    return o;
}

/// 7. Finite fractions with exact tail and convergents, n <= 5, N = 10.
Outcome kalyagin(std::size_t& checked) {
    Outcome o;
    for (int p = 1; p <= 2; ++p) {
        auto t = CoeffTable::symbolic(p);
        o.reports(suite_kalyagin(SuiteContext{t, 10, "symbolic", {}}, 5), checked);
    }
    std::uint64_t seed = 2000;
    for (auto& t : random_tables(3, 10, 20, seed)) o.reports(suite_kalyagin(SuiteContext{t, 10, label(seed++), {}}, 5), checked);
    return o;
}

/// 8. Hermite-Pade defect order for n <= 8, 20 tables per p.
Outcome hermite_pade(std::size_t& checked) {
    Outcome o;
    for (int p = 1; p <= 3; ++p) {
        std::uint64_t seed = 3000 + 100 * std::uint64_t(p);
        for (auto& t : random_tables(p, 10, 20, seed))
            o.reports(suite_hp_order(SuiteContext{t, 10, label(seed++), {}}, 8), checked);
    }
    return o;
}

/// 9. S and T polynomials related by a_k -> a_{-p-k}, n <= 10.
Outcome reflection(std::size_t& checked) {
    Outcome o;
    for (int p = 1; p <= 3; ++p) {
        auto t = CoeffTable::symbolic(p);
        o.reports(suite_reflection(SuiteContext{t, 10, "symbolic", {}}, 10), checked);
    }
    return o;
}

/// 10. Every single-coefficient tamper is caught and located.
Outcome negative_controls(std::size_t& checked) {
    Outcome o;
    auto located = [](const std::vector<Report>& rs, int exponent, int components) {
        for (auto& r : rs)
            for (auto& f : r.failures)
                if (f.component >= 0 && f.component < components && f.exponent >= 1 &&
                    (exponent < 0 || f.exponent == exponent))
                    return true;
        return false;
    };
    const int N = 10;
    for (int p = 1; p <= 3; ++p) {
        auto t = random_tables(p, N, 1, 4000 + std::uint64_t(p))[0];
        auto bd = random_tables(p, 2 * N, 1, 4100 + std::uint64_t(p), true)[0];
        std::string at = " p=" + std::to_string(p);
        // Continued-fraction denominators: every stage and component.
        for (int stage = 1; stage <= 5; ++stage)
            for (int c = 0; c < p; ++c) {
                ++checked;
                auto rs = suite_kalyagin(SuiteContext{t, N, "tamper", CfTamper{stage, c}}, 5);
                o.require(located(rs, -1, p), "cf stage " + std::to_string(stage) + " component " + std::to_string(c) + at);
            }
        // Deep stages act beyond z^-N; a longer window keeps every stage observable.
        const int n_akv = 2 * N;
        for (int stage = 1; stage <= 6; ++stage)
            for (int c = 0; c < p; ++c) {
                ++checked;
                auto rs = suite_akv(SuiteContext{bd, n_akv, "tamper", CfTamper{stage, c}}, 6);
                o.require(located(rs, -1, p), "akv stage " + std::to_string(stage) + " component " + std::to_string(c) + at);
            }
        // Series coefficients: every exponent of A^(q)_j, W_j and S_j.
        for (int j = 0; j <= p; ++j)
            for (int e = j + 1; e <= N; ++e) {
                for (int q = 0; q <= 1; ++q) {
                    ++checked;
                    auto rs = suite_theorem_A(SuiteContext{t, N, "tamper", SeriesTamper{SeriesFamily::A, j, q, e}});
                    o.require(located(rs, e, 1), "A_" + std::to_string(j) + "^(" + std::to_string(q) + ") z^-" + std::to_string(e) + at);
                }
                ++checked;
                auto rw = suite_theorem_W(SuiteContext{t, N, "tamper", SeriesTamper{SeriesFamily::W, j, 0, e}});
                o.require(located(rw, e, 1), "W_" + std::to_string(j) + " z^-" + std::to_string(e) + at);
                ++checked;
                auto rsb = suite_bidiagonal(SuiteContext{bd, N, "tamper", SeriesTamper{SeriesFamily::S, j, 0, e}});
                o.require(located(rsb, e, 1), "S_" + std::to_string(j) + " z^-" + std::to_string(e) + at);
            }
    }
    return o;
}

struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome(std::size_t&)> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "scalar weight polynomials s_1..s_4", 1, scalar_regression},
        {2, "path weights equal operator moments (A, B, W; n <= 8)", 120, oracle_equivalence},
        {3, "A-series relations, symbolic, N=10, p<=3", 120, theorem_a},
        {4, "W-series relations, symbolic p<=2 N=8, numeric p=3 N=10 x20", 180, theorem_w},
        {5, "genetic sums equal enumeration, p<=3 m<=3 q<=2", 60, genetic},
        {6, "binomial and Fuss-Catalan counts, p<=3 m<=4", 60, counting},
        {7, "finite continued fractions and convergents, n<=5 N=10", 180, kalyagin},
        {8, "Hermite-Pade defect order, n<=8, 20 tables per p", 60, hermite_pade},
        {9, "reflection relabeling of S onto T, p<=3 n<=10", 30, reflection},
        {10, "single-coefficient tampering is detected and located", 30, negative_controls},
    };
    int failed = 0;
    std::cout << "tolerance: exact equality of every coefficient (zero tolerance)\n";
    for (auto& c : criteria) {
        std::size_t checked = 0;
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            o = c.run(checked);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && secs > c.limit_s) {
            o.ok = false;
            o.detail = "runtime limit exceeded";
        }
        if (!o.ok) ++failed;
        std::cout << "criterion " << std::setw(2) << c.id << ": " << (o.ok ? "PASS" : "FAIL") << "  " << c.name << "  ["
                  << checked << " checks, " << std::fixed << std::setprecision(2) << secs << " s, limit " << c.limit_s
                  << " s]";
        if (!o.ok) std::cout << "  " << o.detail;
        std::cout << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
