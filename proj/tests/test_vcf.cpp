/**
 * @file test_vcf.cpp
 * @brief Continued-fraction stages, tails, finite evaluation, suites and report encoding.
 */

#include <gtest/gtest.h>

#include <cstdlib>

#include "lukas/lukas.hpp"

using namespace lukas;

namespace {

ZPolynomial z_minus(const RingElement& c) { return ZPolynomial::linear(c); }

bool all_pass_in(const std::vector<Report>& rs) {
    for (auto& r : rs)
        if (!r.pass) {
            ADD_FAILURE() << r.identity << " [" << r.table << "] " << r.note
                          << (r.failures.empty() ? "" : " exponent " + std::to_string(r.failures[0].exponent));
            return false;
        }
    return !rs.empty();
}

const Report* first_failure(const std::vector<Report>& rs) {
    for (auto& r : rs)
        if (!r.pass) return &r;
    return nullptr;
}

}  // namespace

TEST(CfTerm, FirstStage) {
    auto t = CoeffTable::symbolic(2);
    auto c1 = cf_term(1, t);
    ASSERT_EQ(c1.c.size(), 2u);
    EXPECT_EQ(c1.c[0], t.one());
    EXPECT_EQ(c1.c[1], t.one());
    EXPECT_TRUE(c1.d[0].is_zero());
    EXPECT_EQ(c1.d[1], z_minus(t.lookup(0, 0)));
    EXPECT_THROW(cf_term(0, t), domain_error);
}

TEST(CfTerm, RegimeBoundary) {
    auto t = CoeffTable::symbolic(2);
    auto c2 = cf_term(2, t), c3 = cf_term(3, t);
    EXPECT_EQ(c2.c[0], t.one());
    EXPECT_EQ(c3.c[0], -t.lookup(2, 0));
    EXPECT_EQ(c3.c[1], t.one());
    EXPECT_EQ(c2.d[0], ZPolynomial::constant(-t.lookup(1, 0)));
    EXPECT_EQ(c3.d[0], ZPolynomial::constant(-t.lookup(1, 1)));
    EXPECT_EQ(c3.d[1], z_minus(t.lookup(0, 2)));
}

TEST(CfTerm, ScalarCaseIsJacobiFraction) {
    auto t = CoeffTable::symbolic(1);
    for (int k = 2; k <= 5; ++k) {
        auto c = cf_term(k, t);
        EXPECT_EQ(c.c[0], -t.lookup(1, k - 2));
        EXPECT_EQ(c.d[0], z_minus(t.lookup(0, k - 1)));
    }
}

TEST(TailVector, FirstRegimeInstances) {
    auto t = CoeffTable::symbolic(2);
    int N = 8;
    auto v0 = tail_vector(0, N, t);
    EXPECT_TRUE(compare(v0[0], series_from_family(SeriesFamily::A, 0, 0, N, t), N).empty());
    EXPECT_TRUE(compare(v0[1], series_from_family(SeriesFamily::A, 1, 0, N, t), N).empty());
    auto v1 = tail_vector(1, N, t);
    auto A0 = series_from_family(SeriesFamily::A, 0, 1, N, t), A1 = series_from_family(SeriesFamily::A, 1, 1, N, t);
    EXPECT_TRUE(compare(v1[0], A0, N).empty());
    auto expected = -(A0.scaled(t.lookup(1, 0)) + A1.scaled(t.lookup(2, 0)));
    EXPECT_TRUE(compare(v1[1], expected, N).empty());
}

TEST(TailVector, SecondRegimeLeadingTerms) {
    // p = 2, k = 3: v = (-a^(2)_1 A^(3)_0, -a^(1)_2 A^(3)_0 - a^(2)_2 A^(3)_1)
    auto t = CoeffTable::symbolic(2);
    auto v3 = tail_vector(3, 6, t);
    EXPECT_EQ(v3[0].leading_exponent(), 1);
    EXPECT_EQ(v3[0].coeff(1), -t.lookup(2, 1));
    EXPECT_EQ(v3[0].coeff(2), -t.lookup(2, 1) * t.lookup(0, 3));
    EXPECT_EQ(v3[1].coeff(1), -t.lookup(1, 2));
    EXPECT_EQ(v3[1].coeff(2), -t.lookup(1, 2) * t.lookup(0, 3) - t.lookup(2, 2));
}

TEST(FiniteCf, ScalarSingleStageWithTail) {
    auto t = CoeffTable::symbolic(1);
    int N = 8;
    auto val = eval_finite_cf({cf_term(1, t)}, tail_vector(1, N + 1, t), N);
    EXPECT_TRUE(compare(val[0], series_from_family(SeriesFamily::A, 0, 0, N, t), N).empty());
}

TEST(FiniteCf, ConvergentsAreCharPolyRatios) {
    auto t = CoeffTable::symbolic(2);
    int N = 10;
    for (int n = 1; n <= 5; ++n) {
        auto val = eval_finite_cf(cf_terms(n, t), std::nullopt, N);
        auto cp = char_polys(n, t);
        for (int k = 1; k <= 2; ++k)
            EXPECT_TRUE(compare(val[std::size_t(k - 1)], rational_to_series(cp.qk[std::size_t(k - 1)], cp.q, N), N).empty())
                << "n=" << n << " k=" << k;
    }
}

TEST(Suites, KalyaginSymbolicAndNumeric) {
    for (int p = 1; p <= 2; ++p) {
        auto t = CoeffTable::symbolic(p);
        EXPECT_TRUE(all_pass_in(suite_kalyagin(SuiteContext{t, 10, "symbolic", {}})));
    }
    auto [lo, hi] = default_window(3, 10);
    auto t3 = CoeffTable::random(3, 5, lo, hi);
    EXPECT_TRUE(all_pass_in(suite_kalyagin(SuiteContext{t3, 10, "seed=5", {}})));
}

TEST(Suites, LemmaLftAcrossRegimeBoundary) {
    for (int p = 1; p <= 3; ++p) {
        auto t = CoeffTable::symbolic(p);
        auto rs = suite_lemma_lft(SuiteContext{t, 10, "symbolic", {}});
        EXPECT_EQ(rs.size(), std::size_t(2 * p + 3));
        EXPECT_TRUE(all_pass_in(rs));
    }
}

TEST(Suites, TheoremsOnSymbolicTables) {
    for (int p = 1; p <= 2; ++p) {
        auto t = CoeffTable::symbolic(p);
        SuiteContext ctx{t, 8, "symbolic", {}};
        EXPECT_TRUE(all_pass_in(suite_theorem_A(ctx)));
        EXPECT_TRUE(all_pass_in(suite_theorem_W(ctx)));
        EXPECT_TRUE(all_pass_in(suite_moments(ctx)));
        auto b = CoeffTable::symbolic(p, true);
        EXPECT_TRUE(all_pass_in(suite_bidiagonal(SuiteContext{b, 9, "symbolic", {}})));
    }
    auto t1 = CoeffTable::symbolic(1);
    EXPECT_TRUE(all_pass_in(suite_scalar(SuiteContext{t1, 8, "symbolic", {}})));
}

TEST(Suites, BidiagonalSuitesRejectFullTables) {
    auto t = CoeffTable::symbolic(2);
    EXPECT_THROW(suite_bidiagonal(SuiteContext{t, 6, "symbolic", {}}), domain_error);
    EXPECT_THROW(akv_expansion(2, 6, t), domain_error);
}

TEST(Akv, AgreementRangeGrowsWithDepth) {
    for (int p = 1; p <= 3; ++p) {
        auto t = CoeffTable::symbolic(p, true);
        int N = 12;
        auto S = [&](int j) { return series_from_family(SeriesFamily::S, j, 0, N + 1, t); };
        int prev = 0;
        for (int depth = 1; depth <= 6; ++depth) {
            auto v = akv_expansion(depth, N, t);
            int range = N;
            for (auto& s : v) range = std::min(range, s.valid_to());
            EXPECT_GE(range, prev);
            for (int j = 0; j < p; ++j) EXPECT_TRUE(compare(v[std::size_t(j)], S(j), range).empty());
            prev = range;
        }
        EXPECT_GT(prev, 1);
    }
    auto t = CoeffTable::symbolic(2, true);
    auto v = akv_expansion(1, 8, t);
    EXPECT_EQ(v[0].coeff(1), t.one());
    EXPECT_TRUE(v[1].coeff(1).is_zero());
}

TEST(Tamper, SeriesTamperIsLocated) {
    auto [lo, hi] = default_window(2, 10);
    auto t = CoeffTable::random(2, 7, lo, hi);
    SuiteContext ctx{t, 10, "seed=7", SeriesTamper{SeriesFamily::A, 0, 0, 4}};
    auto rs = suite_theorem_A(ctx);
    auto f = first_failure(rs);
    ASSERT_NE(f, nullptr);
    EXPECT_EQ(f->identity, "A0-inverse");
    EXPECT_EQ(f->failures[0].component, 0);
    EXPECT_EQ(f->failures[0].exponent, 4);
}

TEST(Tamper, CfTamperIsLocated) {
    auto t = CoeffTable::symbolic(2);
    SuiteContext ctx{t, 10, "symbolic", CfTamper{2, 0}};
    auto rs = suite_lemma_lft(ctx);
    ASSERT_FALSE(rs[1].pass);
    EXPECT_EQ(rs[1].identity, "lft[1]");
    EXPECT_TRUE(rs[0].pass);
    EXPECT_FALSE(all_pass(suite_kalyagin(ctx)));
}

TEST(Tamper, Parsing) {
    auto s = std::get<SeriesTamper>(parse_tamper("series:W:1:0:5"));
    EXPECT_EQ(s.family, SeriesFamily::W);
    EXPECT_EQ(s.j, 1);
    EXPECT_EQ(s.exponent, 5);
    auto c = std::get<CfTamper>(parse_tamper("cf:3:1"));
    EXPECT_EQ(c.stage, 3);
    EXPECT_EQ(c.component, 1);
    EXPECT_THROW(parse_tamper("cf:0:1"), domain_error);
    EXPECT_THROW(parse_tamper("series:Q:0:0:1"), domain_error);
    EXPECT_THROW(parse_tamper("bogus"), domain_error);
}

TEST(Harness, ConfigErrorsAndThreadIndependence) {
    RunConfig cfg;
    cfg.p = 2;
    cfg.N = 6;
    EXPECT_THROW(run_suite("nope", cfg), domain_error);
    cfg.tamper = true;
    EXPECT_THROW(run_suite("count", cfg), domain_error);
    cfg.tamper = false;
    cfg.mode = RingKind::numeric;
    cfg.tables = 3;
    ::setenv("LUKAS_VCF_THREADS", "1", 1);
    auto a = io::to_json(run_suite("theorem-A", cfg)).dump();
    ::setenv("LUKAS_VCF_THREADS", "3", 1);
    auto b = io::to_json(run_suite("theorem-A", cfg)).dump();
    ::unsetenv("LUKAS_VCF_THREADS");
    EXPECT_EQ(a, b);
    EXPECT_NE(a.find("seed=3"), std::string::npos);
}

TEST(Harness, NumericTablesAcrossSeeds) {
    RunConfig cfg;
    cfg.p = 2;
    cfg.N = 8;
    cfg.mode = RingKind::numeric;
    cfg.seed = 40;
    cfg.tables = 4;
    for (auto s : {"theorem-W", "bidiagonal", "akv", "hp-order"}) EXPECT_TRUE(all_pass_in(run_suite(s, cfg))) << s;
}

TEST(Json, ReportShape) {
    Report r{"A0-inverse", 2, 10, "seed=1"};
    r.fail(1, 4, "x", "y");
    auto j = io::to_json(r);
    EXPECT_EQ(j["identity"], "A0-inverse");
    EXPECT_EQ(j["status"], "fail");
    EXPECT_EQ(j["failures"][0]["component"], 1);
    EXPECT_EQ(j["failures"][0]["exponent"], 4);
    EXPECT_EQ(j["p"], 2);
    EXPECT_EQ(j["N"], 10);
}

TEST(Json, PolynomialTableSeriesAndPath) {
    auto x = WeightPoly::variable({1, -2}), y = WeightPoly::variable({0, 3});
    auto p = x * x.scaled(3) + y;
    auto j = io::to_json(p);
    ASSERT_TRUE(j.is_array());
    EXPECT_EQ(io::poly_from_json(j), p);
    EXPECT_EQ(j[0]["coeff"], "1");

    auto t = CoeffTable::random(2, 4, -3, 3);
    auto back = io::table_from_json(io::to_json(t));
    EXPECT_EQ(back.values(), t.values());
    EXPECT_EQ(io::to_json(t)["mode"], "numeric");
    EXPECT_EQ(io::to_json(t)["values"][0][2].get<std::string>().find('/') != std::string::npos, true);

    auto s = ZPolynomial::linear(RingElement(BigRational(1))).to_series().invert(4);
    auto js = io::to_json(s, 4);
    EXPECT_EQ(js["min_exp"], 1);
    EXPECT_EQ(js["valid_to"], 4);
    EXPECT_EQ(js["coeffs"][0][0], 1);
    EXPECT_EQ(js["coeffs"][0][1], "1/1");

    auto g = io::to_json(LatticePath{0, 0, {1, 1, -2}});
    EXPECT_EQ(g["start"], (io::json{0, 0}));
    EXPECT_EQ(g["rises"], (io::json{1, 1, -2}));
    EXPECT_THROW(io::table_from_json(io::json{{"p", 1}}), domain_error);
}
