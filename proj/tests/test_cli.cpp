/**
 * @file test_cli.cpp
 * @brief End-to-end runs of the command-line tool: payloads, exit codes, determinism.
 */

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = (env.empty() ? "" : "env " + env + " ") + std::string(LUKAS_VCF_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = ::pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

std::string temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST(Cli, CountFussCatalanAndBinomial) {
    auto s = run("count --family S --p 2 --m 2 --j 0");
    ASSERT_EQ(s.code, 0);
    EXPECT_EQ(parse(s)["count"], 3);
    auto r = run("count --family R --p 2 --m 2 --j 0");
    EXPECT_EQ(parse(r)["count"], 15);
}

TEST(Cli, EnumerateExamples) {
    auto s = parse(run("enumerate --family S --p 2 --n 3 --j 0"));
    ASSERT_EQ(s["paths"].size(), 1u);
    EXPECT_EQ(s["paths"][0]["rises"], (nlohmann::json{1, 1, -2}));
    auto p = parse(run("enumerate --family P --p 1 --n 1 --j 1"));
    ASSERT_EQ(p["paths"].size(), 1u);
    EXPECT_EQ(p["paths"][0]["rises"], (nlohmann::json{1}));
    auto r = run("enumerate --family R --p 2 --n 4 --j 0");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(parse(r)["paths"].empty());
}

TEST(Cli, MomentScalarSecond) {
    auto m = run("moment --kind forward --q 0 --p 1 --n 2 --j 0 --symbolic --format text");
    ASSERT_EQ(m.code, 0);
    EXPECT_EQ(m.out, "a(1,0) + a(0,0)^2\n");
}

TEST(Cli, CfScalarConvergentMatchesCharPolys) {
    auto cf = parse(run("cf --p 1 --stages 2 --N 6 --symbolic"));
    auto coeffs = cf["value"][0]["coeffs"];
    ASSERT_EQ(coeffs.size(), 6u);
    EXPECT_EQ(coeffs[0][1][0]["coeff"], "1");
    auto cp = parse(run("charpoly --p 1 --n 2 --symbolic --dump-matrix"));
    EXPECT_EQ(cp["q"]["ascending"].size(), 3u);
    EXPECT_EQ(cp["matrix"].size(), 2u);
}

TEST(Cli, VerifyExitCodes) {
    EXPECT_EQ(run("verify --suite theorem-A --p 2 --N 6 --symbolic").code, 0);
    EXPECT_EQ(run("verify --suite prop-4.1 --p 3 --N 8").code, 0);
    auto bad = run("verify --suite theorem-A --p 2 --N 10 --numeric --seed 7 --tamper");
    EXPECT_EQ(bad.code, 1);
    auto j = parse(bad);
    EXPECT_EQ(j["status"], "fail");
    bool located = false;
    for (auto& r : j["reports"])
        if (r["status"] == "fail" && !r["failures"].empty() && r["failures"][0]["exponent"].get<int>() > 0) located = true;
    EXPECT_TRUE(located);
}

TEST(Cli, UsageAndConfigErrorsExitTwo) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("verify --suite nope").code, 2);
    EXPECT_EQ(run("verify --p 0").code, 2);
    EXPECT_EQ(run("verify --suite count --tamper").code, 2);
    EXPECT_EQ(run("enumerate --family Q --p 1 --n 1").code, 2);
    EXPECT_EQ(run("weight --family D --p 1 --n 2 --numeric").code, 2);
    EXPECT_EQ(run("verify --coeffs /nonexistent/table.json").code, 2);
    EXPECT_EQ(run("verify --config " + temp_file("lukas_bad.json", "[1,2")).code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, DeterministicOutput) {
    std::string args = "verify --suite theorem-W --p 2 --N 8 --seed 3 --tables 3";
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run(args, "LUKAS_VCF_THREADS=1").out, run(args, "LUKAS_VCF_THREADS=3").out);
    EXPECT_EQ(run("series --family A --p 2 --j 1 --N 7 --seed 9").out, run("series --family A --p 2 --j 1 --N 7 --seed 9").out);
}

TEST(Cli, ConfigFileEquivalentToFlags) {
    auto cfg = temp_file("lukas_cfg.json", R"({"suite": "bidiagonal", "p": 2, "N": 7, "seed": 5, "tables": 2})");
    auto a = run("verify --config " + cfg);
    auto b = run("verify --suite bidiagonal --p 2 --N 7 --seed 5 --tables 2");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CoefficientFile) {
    auto path = temp_file("lukas_table.json",
                          R"({"p": 1, "mode": "numeric", "window": [-20, 20], "values": [[0, 0, "2/1"], [1, 0, "3/1"], [0, 1, "-1/1"]]})");
    auto w = parse(run("weight --family D --p 1 --n 2 --j 0 --coeffs " + path));
    EXPECT_EQ(w["weight"], "7/1");
    EXPECT_EQ(run("verify --suite theorem-A --p 1 --N 6 --coeffs " + path).code, 0);
    EXPECT_EQ(run("verify --suite theorem-A --p 2 --N 6 --coeffs " + path).code, 2);
}
