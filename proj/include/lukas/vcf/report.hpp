#pragma once

/**
 * @file report.hpp
 * @brief Structured verification results.
 */

#include <string>
#include <vector>

#include "lukas/errors.hpp"
#include "lukas/series/family.hpp"
#include "lukas/series/laurent.hpp"

namespace lukas {

struct Failure {
    int component = 0;
    int exponent = 0;
    std::string lhs;
    std::string rhs;
};

struct Report {
    std::string identity;
    int p = 1;
    int N = 0;
    std::string table;  ///< "symbolic" or "seed=<s>"
    bool pass = true;
    std::vector<Failure> failures;
    std::string note;

    Report() = default;
    Report(std::string id, int p_, int N_, std::string table_)
        : identity(std::move(id)), p(p_), N(N_), table(std::move(table_)) {}

    void fail(int component, int exponent, std::string lhs = {}, std::string rhs = {}) {
        pass = false;
        failures.push_back({component, exponent, std::move(lhs), std::move(rhs)});
    }
};

/// Coefficient-wise comparison up to z^(-upto); a validity shortfall is a failure, not a pass.
inline void compare_into(Report& r, int component, const LaurentSeries& lhs, const LaurentSeries& rhs, int upto) {
    try {
        for (auto& m : compare(lhs, rhs, upto)) r.fail(component, m.exponent, m.lhs.to_string(), m.rhs.to_string());
    } catch (const validity_error& e) {
        r.pass = false;
        r.note = e.what();
    }
}

inline Report series_report(std::string id, int p, int N, std::string table, const LaurentSeries& lhs,
                            const LaurentSeries& rhs) {
    Report r{std::move(id), p, N, std::move(table)};
    compare_into(r, 0, lhs, rhs, N);
    return r;
}

inline Report vector_report(std::string id, int p, int N, std::string table, const SeriesVector& lhs,
                            const SeriesVector& rhs, int upto) {
    Report r{std::move(id), p, N, std::move(table)};
    if (lhs.size() != rhs.size()) {
        r.pass = false;
        r.note = "vector length mismatch";
        return r;
    }
    for (std::size_t t = 0; t < lhs.size(); ++t) compare_into(r, int(t), lhs[t], rhs[t], upto);
    return r;
}

}  // namespace lukas
