#pragma once

/**
 * @file number.hpp
 * @brief Arbitrary-precision integers and rationals.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "lukas/errors.hpp"

namespace lukas {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Parses "n" or "n/d" with optional sign; the result is reduced.
inline BigRational parse_rational(std::string_view s) {
    auto parse_int = [](std::string_view t) {
        if (t.empty()) throw domain_error("empty integer literal");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw domain_error("bad integer literal");
        for (std::size_t k = i; k < t.size(); ++k)
            if (t[k] < '0' || t[k] > '9') throw domain_error("bad integer literal: " + std::string(t));
        return BigInt(std::string(t[0] == '+' ? t.substr(1) : t));
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_int(s));
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) throw domain_error("zero denominator");
    return BigRational(num, den);
}

/// Canonical "num/den" text; integers keep the "/1" suffix.
inline std::string format_rational(const BigRational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace lukas
