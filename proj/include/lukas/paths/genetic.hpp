#pragma once

/**
 * @file genetic.hpp
 * @brief Nested-sum closed forms for the bidiagonal weight polynomials.
 *
 * With a_i = a^(p)_i and n = m(p+1) + j:
 *   R        sum_{i1=-p}^{(m-1)p+j} sum_{i2=i1-p}^{(m-2)p+j} ... sum_{im=i(m-1)-p}^{j}
 *   S^(q)    sum_{i1=q}^{j+q} sum_{i2=q}^{i1+p} ... sum_{im=q}^{i(m-1)+p}
 *   T^(q)    sum_{i1=-j-p-q}^{-p-q} sum_{i2=i1-p}^{-p-q} ... sum_{im=i(m-1)-p}^{-p-q}
 * of the product a_{i1} ... a_{im}; the empty sum (m = 0) is 1.
 */

#include <functional>

#include "lukas/algebra/coeff_table.hpp"
#include "lukas/algebra/ring.hpp"
#include "lukas/errors.hpp"

namespace lukas {

enum class GeneticFamily { R, S, T };

inline RingElement genetic_sum(GeneticFamily family, int m, int j, int q, const CoeffTable& table) {
    int p = table.p();
    if (m < 0 || j < 0 || j > p || q < 0) throw domain_error("genetic_sum: need m >= 0, 0 <= j <= p, q >= 0");
    if (family == GeneticFamily::R && q != 0) throw domain_error("genetic_sum: R takes no shift");

    auto lower = [&](int level, int prev) {
        switch (family) {
            case GeneticFamily::R: return level == 1 ? -p : prev - p;
            case GeneticFamily::S: return q;
            case GeneticFamily::T: return level == 1 ? -j - p - q : prev - p;
        }
        return 0;
    };
    auto upper = [&](int level, int prev) {
        switch (family) {
            case GeneticFamily::R: return (m - level) * p + j;
            case GeneticFamily::S: return level == 1 ? j + q : prev + p;
            case GeneticFamily::T: return -p - q;
        }
        return 0;
    };

    std::function<RingElement(int, int)> rec = [&](int level, int prev) -> RingElement {
        if (level > m) return table.one();
        RingElement sum = table.zero();
        for (int i = lower(level, prev), hi = upper(level, prev); i <= hi; ++i) {
            RingElement a = table.lookup(p, i);
            if (a.is_zero()) continue;
            sum += a * rec(level + 1, i);
        }
        return sum;
    };
    return rec(1, 0);
}

}  // namespace lukas
