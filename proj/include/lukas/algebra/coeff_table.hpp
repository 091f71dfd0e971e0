#pragma once

/**
 * @file coeff_table.hpp
 * @brief Assignment of the diagonal coefficients a_n^(k), symbolic or numeric.
 *
 * Symbolic tables hand out the variable a_n^(k) for any offset. Numeric
 * tables hold rationals for offsets inside a declared window; offsets in
 * the window without an explicit value read as zero, offsets outside it
 * raise window_error. The bidiagonal flag zeroes every diagonal but k = p.
 */

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>

#include "lukas/algebra/number.hpp"
#include "lukas/algebra/ring.hpp"
#include "lukas/algebra/weight_poly.hpp"
#include "lukas/errors.hpp"

namespace lukas {

class CoeffTable {
  public:
    CoeffTable() = default;

    static CoeffTable symbolic(int p, bool bidiagonal = false) {
        check_p(p);
        CoeffTable t;
        t.p_ = p;
        t.mode_ = RingKind::symbolic;
        t.bidiagonal_ = bidiagonal;
        return t;
    }

    static CoeffTable numeric(int p, int lo, int hi, bool bidiagonal = false) {
        check_p(p);
        if (lo > hi) throw domain_error("empty coefficient window");
        CoeffTable t;
        t.p_ = p;
        t.mode_ = RingKind::numeric;
        t.lo_ = lo;
        t.hi_ = hi;
        t.bidiagonal_ = bidiagonal;
        return t;
    }

    /// Seeded table with integer entries in [-9, 9] \ {0} on every active diagonal.
    static CoeffTable random(int p, std::uint64_t seed, int lo, int hi, bool bidiagonal = false) {
        CoeffTable t = numeric(p, lo, hi, bidiagonal);
        std::mt19937_64 gen(seed);
        std::uniform_int_distribution<int> dist(1, 18);
        for (int k = 0; k <= p; ++k) {
            if (bidiagonal && k < p) continue;
            for (int n = lo; n <= hi; ++n) {
                int v = dist(gen);
                t.values_[{k, n}] = BigRational(v <= 9 ? v - 10 : v - 9);
            }
        }
        return t;
    }

    /// All-ones table; weight polynomials then evaluate to path counts.
    static CoeffTable ones(int p, int lo, int hi, bool bidiagonal = false) {
        CoeffTable t = numeric(p, lo, hi, bidiagonal);
        for (int k = 0; k <= p; ++k)
            for (int n = lo; n <= hi; ++n)
                if (!bidiagonal || k == p) t.values_[{k, n}] = 1;
        return t;
    }

    int p() const { return p_; }
    RingKind mode() const { return mode_; }
    bool bidiagonal() const { return bidiagonal_; }
    std::pair<int, int> window() const { return {lo_, hi_}; }
    const std::map<std::pair<int, int>, BigRational>& values() const { return values_; }

    void set(int k, int n, BigRational v) {
        if (mode_ != RingKind::numeric) throw domain_error("values can only be assigned in numeric mode");
        check_k(k);
        if (n < lo_ || n > hi_) throw window_error("assignment outside declared window at n=" + std::to_string(n));
        if (bidiagonal_ && k < p_ && v != 0) throw domain_error("bidiagonal table requires a^(k) = 0 for k < p");
        if (v == 0)
            values_.erase({k, n});
        else
            values_[{k, n}] = std::move(v);
    }

    bool active(int k) const { return !bidiagonal_ || k == p_; }

    /// True when every diagonal except k = p vanishes identically.
    bool is_bidiagonal() const {
        if (bidiagonal_) return true;
        if (mode_ == RingKind::symbolic) return false;
        for (auto& [key, v] : values_)
            if (key.first != p_) return false;
        return true;
    }

    RingElement zero() const { return RingElement::zero(mode_); }
    RingElement one() const { return RingElement::one(mode_); }

    RingElement lookup(int k, int n) const {
        check_k(k);
        if (mode_ == RingKind::symbolic) {
            if (!active(k)) return zero();
            return RingElement(WeightPoly::variable({k, n}));
        }
        return RingElement(rational(k, n));
    }

    BigRational rational(int k, int n) const {
        check_k(k);
        if (mode_ != RingKind::numeric) throw domain_error("numeric value requested from symbolic table");
        if (n < lo_ || n > hi_)
            throw window_error("coefficient a^(" + std::to_string(k) + ")_" + std::to_string(n) +
                               " outside window [" + std::to_string(lo_) + ", " + std::to_string(hi_) + "]");
        auto it = values_.find({k, n});
        return it == values_.end() ? BigRational(0) : it->second;
    }

    bool integral() const {
        if (mode_ != RingKind::numeric) return false;
        for (auto& [key, v] : values_)
            if (denominator(v) != 1) return false;
        return true;
    }

    BigInt max_abs_numerator() const {
        BigInt m = 0;
        for (auto& [key, v] : values_) {
            BigInt a = abs(numerator(v));
            if (a > m) m = a;
        }
        return m;
    }

  private:
    int p_ = 1;
    RingKind mode_ = RingKind::symbolic;
    int lo_ = 0, hi_ = -1;
    bool bidiagonal_ = false;
    std::map<std::pair<int, int>, BigRational> values_;

    static void check_p(int p) {
        if (p < 1) throw domain_error("p must be at least 1");
    }
    void check_k(int k) const {
        if (k < 0 || k > p_) throw domain_error("diagonal index k=" + std::to_string(k) + " outside [0, p]");
    }
};

/// Default random window: wide enough for every offset touched at truncation N.
inline std::pair<int, int> default_window(int p, int N) {
    int w = std::max(64, 3 * N + 4 * p + 16);
    return {-w, w};
}

/// Exact value of a polynomial under a numeric table.
inline BigRational poly_eval(const WeightPoly& a, const CoeffTable& table) {
    BigRational sum = 0;
    for (auto& [m, c] : a.terms()) {
        BigRational term(c);
        for (auto& f : m.factors()) {
            auto v = VariableId::from_key(f.var);
            BigRational x = table.rational(v.k, v.n);
            for (std::uint32_t e = 0; e < f.exp; ++e) term *= x;
        }
        sum += term;
    }
    return sum;
}

/// Specializes a ring element to the table's numeric ring.
inline RingElement ring_eval(const RingElement& a, const CoeffTable& table) {
    if (!a.is_symbolic()) return a;
    return RingElement(poly_eval(a.poly(), table));
}

}  // namespace lukas
