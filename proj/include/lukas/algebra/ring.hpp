#pragma once

/**
 * @file ring.hpp
 * @brief Tagged coefficient ring: symbolic weight polynomials or exact rationals.
 */

#include <ostream>
#include <string>
#include <utility>
#include <variant>

#include "lukas/algebra/number.hpp"
#include "lukas/algebra/weight_poly.hpp"
#include "lukas/errors.hpp"

namespace lukas {

enum class RingKind { symbolic, numeric };

inline const char* to_string(RingKind k) { return k == RingKind::symbolic ? "symbolic" : "numeric"; }

class RingElement {
  public:
    RingElement() : v_(BigRational(0)) {}
    RingElement(WeightPoly p) : v_(std::move(p)) {}
    RingElement(BigRational r) : v_(std::move(r)) {}

    static RingElement zero(RingKind k) { return from_int(k, 0); }
    static RingElement one(RingKind k) { return from_int(k, 1); }
    static RingElement from_int(RingKind k, long long c) {
        if (k == RingKind::symbolic) return RingElement(WeightPoly(BigInt(c)));
        return RingElement(BigRational(c));
    }

    RingKind kind() const { return v_.index() == 0 ? RingKind::symbolic : RingKind::numeric; }
    bool is_symbolic() const { return v_.index() == 0; }
    const WeightPoly& poly() const { return std::get<WeightPoly>(v_); }
    const BigRational& rational() const { return std::get<BigRational>(v_); }

    bool is_zero() const { return is_symbolic() ? poly().is_zero() : rational() == 0; }
    bool is_one() const { return is_symbolic() ? poly() == WeightPoly::one() : rational() == 1; }

    /// Invertible without leaving the ring: constants ±1 symbolically, nonzero numerically.
    bool is_unit() const {
        if (!is_symbolic()) return rational() != 0;
        if (!poly().is_constant()) return false;
        auto c = poly().constant_term();
        return c == 1 || c == -1;
    }

    RingElement unit_inverse() const {
        if (!is_unit()) throw non_unit_error("element is not a unit: " + to_string());
        if (is_symbolic()) return *this;
        return RingElement(BigRational(1) / rational());
    }

    friend bool operator==(const RingElement& a, const RingElement& b) {
        check(a, b);
        return a.v_ == b.v_;
    }

    friend RingElement operator+(const RingElement& a, const RingElement& b) {
        check(a, b);
        if (a.is_symbolic()) return a.poly() + b.poly();
        return BigRational(a.rational() + b.rational());
    }
    friend RingElement operator-(const RingElement& a, const RingElement& b) {
        check(a, b);
        if (a.is_symbolic()) return a.poly() - b.poly();
        return BigRational(a.rational() - b.rational());
    }
    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        check(a, b);
        if (a.is_symbolic()) return a.poly() * b.poly();
        return BigRational(a.rational() * b.rational());
    }
    RingElement operator-() const {
        if (is_symbolic()) return -poly();
        return BigRational(-rational());
    }
    RingElement& operator+=(const RingElement& b) { return *this = *this + b; }
    RingElement& operator-=(const RingElement& b) { return *this = *this - b; }
    RingElement& operator*=(const RingElement& b) { return *this = *this * b; }

    friend std::ostream& operator<<(std::ostream& os, const RingElement& x) { return os << x.to_string(); }

    std::string to_string() const {
        if (is_symbolic()) return poly().to_string();
        const auto& r = rational();
        if (denominator(r) == 1) return numerator(r).str();
        return format_rational(r);
    }

  private:
    std::variant<WeightPoly, BigRational> v_;

    static void check(const RingElement& a, const RingElement& b) {
        if (a.v_.index() != b.v_.index()) throw ring_mismatch();
    }
};

}  // namespace lukas
