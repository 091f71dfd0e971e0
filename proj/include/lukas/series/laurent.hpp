#pragma once

/**
 * @file laurent.hpp
 * @brief Truncated Laurent series in 1/z and polynomials in z over a RingElement ring.
 *
 * A series stores sum c_e z^(-e) for e in [min_exp, valid_to]. Coefficients
 * below min_exp are zero, coefficients above valid_to are unknown. Finite
 * expressions such as z - b_0 carry valid_to = kExact, and validity
 * arithmetic saturates at that sentinel. valid_to = min_exp - 1 encodes a
 * series about which nothing beyond "starts at min_exp" is known.
 */

#include <algorithm>
#include <climits>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lukas/algebra/ring.hpp"
#include "lukas/errors.hpp"

namespace lukas {

inline constexpr int kExact = INT_MAX;

inline int sat_add(int a, int b) {
    if (a == kExact || b == kExact) return kExact;
    return a + b;
}

class LaurentSeries {
  public:
    LaurentSeries() : kind_(RingKind::numeric), min_(0), valid_(kExact) {}

    LaurentSeries(RingKind kind, int min_exp, int valid_to, std::vector<RingElement> coeffs)
        : kind_(kind), min_(min_exp), valid_(valid_to), c_(std::move(coeffs)) {
        if (valid_ < min_ - 1) throw domain_error("valid_to below min_exp - 1");
        for (auto& x : c_)
            if (x.kind() != kind_) throw ring_mismatch();
        if (valid_ != kExact && c_.size() > std::size_t(valid_ - min_ + 1))
            c_.resize(std::size_t(valid_ - min_ + 1));
        trim();
    }

    static LaurentSeries zero(RingKind k) { return {k, 0, kExact, {}}; }
    static LaurentSeries constant(const RingElement& c) { return {c.kind(), 0, kExact, {c}}; }
    static LaurentSeries one(RingKind k) { return constant(RingElement::one(k)); }
    /// c z^(-e).
    static LaurentSeries monomial(const RingElement& c, int e) { return {c.kind(), e, kExact, {c}}; }
    static LaurentSeries z(RingKind k) { return monomial(RingElement::one(k), -1); }
    /// Known to start at min_exp, every coefficient unknown.
    static LaurentSeries unknown(RingKind k, int min_exp) { return {k, min_exp, min_exp - 1, {}}; }

    RingKind kind() const { return kind_; }
    int min_exp() const { return min_; }
    int valid_to() const { return valid_; }
    bool exact() const { return valid_ == kExact; }
    /// Largest exponent with a stored (possibly nonzero) coefficient.
    int last_stored() const { return min_ + int(c_.size()) - 1; }

    bool known(int e) const { return e < min_ || e <= valid_; }

    RingElement coeff(int e) const {
        if (e < min_) return RingElement::zero(kind_);
        if (e > valid_)
            throw validity_error("coefficient of z^(-" + std::to_string(e) + ") is beyond valid_to " +
                                 std::to_string(valid_));
        std::size_t i = std::size_t(e - min_);
        return i < c_.size() ? c_[i] : RingElement::zero(kind_);
    }

    /// Lowest exponent with a nonzero coefficient inside the valid range.
    std::optional<int> leading_exponent() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return min_ + int(i);
        return std::nullopt;
    }

    LaurentSeries truncated(int N) const {
        if (N >= valid_) return *this;
        int v = std::max(N, min_ - 1);
        std::vector<RingElement> c(c_.begin(), c_.begin() + std::min<std::ptrdiff_t>(c_.size(), v - min_ + 1));
        return {kind_, min_, v, std::move(c)};
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, false); }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, true); }
    LaurentSeries operator-() const {
        LaurentSeries r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return product(a, b, kExact); }

    /// Product with every coefficient beyond z^(-cap) dropped.
    static LaurentSeries product(const LaurentSeries& a, const LaurentSeries& b, int cap) {
        if (a.kind_ != b.kind_) throw ring_mismatch();
        int lo = a.min_ + b.min_;
        int valid = std::min({sat_add(a.valid_, b.min_), sat_add(b.valid_, a.min_), std::max(cap, lo - 1)});
        int hi = valid == kExact ? a.last_stored() + b.last_stored() : valid;
        std::vector<RingElement> c(std::size_t(std::max(0, hi - lo + 1)), RingElement::zero(a.kind_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t k = 0; k < b.c_.size(); ++k) {
                int e = lo + int(i + k);
                if (e > hi) break;
                if (b.c_[k].is_zero()) continue;
                c[std::size_t(e - lo)] += a.c_[i] * b.c_[k];
            }
        }
        return {a.kind_, lo, valid, std::move(c)};
    }

    LaurentSeries scaled(const RingElement& s) const {
        if (s.kind() != kind_) throw ring_mismatch();
        LaurentSeries r = *this;
        for (auto& x : r.c_) x = x * s;
        r.trim();
        return r;
    }

    /// Multiplicative inverse known up to exponent min(N, valid_to - 2 m), m the leading exponent.
    LaurentSeries invert(int N) const {
        auto lead = leading_exponent();
        if (!lead) {
            if (exact()) throw domain_error("cannot invert the zero series");
            throw validity_error("no nonzero coefficient within validity; cannot invert");
        }
        int m = *lead;
        RingElement l = coeff(m);
        if (!l.is_unit()) throw non_unit_error("leading coefficient is not a unit: " + l.to_string());
        RingElement inv = l.unit_inverse();
        int valid = exact() ? N : std::min(N, valid_ - 2 * m);
        valid = std::max(valid, -m - 1);
        std::vector<RingElement> b;
        for (int k = 0; -m + k <= valid; ++k) {
            if (k == 0) {
                b.push_back(inv);
                continue;
            }
            RingElement s = RingElement::zero(kind_);
            for (int i = 1; i <= k; ++i) {
                std::size_t ai = std::size_t(m + i - min_);
                if (ai >= c_.size()) break;
                if (c_[ai].is_zero() || b[std::size_t(k - i)].is_zero()) continue;
                s += c_[ai] * b[std::size_t(k - i)];
            }
            b.push_back(s.is_zero() ? s : -(s * inv));
        }
        return {kind_, -m, valid, std::move(b)};
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentSeries& x) { return os << x.to_string(); }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[i].to_string() + ")*z^" + std::to_string(-(min_ + int(i)));
        }
        if (s.empty()) s = "0";
        if (!exact()) s += " + O(z^" + std::to_string(-(valid_ + 1)) + ")";
        return s;
    }

  private:
    RingKind kind_;
    int min_;
    int valid_;
    std::vector<RingElement> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    static LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, bool negate) {
        if (a.kind_ != b.kind_) throw ring_mismatch();
        int lo = std::min(a.min_, b.min_);
        int valid = std::min(a.valid_, b.valid_);
        int hi = valid == kExact ? std::max(a.last_stored(), b.last_stored()) : valid;
        std::vector<RingElement> c(std::size_t(std::max(0, hi - lo + 1)), RingElement::zero(a.kind_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            int e = a.min_ + int(i);
            if (e > hi) break;
            c[std::size_t(e - lo)] += a.c_[i];
        }
        for (std::size_t i = 0; i < b.c_.size(); ++i) {
            int e = b.min_ + int(i);
            if (e > hi) break;
            if (negate)
                c[std::size_t(e - lo)] -= b.c_[i];
            else
                c[std::size_t(e - lo)] += b.c_[i];
        }
        return {a.kind_, lo, valid, std::move(c)};
    }
};

/// Exponent-by-exponent disagreement between two series.
struct Mismatch {
    int exponent;
    RingElement lhs;
    RingElement rhs;
};

/// Compares coefficients up to exponent `upto`; both sides must be valid there.
inline std::vector<Mismatch> compare(const LaurentSeries& a, const LaurentSeries& b, int upto) {
    if (upto > a.valid_to() || upto > b.valid_to())
        throw validity_error("comparison to z^(-" + std::to_string(upto) + ") exceeds common validity " +
                             std::to_string(std::min(a.valid_to(), b.valid_to())));
    std::vector<Mismatch> out;
    for (int e = std::min(a.min_exp(), b.min_exp()); e <= upto; ++e) {
        auto x = a.coeff(e), y = b.coeff(e);
        if (!(x == y)) out.push_back({e, std::move(x), std::move(y)});
    }
    return out;
}

/// Polynomial in z with ascending coefficients.
class ZPolynomial {
  public:
    explicit ZPolynomial(RingKind k = RingKind::numeric) : kind_(k) {}
    ZPolynomial(RingKind k, std::vector<RingElement> c) : kind_(k), c_(std::move(c)) { trim(); }

    static ZPolynomial constant(const RingElement& c) { return ZPolynomial(c.kind(), {c}); }
    /// z - c.
    static ZPolynomial linear(const RingElement& c) {
        return ZPolynomial(c.kind(), {-c, RingElement::one(c.kind())});
    }

    RingKind kind() const { return kind_; }
    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<RingElement>& coeffs() const { return c_; }
    RingElement coeff(int d) const {
        return d >= 0 && d < int(c_.size()) ? c_[std::size_t(d)] : RingElement::zero(kind_);
    }
    bool monic() const { return !c_.empty() && c_.back().is_one(); }

    friend bool operator==(const ZPolynomial& a, const ZPolynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    friend ZPolynomial operator+(const ZPolynomial& a, const ZPolynomial& b) { return combine(a, b, false); }
    friend ZPolynomial operator-(const ZPolynomial& a, const ZPolynomial& b) { return combine(a, b, true); }
    friend ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b) {
        if (a.kind_ != b.kind_) throw ring_mismatch();
        if (a.is_zero() || b.is_zero()) return ZPolynomial(a.kind_);
        std::vector<RingElement> c(a.c_.size() + b.c_.size() - 1, RingElement::zero(a.kind_));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t k = 0; k < b.c_.size(); ++k)
                if (!a.c_[i].is_zero() && !b.c_[k].is_zero()) c[i + k] += a.c_[i] * b.c_[k];
        return ZPolynomial(a.kind_, std::move(c));
    }
    ZPolynomial scaled(const RingElement& s) const {
        ZPolynomial r = *this;
        for (auto& x : r.c_) x = x * s;
        r.trim();
        return r;
    }

    /// Exact Laurent series: z^d becomes exponent -d.
    LaurentSeries to_series() const {
        if (c_.empty()) return LaurentSeries::zero(kind_);
        std::vector<RingElement> rev(c_.rbegin(), c_.rend());
        return LaurentSeries(kind_, -degree(), kExact, std::move(rev));
    }

    friend std::ostream& operator<<(std::ostream& os, const ZPolynomial& x) { return os << x.to_string(); }

    std::string to_string() const {
        std::string s;
        for (int d = degree(); d >= 0; --d) {
            const auto& x = c_[std::size_t(d)];
            if (x.is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + x.to_string() + ")";
            if (d > 0) s += "*z^" + std::to_string(d);
        }
        return s.empty() ? "0" : s;
    }

  private:
    RingKind kind_;
    std::vector<RingElement> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    static ZPolynomial combine(const ZPolynomial& a, const ZPolynomial& b, bool negate) {
        if (a.kind_ != b.kind_) throw ring_mismatch();
        std::vector<RingElement> c(std::max(a.c_.size(), b.c_.size()), RingElement::zero(a.kind_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = negate ? c[i] - b.c_[i] : c[i] + b.c_[i];
        return ZPolynomial(a.kind_, std::move(c));
    }
};

}  // namespace lukas
