#pragma once

/**
 * @file weight_poly.hpp
 * @brief Sparse multivariate polynomials in the symbols a_n^(k).
 *
 * A variable a_n^(k) is packed into one 64-bit key whose unsigned order is
 * the lexicographic order on (k, n). Monomials are sorted factor lists and
 * polynomials are term vectors kept in graded lexicographic order, so two
 * equal polynomials are structurally identical.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lukas/algebra/number.hpp"
#include "lukas/errors.hpp"

namespace lukas {

struct VariableId {
    int k = 0;  ///< diagonal
    int n = 0;  ///< offset, may be negative

    friend bool operator==(const VariableId&, const VariableId&) = default;
    friend auto operator<=>(const VariableId&, const VariableId&) = default;

    std::uint64_t key() const {
        return (std::uint64_t(std::uint32_t(k)) << 32) |
               std::uint64_t(std::uint32_t(std::int64_t(n) + 0x80000000LL));
    }
    static VariableId from_key(std::uint64_t key) {
        return {int(key >> 32), int(std::int64_t(key & 0xffffffffULL) - 0x80000000LL)};
    }
};

class Monomial {
  public:
    struct Factor {
        std::uint64_t var;
        std::uint32_t exp;
        friend bool operator==(const Factor&, const Factor&) = default;
    };

    Monomial() = default;

    static Monomial variable(VariableId v, std::uint32_t exp = 1) {
        Monomial m;
        if (exp > 0) m.f_.push_back({v.key(), exp});
        return m;
    }

    /// Builds a monomial from an unsorted multiset of packed variables.
    static Monomial from_keys(std::vector<std::uint64_t> keys) {
        std::sort(keys.begin(), keys.end());
        Monomial m;
        for (auto k : keys) {
            if (!m.f_.empty() && m.f_.back().var == k)
                ++m.f_.back().exp;
            else
                m.f_.push_back({k, 1});
        }
        return m;
    }

    const std::vector<Factor>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (auto& x : f_) d += x.exp;
        return d;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.f_.reserve(a.f_.size() + b.f_.size());
        auto i = a.f_.begin(), j = b.f_.begin();
        while (i != a.f_.end() && j != b.f_.end()) {
            if (i->var < j->var)
                r.f_.push_back(*i++);
            else if (j->var < i->var)
                r.f_.push_back(*j++);
            else {
                r.f_.push_back({i->var, i->exp + j->exp});
                ++i, ++j;
            }
        }
        r.f_.insert(r.f_.end(), i, a.f_.end());
        r.f_.insert(r.f_.end(), j, b.f_.end());
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Graded lexicographic: total degree first, then the factor lists.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        auto da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return std::lexicographical_compare(
            a.f_.begin(), a.f_.end(), b.f_.begin(), b.f_.end(),
            [](const Factor& x, const Factor& y) {
                return x.var != y.var ? x.var < y.var : x.exp > y.exp;
            });
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto& x : f_) {
            h ^= x.var + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h ^= x.exp + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return std::size_t(h);
    }

    std::string to_string() const {
        std::string s;
        for (auto& x : f_) {
            if (!s.empty()) s += '*';
            auto v = VariableId::from_key(x.var);
            s += "a(" + std::to_string(v.k) + "," + std::to_string(v.n) + ")";
            if (x.exp > 1) s += "^" + std::to_string(x.exp);
        }
        return s;
    }

  private:
    std::vector<Factor> f_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

class WeightPoly {
  public:
    using Term = std::pair<Monomial, BigInt>;

    WeightPoly() = default;
    explicit WeightPoly(BigInt c) {
        if (c != 0) t_.emplace_back(Monomial{}, std::move(c));
    }
    static WeightPoly zero() { return {}; }
    static WeightPoly one() { return WeightPoly(BigInt(1)); }
    static WeightPoly variable(VariableId v) {
        WeightPoly p;
        p.t_.emplace_back(Monomial::variable(v), BigInt(1));
        return p;
    }
    static WeightPoly monomial(Monomial m, BigInt c = 1) {
        WeightPoly p;
        if (c != 0) p.t_.emplace_back(std::move(m), std::move(c));
        return p;
    }

    /// Collects (monomial, coefficient) pairs in any order, merging duplicates.
    template <class Map>
    static WeightPoly from_map(const Map& m) {
        WeightPoly p;
        p.t_.reserve(m.size());
        for (auto& [mono, c] : m)
            if (c != 0) p.t_.emplace_back(mono, BigInt(c));
        p.sort_terms();
        return p;
    }

    const std::vector<Term>& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
    BigInt constant_term() const {
        return (!t_.empty() && t_[0].first.is_one()) ? t_[0].second : BigInt(0);
    }

    BigInt coefficient_sum() const {
        BigInt s = 0;
        for (auto& t : t_) s += t.second;
        return s;
    }

    friend bool operator==(const WeightPoly&, const WeightPoly&) = default;

    friend WeightPoly operator+(const WeightPoly& a, const WeightPoly& b) { return merge(a, b, false); }
    friend WeightPoly operator-(const WeightPoly& a, const WeightPoly& b) { return merge(a, b, true); }
    WeightPoly operator-() const {
        WeightPoly r = *this;
        for (auto& t : r.t_) t.second = -t.second;
        return r;
    }
    WeightPoly& operator+=(const WeightPoly& b) { return *this = *this + b; }
    WeightPoly& operator-=(const WeightPoly& b) { return *this = *this - b; }

    friend WeightPoly operator*(const WeightPoly& a, const WeightPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_constant()) return b.scaled(a.t_[0].second);
        if (b.is_constant()) return a.scaled(b.t_[0].second);
        std::unordered_map<Monomial, BigInt, MonomialHash> acc;
        acc.reserve(a.size() * b.size());
        for (auto& x : a.t_)
            for (auto& y : b.t_) {
                auto [it, fresh] = acc.try_emplace(x.first * y.first, x.second);
                if (fresh)
                    it->second *= y.second;
                else
                    it->second += x.second * y.second;
            }
        WeightPoly r;
        r.t_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) r.t_.emplace_back(m, std::move(c));
        r.sort_terms();
        return r;
    }
    WeightPoly& operator*=(const WeightPoly& b) { return *this = *this * b; }

    WeightPoly scaled(const BigInt& c) const {
        if (c == 0) return {};
        WeightPoly r = *this;
        for (auto& t : r.t_) t.second *= c;
        return r;
    }

    /// Renames variables; the map must be injective on the variables present.
    WeightPoly substitute(const std::function<VariableId(VariableId)>& map) const {
        std::map<std::uint64_t, std::uint64_t> image;
        std::map<std::uint64_t, std::uint64_t> preimage;
        for (auto& t : t_)
            for (auto& f : t.first.factors()) {
                if (image.count(f.var)) continue;
                auto to = map(VariableId::from_key(f.var)).key();
                auto [it, fresh] = preimage.emplace(to, f.var);
                if (!fresh && it->second != f.var)
                    throw domain_error("substitution is not injective on occurring variables");
                image.emplace(f.var, to);
            }
        std::unordered_map<Monomial, BigInt, MonomialHash> acc;
        for (auto& t : t_) {
            std::vector<std::uint64_t> keys;
            for (auto& f : t.first.factors())
                keys.insert(keys.end(), f.exp, image.at(f.var));
            acc.emplace(Monomial::from_keys(std::move(keys)), t.second);
        }
        return from_map(acc);
    }

    /// Variables that occur, in increasing (k, n) order.
    std::vector<VariableId> variables() const {
        std::vector<std::uint64_t> keys;
        for (auto& t : t_)
            for (auto& f : t.first.factors()) keys.push_back(f.var);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        std::vector<VariableId> out;
        for (auto k : keys) out.push_back(VariableId::from_key(k));
        return out;
    }

    std::size_t hash() const {
        std::size_t h = t_.size();
        for (auto& t : t_) h = h * 1000003u ^ t.first.hash() ^ std::hash<std::string>{}(t.second.str());
        return h;
    }

    friend std::ostream& operator<<(std::ostream& os, const WeightPoly& x) { return os << x.to_string(); }

    std::string to_string() const {
        if (t_.empty()) return "0";
        std::string s;
        for (auto& [m, c] : t_) {
            bool neg = c < 0;
            BigInt mag = neg ? BigInt(-c) : c;
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            if (m.is_one())
                s += mag.str();
            else if (mag == 1)
                s += m.to_string();
            else
                s += mag.str() + "*" + m.to_string();
        }
        return s;
    }

  private:
    std::vector<Term> t_;

    void sort_terms() {
        std::sort(t_.begin(), t_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    }

    static WeightPoly merge(const WeightPoly& a, const WeightPoly& b, bool negate_b) {
        WeightPoly r;
        r.t_.reserve(a.t_.size() + b.t_.size());
        auto i = a.t_.begin(), j = b.t_.begin();
        while (i != a.t_.end() || j != b.t_.end()) {
            if (j == b.t_.end() || (i != a.t_.end() && i->first < j->first)) {
                r.t_.push_back(*i++);
            } else if (i == a.t_.end() || j->first < i->first) {
                r.t_.emplace_back(j->first, negate_b ? BigInt(-j->second) : j->second);
                ++j;
            } else {
                BigInt c = negate_b ? BigInt(i->second - j->second) : BigInt(i->second + j->second);
                if (c != 0) r.t_.emplace_back(i->first, std::move(c));
                ++i, ++j;
            }
        }
        return r;
    }
};

}  // namespace lukas
