#pragma once

/**
 * @file enumerate.hpp
 * @brief Depth-first enumeration of path families, weights and counts.
 *
 * One walker drives everything. It tries rises in the order +1, 0, -1, ..., -p
 * and prunes a branch as soon as the target height is unreachable in the
 * remaining steps. Inside a floor or ceiling any reachable target can be
 * reached without leaving the bound (climb first for a floor, descend first
 * for a ceiling), so reachability plus the bound check never leaves dead ends.
 *
 * The walker can also run in "all lengths" mode: a single traversal of depth
 * nmax reports every prefix that sits on the target height, which yields the
 * weight polynomials of all lengths 0..nmax at once.
 */

#include <cstdint>
#include <functional>
#include <limits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lukas/algebra/coeff_table.hpp"
#include "lukas/algebra/number.hpp"
#include "lukas/algebra/ring.hpp"
#include "lukas/algebra/weight_poly.hpp"
#include "lukas/errors.hpp"
#include "lukas/paths/lattice_path.hpp"

namespace lukas {

namespace detail {

inline int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

/// Fewest steps that move height h to t, or -1 if impossible.
inline int min_steps(const Geometry& g, int h, int t) {
    int diff = t - h;
    if (!g.restricted) return diff >= 0 ? diff : ceil_div(-diff, g.p);
    int r = std::max({diff, ceil_div(-diff, g.p), 0});
    int m = g.p + 1;
    int rem = ((r - diff) % m + m) % m;
    return rem == 0 ? r : r + (m - rem);
}

/// Whether h reaches t in exactly r steps.
inline bool reachable_exact(const Geometry& g, int h, int t, int r) {
    int diff = t - h;
    if (diff > r || diff < -g.p * r) return false;
    if (!g.restricted) return true;
    int num = r - diff;
    return num % (g.p + 1) == 0;
}

template <class Acc>
class Walker {
  public:
    Walker(const Geometry& g, int nmax, bool all_lengths, Acc& acc)
        : g_(g), nmax_(nmax), all_(all_lengths), acc_(acc) {
        if (g.restricted)
            rises_ = {1, -g.p};
        else
            for (int r = 1; r >= -g.p; --r) rises_.push_back(r);
    }

    void run() {
        if (!g_.in_bounds(g_.start)) return;
        if (!feasible(g_.start, 0)) return;
        rec(g_.start, 0);
    }

  private:
    const Geometry& g_;
    int nmax_;
    bool all_;
    Acc& acc_;
    std::vector<int> rises_;

    bool feasible(int h, int depth) const {
        int rem = nmax_ - depth;
        if (!all_) return reachable_exact(g_, h, g_.end, rem);
        int need = min_steps(g_, h, g_.end);
        return need <= rem;
    }

    void rec(int h, int depth) {
        if (h == g_.end && (all_ || depth == nmax_)) acc_.hit(depth);
        if (depth == nmax_) return;
        for (int r : rises_) {
            int nh = h + r;
            if (!g_.in_bounds(nh) || !feasible(nh, depth + 1)) continue;
            if (!acc_.push(r, h)) continue;
            rec(nh, depth + 1);
            acc_.pop();
        }
    }
};

template <class Acc>
void walk(const Geometry& g, int nmax, bool all_lengths, Acc& acc) {
    Walker<Acc>(g, nmax, all_lengths, acc).run();
}

struct PathAcc {
    LatticePath path;
    const std::function<void(const LatticePath&)>& visit;
    bool push(int r, int) {
        path.rises.push_back(r);
        return true;
    }
    void pop() { path.rises.pop_back(); }
    void hit(int) { visit(path); }
};

struct CountAcc {
    std::vector<std::uint64_t> counts;
    bool push(int, int) { return true; }
    void pop() {}
    void hit(int depth) { ++counts[depth]; }
};

/// Packed variable of the step of rise r taken from height h, or 0 for an upstep.
inline std::uint64_t step_key(int r, int h) {
    int d = -r;
    return VariableId{d, h - d}.key();
}

struct SymbolicAcc {
    const CoeffTable& table;
    std::vector<std::uint64_t> stack;
    std::vector<std::unordered_map<Monomial, std::int64_t, MonomialHash>> buckets;

    bool push(int r, int h) {
        if (r == 1) {
            stack.push_back(0);
            return true;
        }
        if (!table.active(-r)) return false;
        stack.push_back(step_key(r, h) | (std::uint64_t(1) << 63));
        return true;
    }
    void pop() { stack.pop_back(); }
    void hit(int depth) {
        std::vector<std::uint64_t> keys;
        keys.reserve(stack.size());
        for (auto k : stack)
            if (k) keys.push_back(k & ~(std::uint64_t(1) << 63));
        ++buckets[depth][Monomial::from_keys(std::move(keys))];
    }
};

/// Dense cache of numeric weights keyed by (diagonal, offset), filled on demand.
template <class T>
class WeightCache {
  public:
    WeightCache(const CoeffTable& table, int lo, int hi, std::function<T(const BigRational&)> conv)
        : table_(table), lo_(lo), width_(hi - lo + 1), conv_(std::move(conv)) {
        vals_.resize(std::size_t(table.p() + 1) * width_);
        known_.assign(vals_.size(), 0);
    }
    const T& get(int k, int n) {
        std::size_t idx = std::size_t(k) * width_ + std::size_t(n - lo_);
        if (!known_[idx]) {
            vals_[idx] = conv_(table_.rational(k, n));
            known_[idx] = 1;
        }
        return vals_[idx];
    }

  private:
    const CoeffTable& table_;
    int lo_;
    std::size_t width_;
    std::function<T(const BigRational&)> conv_;
    std::vector<T> vals_;
    std::vector<char> known_;
};

struct Int128Acc {
    WeightCache<__int128> cache;
    std::vector<__int128> stack{1};
    std::vector<__int128> sums;

    bool push(int r, int h) {
        if (r == 1) {
            stack.push_back(stack.back());
            return true;
        }
        int d = -r;
        const __int128& w = cache.get(d, h - d);
        if (w == 0) return false;
        stack.push_back(stack.back() * w);
        return true;
    }
    void pop() { stack.pop_back(); }
    void hit(int depth) { sums[depth] += stack.back(); }
};

struct RationalAcc {
    WeightCache<BigRational> cache;
    std::vector<BigRational> stack{BigRational(1)};
    std::vector<BigRational> sums;

    bool push(int r, int h) {
        if (r == 1) {
            stack.push_back(stack.back());
            return true;
        }
        int d = -r;
        const BigRational& w = cache.get(d, h - d);
        if (w == 0) return false;
        stack.push_back(stack.back() * w);
        return true;
    }
    void pop() { stack.pop_back(); }
    void hit(int depth) { sums[depth] += stack.back(); }
};

inline BigInt from_int128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
    BigInt r = std::uint64_t(u >> 64);
    r <<= 64;
    r += std::uint64_t(u);
    return neg ? BigInt(-r) : r;
}

/// Offsets a^(k)_n that a walk of at most nmax steps can touch.
inline std::pair<int, int> offset_range(const Geometry& g, int nmax) {
    int lo = std::min(g.start, g.end) - g.p * nmax - g.p;
    int hi = std::max(g.start, g.end) + nmax;
    return {lo, hi};
}

/// Weight sums over lengths 0..nmax (all_lengths) or for length nmax only (entry nmax).
inline std::vector<RingElement> family_weights(const Geometry& g, int nmax, bool all_lengths,
                                               const CoeffTable& table) {
    if (table.p() != g.p) throw domain_error("coefficient table p differs from family p");
    std::vector<RingElement> out(std::size_t(nmax + 1), table.zero());
    if (table.mode() == RingKind::symbolic) {
        SymbolicAcc acc{table, {}, {}};
        acc.buckets.resize(std::size_t(nmax + 1));
        walk(g, nmax, all_lengths, acc);
        for (int n = 0; n <= nmax; ++n) out[n] = RingElement(WeightPoly::from_map(acc.buckets[n]));
        return out;
    }
    auto [lo, hi] = offset_range(g, nmax);
    // The int128 path is safe when (max|a|)^n (p+2)^n stays below 2^120.
    bool small = table.integral();
    if (small) {
        BigInt bound = 1;
        BigInt base = std::max<BigInt>(table.max_abs_numerator(), BigInt(1)) * (g.p + 2);
        for (int i = 0; i < nmax; ++i) bound *= base;
        small = bound < (BigInt(1) << 120);
    }
    if (small) {
        Int128Acc acc{WeightCache<__int128>(table, lo, hi,
                                            [](const BigRational& v) {
                                                return __int128(numerator(v).convert_to<long long>());
                                            }),
                      {1},
                      std::vector<__int128>(std::size_t(nmax + 1), 0)};
        walk(g, nmax, all_lengths, acc);
        for (int n = 0; n <= nmax; ++n) out[n] = RingElement(BigRational(from_int128(acc.sums[n])));
        return out;
    }
    RationalAcc acc{WeightCache<BigRational>(table, lo, hi, [](const BigRational& v) { return v; }),
                    {BigRational(1)},
                    std::vector<BigRational>(std::size_t(nmax + 1), BigRational(0))};
    walk(g, nmax, all_lengths, acc);
    for (int n = 0; n <= nmax; ++n) out[n] = RingElement(acc.sums[n]);
    return out;
}

}  // namespace detail

/// Streams every member path of spec, in depth-first order.
inline void enumerate(const FamilySpec& spec, const std::function<void(const LatticePath&)>& visit) {
    spec.validate();
    auto g = geometry(spec);
    detail::PathAcc acc{LatticePath{0, g.start, {}}, visit};
    detail::walk(g, spec.n, false, acc);
}

inline std::vector<LatticePath> enumerate_all(const FamilySpec& spec) {
    std::vector<LatticePath> out;
    enumerate(spec, [&](const LatticePath& p) { out.push_back(p); });
    return out;
}

/// Weight of one step: 1 for an upstep, a^(d)_{m-d} for rise -d taken from height m.
inline RingElement step_weight(int rise, int height, const CoeffTable& table) {
    if (rise == 1) return table.one();
    int d = -rise;
    if (d < 0 || d > table.p()) throw domain_error("rise " + std::to_string(rise) + " outside [-p, 1]");
    return table.lookup(d, height - d);
}

inline RingElement path_weight(const LatticePath& path, const CoeffTable& table) {
    RingElement w = table.one();
    int h = path.y0;
    for (int r : path.rises) {
        w *= step_weight(r, h, table);
        h += r;
    }
    return w;
}

/// Sum of path weights over the family; 0 when the family is empty.
inline RingElement weight_polynomial(const FamilySpec& spec, const CoeffTable& table) {
    spec.validate();
    if (table.p() != spec.p) throw domain_error("coefficient table p differs from spec p");
    return detail::family_weights(geometry(spec), spec.n, false, table)[std::size_t(spec.n)];
}

/// Weight polynomials of one family for every length 0..nmax from a single traversal.
inline std::vector<RingElement> weight_polynomials_upto(Family f, int j, int q, int nmax,
                                                        const CoeffTable& table) {
    FamilySpec{f, table.p(), 0, j, q}.validate();
    if (nmax < 0) return {};
    return detail::family_weights(geometry(f, table.p(), j, q), nmax, true, table);
}

/// Path count by enumeration.
inline BigInt enumeration_count(const FamilySpec& spec) {
    spec.validate();
    detail::CountAcc acc{std::vector<std::uint64_t>(std::size_t(spec.n + 1), 0)};
    detail::walk(geometry(spec), spec.n, false, acc);
    return acc.counts[std::size_t(spec.n)];
}

/// (j+1)/(pm+j+1) * C(m(p+1)+j, m).
inline BigInt fuss_catalan(int p, int m, int j) {
    if (p < 1 || m < 0 || j < 0 || j > p) throw domain_error("fuss_catalan: need p >= 1, m >= 0, 0 <= j <= p");
    BigInt num = BigInt(j + 1) * binomial(std::int64_t(m) * (p + 1) + j, m);
    BigInt den = BigInt(std::int64_t(p) * m + j + 1);
    if (num % den != 0) throw error("fuss_catalan: non-integral result");
    return num / den;
}

/// Closed forms for R and S, enumeration for the other families.
inline BigInt count(const FamilySpec& spec) {
    spec.validate();
    if (spec.family == Family::R || spec.family == Family::S) {
        int diff = spec.n - spec.j;
        if (diff < 0 || diff % (spec.p + 1) != 0) return 0;
        int m = diff / (spec.p + 1);
        if (spec.family == Family::R) return binomial(spec.n, m);
        return fuss_catalan(spec.p, m, spec.j);
    }
    return enumeration_count(spec);
}

/// Reverses the rise sequence and starts at minus the old end height.
/// Maps D^(q)_[n,j] onto Dhat^(q)_[n,j] and back (an involution).
inline LatticePath reflect(const LatticePath& path) {
    LatticePath out{path.x0, -path.end_height(), {path.rises.rbegin(), path.rises.rend()}};
    return out;
}

/// Reflection of a member of D_[n,j]; rejects anything else.
inline LatticePath reflect_hat(const LatticePath& path, int p) {
    int j = path.end_height() - path.y0;
    if (path.y0 != 0 || j < 0 || j > p || !is_member(path, FamilySpec{Family::D, p, path.length(), j, 0}))
        throw domain_error("reflect_hat: path is not in D_[n,j]");
    return reflect(path);
}

/// Variable relabeling induced by reflect: a^(d)_k -> a^(d)_{-k-d}.
inline VariableId reflect_variable(VariableId v) { return {v.k, -v.n - v.k}; }

}  // namespace lukas
