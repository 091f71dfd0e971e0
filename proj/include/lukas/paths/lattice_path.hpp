#pragma once

/**
 * @file lattice_path.hpp
 * @brief Lattice paths with rises in {+1, 0, -1, ..., -p} and the family selectors.
 *
 * Families and their natural coordinates (q is the shift):
 *   P      start 0,        end j,      no height bound
 *   D      start q,        end j + q,  heights >= q
 *   Dhat   start -j - q,   end -q,     heights <= -q
 *   R, S, Shat are P, D, Dhat with steps restricted to {+1, -p}.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lukas/errors.hpp"

namespace lukas {

enum class Family { P, D, Dhat, R, S, Shat };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::P: return "P";
        case Family::D: return "D";
        case Family::Dhat: return "Dhat";
        case Family::R: return "R";
        case Family::S: return "S";
        case Family::Shat: return "Shat";
    }
    return "?";
}

inline Family parse_family(std::string_view s) {
    if (s == "P") return Family::P;
    if (s == "D") return Family::D;
    if (s == "Dhat") return Family::Dhat;
    if (s == "R") return Family::R;
    if (s == "S") return Family::S;
    if (s == "Shat") return Family::Shat;
    throw domain_error("unknown family: " + std::string(s));
}

inline bool is_restricted(Family f) { return f == Family::R || f == Family::S || f == Family::Shat; }

struct FamilySpec {
    Family family = Family::P;
    int p = 1;
    int n = 0;
    int j = 0;
    int q = 0;

    void validate() const {
        if (p < 1) throw domain_error("p must be at least 1");
        if (n < 0) throw domain_error("path length must be nonnegative");
        if (j < 0 || j > p) throw domain_error("j=" + std::to_string(j) + " outside [0, p]");
        if (q < 0) throw domain_error("shift q must be nonnegative");
        if (q != 0 && (family == Family::P || family == Family::R))
            throw domain_error("families P and R take no shift");
    }
};

/// Endpoints, bound and step set of a family, independent of the length.
struct Geometry {
    int p = 1;
    int start = 0;
    int end = 0;
    std::optional<int> floor;
    std::optional<int> ceiling;
    bool restricted = false;

    bool in_bounds(int h) const { return (!floor || h >= *floor) && (!ceiling || h <= *ceiling); }
};

inline Geometry geometry(Family f, int p, int j, int q) {
    Geometry g;
    g.p = p;
    g.restricted = is_restricted(f);
    switch (f) {
        case Family::P:
        case Family::R:
            g.start = 0;
            g.end = j;
            break;
        case Family::D:
        case Family::S:
            g.start = q;
            g.end = j + q;
            g.floor = q;
            break;
        case Family::Dhat:
        case Family::Shat:
            g.start = -j - q;
            g.end = -q;
            g.ceiling = -q;
            break;
    }
    return g;
}

inline Geometry geometry(const FamilySpec& s) { return geometry(s.family, s.p, s.j, s.q); }

struct LatticePath {
    int x0 = 0;
    int y0 = 0;
    std::vector<int> rises;

    friend bool operator==(const LatticePath&, const LatticePath&) = default;

    int length() const { return int(rises.size()); }

    std::vector<int> heights() const {
        std::vector<int> h{y0};
        for (int r : rises) h.push_back(h.back() + r);
        return h;
    }
    int end_height() const {
        int h = y0;
        for (int r : rises) h += r;
        return h;
    }
    int min_height() const {
        auto h = heights();
        return *std::min_element(h.begin(), h.end());
    }
    int max_height() const {
        auto h = heights();
        return *std::max_element(h.begin(), h.end());
    }
    LatticePath shifted(int dy) const { return {x0, y0 + dy, rises}; }
};

/// Text form "x,y:" followed by U (rise +1), L (rise 0) and Dd (rise -d).
inline std::string encode(const LatticePath& path) {
    std::string s = std::to_string(path.x0) + "," + std::to_string(path.y0) + ":";
    for (int r : path.rises) {
        if (r == 1)
            s += 'U';
        else if (r == 0)
            s += 'L';
        else
            s += "D" + std::to_string(-r);
    }
    return s;
}

inline LatticePath decode(std::string_view s) {
    auto bad = [&] { return domain_error("malformed path text: " + std::string(s)); };
    auto colon = s.find(':');
    auto comma = s.find(',');
    if (colon == std::string_view::npos || comma == std::string_view::npos || comma > colon) throw bad();
    LatticePath path;
    try {
        path.x0 = std::stoi(std::string(s.substr(0, comma)));
        path.y0 = std::stoi(std::string(s.substr(comma + 1, colon - comma - 1)));
    } catch (const std::exception&) {
        throw bad();
    }
    for (std::size_t i = colon + 1; i < s.size();) {
        char c = s[i++];
        if (c == 'U') {
            path.rises.push_back(1);
        } else if (c == 'L') {
            path.rises.push_back(0);
        } else if (c == 'D') {
            std::size_t k = i;
            while (k < s.size() && s[k] >= '0' && s[k] <= '9') ++k;
            if (k == i) throw bad();
            path.rises.push_back(-std::stoi(std::string(s.substr(i, k - i))));
            i = k;
        } else {
            throw bad();
        }
    }
    return path;
}

/// Membership of a path in the family selected by spec.
inline bool is_member(const LatticePath& path, const FamilySpec& spec) {
    spec.validate();
    auto g = geometry(spec);
    if (path.x0 != 0 || path.y0 != g.start || path.length() != spec.n) return false;
    for (int r : path.rises) {
        if (r > 1 || r < -spec.p) return false;
        if (g.restricted && r != 1 && r != -spec.p) return false;
    }
    for (int h : path.heights())
        if (!g.in_bounds(h)) return false;
    return path.end_height() == g.end;
}

}  // namespace lukas
