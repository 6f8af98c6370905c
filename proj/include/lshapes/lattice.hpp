#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <vector>

namespace lshapes {

using Int = long long;

/// A point of N^k. Doubles as a factorization of a semigroup element and as
/// the integral coordinates of a unit cube in a distance diagram.
struct LatticePoint {
    std::vector<Int> coords;

    LatticePoint() = default;
    explicit LatticePoint(std::vector<Int> c) : coords(std::move(c)) {}
    LatticePoint(std::initializer_list<Int> c) : coords(c) {}

    std::size_t dimension() const { return coords.size(); }
    Int operator[](std::size_t i) const { return coords[i]; }

    bool operator==(const LatticePoint& o) const { return coords == o.coords; }
    // Lexicographic order; used as the canonical sort key everywhere.
    bool operator<(const LatticePoint& o) const { return coords < o.coords; }
};

inline LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
    LatticePoint r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

inline LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
    LatticePoint r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

/// Componentwise partial order on N^k: true iff lo <= hi in every coordinate.
inline bool componentwise_leq(const LatticePoint& lo, const LatticePoint& hi) {
    for (std::size_t i = 0; i < lo.coords.size(); ++i)
        if (lo.coords[i] > hi.coords[i]) return false;
    return true;
}

inline Int dot(const LatticePoint& x, const std::vector<Int>& v) {
    Int s = 0;
    for (std::size_t i = 0; i < x.coords.size(); ++i) s += x.coords[i] * v[i];
    return s;
}

/// Visit every y in N^k with y <= x componentwise (x itself included).
/// Returns false early if fn returns false for some point.
inline bool for_each_below(const LatticePoint& x,
                           const std::function<bool(const LatticePoint&)>& fn) {
    LatticePoint y;
    y.coords.assign(x.coords.size(), 0);
    while (true) {
        if (!fn(y)) return false;
        std::size_t i = 0;
        while (i < y.coords.size() && y.coords[i] == x.coords[i]) {
            y.coords[i] = 0;
            ++i;
        }
        if (i == y.coords.size()) return true;
        ++y.coords[i];
    }
}

}  // namespace lshapes
