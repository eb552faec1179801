#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "fano/error.hpp"

namespace fano {

using i64 = long long;

// Sentinel for an unbounded upper end.
constexpr i64 kUnbounded = std::numeric_limits<i64>::max();

inline i64 sat_add(i64 a, i64 b) {
    if (a == kUnbounded || b == kUnbounded) return kUnbounded;
    return a + b;
}

// Closed integer interval [lo, hi] with hi possibly unbounded.
// Exact means lo == hi.
struct Interval {
    i64 lo = 0;
    i64 hi = kUnbounded;

    static Interval exactly(i64 v) { return {v, v}; }
    static Interval unknown() { return {0, kUnbounded}; }
    static Interval zero() { return {0, 0}; }
    static Interval upper(i64 h) { return {0, h}; }

    bool exact() const { return lo == hi; }
    bool is_zero() const { return lo == 0 && hi == 0; }
    bool bounded() const { return hi != kUnbounded; }

    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
    bool operator!=(const Interval& o) const { return !(*this == o); }

    // Intersection; empty result signals contradictory exact data.
    std::optional<Interval> meet(const Interval& o) const {
        Interval r{std::max(lo, o.lo), std::min(hi, o.hi)};
        if (r.lo > r.hi) return std::nullopt;
        return r;
    }

    // True when `o` narrows or equals this interval.
    bool refines(const Interval& o) const { return o.lo >= lo && o.hi <= hi; }

    std::string to_string() const {
        std::string hs = (hi == kUnbounded) ? "inf" : std::to_string(hi);
        if (exact()) return std::to_string(lo);
        return "[" + std::to_string(lo) + "," + hs + "]";
    }
};

inline Interval operator+(const Interval& a, const Interval& b) {
    return {a.lo + b.lo, sat_add(a.hi, b.hi)};
}

// Per-degree cohomology dimensions of a sheaf on a space of dimension `dim`.
// Degrees outside [0, dim] are identically zero.
struct DimTable {
    int dim = 0;
    std::vector<Interval> h;

    DimTable() = default;
    explicit DimTable(int d, Interval fill = Interval::unknown())
        : dim(d), h(static_cast<size_t>(d) + 1, fill) {}

    static DimTable zeros(int d) { return DimTable(d, Interval::zero()); }

    // Out-of-range degrees read as exact zero.
    Interval at(int i) const {
        if (i < 0 || i > dim) return Interval::zero();
        return h[static_cast<size_t>(i)];
    }
    Interval& ref(int i) { return h.at(static_cast<size_t>(i)); }

    bool all_exact() const {
        for (const auto& iv : h)
            if (!iv.exact()) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& iv : h)
            if (!iv.is_zero()) return false;
        return true;
    }

    // Euler characteristic, defined only when every entry is exact.
    std::optional<i64> chi() const {
        if (!all_exact()) return std::nullopt;
        i64 c = 0;
        int sign = 1;
        for (int i = 0; i <= dim; ++i, sign = -sign) c += sign * h[static_cast<size_t>(i)].lo;
        return c;
    }

    DimTable& operator+=(const DimTable& o) {
        if (o.dim > dim) {
            h.resize(static_cast<size_t>(o.dim) + 1, Interval::zero());
            dim = o.dim;
        }
        for (int i = 0; i <= o.dim; ++i) h[static_cast<size_t>(i)] = h[static_cast<size_t>(i)] + o.at(i);
        return *this;
    }

    std::string to_string() const {
        std::string s = "{";
        for (int i = 0; i <= dim; ++i) {
            if (i) s += ", ";
            s += "h^" + std::to_string(i) + "=" + at(i).to_string();
        }
        return s + "}";
    }
};

inline DimTable operator+(DimTable a, const DimTable& b) {
    a += b;
    return a;
}

} // namespace fano
