#pragma once

#include <optional>
#include <vector>

#include "superwav/rational.hpp"

namespace superwav {

// Half-open interval [lo, hi) on the real line, endpoints in units of full
// turns (multiply by 2*pi for radians).
struct Interval {
    Rational lo;
    Rational hi;
};

// Finite union of disjoint half-open intervals on the real line with rational
// endpoints, canonically sorted and merged. Exact set algebra throughout.
class RealIntervalSet {
public:
    RealIntervalSet() = default;
    explicit RealIntervalSet(std::vector<Interval> intervals);

    static RealIntervalSet single(Rational lo, Rational hi);

    const std::vector<Interval>& intervals() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    Rational measure() const;

    bool contains(const Rational& x) const;

    RealIntervalSet unite(const RealIntervalSet& other) const;
    RealIntervalSet intersect(const RealIntervalSet& other) const;
    RealIntervalSet subtract(const RealIntervalSet& other) const;
    RealIntervalSet symmetric_difference(const RealIntervalSet& other) const;

    RealIntervalSet shift(const Rational& delta) const;
    // {x : c*x in this}, c != 0; for c = 1/N this is the dilation x -> x*N.
    RealIntervalSet scale(const Rational& factor) const;

    friend bool operator==(const RealIntervalSet& a, const RealIntervalSet& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<Interval> parts_;  // disjoint, sorted, merged
};

inline bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
}

// Finite union of half-open arcs on the circle, endpoints as fractions of a
// full turn. Canonical form: disjoint sorted arcs inside [0, 1); an arc that
// wraps past 1 is stored split. Set algebra is exact.
class ArcSet {
public:
    ArcSet() = default;

    // Single arc from lo to hi going counterclockwise (in increasing angle);
    // wraps around if hi <= lo (full circle when hi - lo >= 1 turn).
    static ArcSet arc(const RationalAngle& lo, const RationalAngle& hi);
    static ArcSet full_circle();
    static ArcSet from_intervals(const RealIntervalSet& s);  // reduced mod 1

    const std::vector<Interval>& arcs() const { return base_.intervals(); }
    bool empty() const { return base_.empty(); }
    // Total measure as a fraction of the full turn (so 1 = whole circle).
    Rational measure() const { return base_.measure(); }

    bool contains(const RationalAngle& p) const { return base_.contains(p.turns()); }
    bool contains_interior(const RationalAngle& p) const;

    ArcSet unite(const ArcSet& other) const { return wrap(base_.unite(other.base_)); }
    ArcSet intersect(const ArcSet& other) const { return wrap(base_.intersect(other.base_)); }
    ArcSet complement() const { return wrap(full_circle().base_.subtract(base_)); }
    ArcSet symmetric_difference(const ArcSet& other) const {
        return wrap(base_.symmetric_difference(other.base_));
    }

    ArcSet rotate(const RationalAngle& delta) const;
    // Preimage under theta -> N*theta: N shrunken copies, one per branch.
    ArcSet preimage_times(std::int64_t n) const;

    // The set as intervals inside [0, 1).
    const RealIntervalSet& as_intervals() const { return base_; }

    // The set unwrapped onto the real line, one copy per k in [k_lo, k_hi]:
    // union over k of (this + k turns).
    RealIntervalSet unwrap(std::int64_t k_lo, std::int64_t k_hi) const;

    // Distance (in turns) from a point to the nearest arc endpoint.
    double distance_to_boundary(double turns) const;

    friend bool operator==(const ArcSet& a, const ArcSet& b) { return a.base_ == b.base_; }

private:
    static ArcSet wrap(RealIntervalSet s) {
        ArcSet r;
        r.base_ = std::move(s);
        return r;
    }
    RealIntervalSet base_;  // all parts inside [0, 1)
};

}  // namespace superwav
