#include "superwav/arcs.hpp"

#include <algorithm>
#include <cmath>

namespace superwav {

double RationalAngle::radians() const {
    return 2.0 * M_PI * turns_.to_double();
}

RealIntervalSet::RealIntervalSet(std::vector<Interval> intervals) {
    std::vector<Interval> in;
    in.reserve(intervals.size());
    for (auto& iv : intervals)
        if (iv.lo < iv.hi) in.push_back(iv);
    std::sort(in.begin(), in.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (auto& iv : in) {
        if (!parts_.empty() && iv.lo <= parts_.back().hi)
            parts_.back().hi = std::max(parts_.back().hi, iv.hi);
        else
            parts_.push_back(iv);
    }
}

RealIntervalSet RealIntervalSet::single(Rational lo, Rational hi) {
    return RealIntervalSet({Interval{lo, hi}});
}

Rational RealIntervalSet::measure() const {
    Rational m(0);
    for (const auto& iv : parts_) m = m + (iv.hi - iv.lo);
    return m;
}

bool RealIntervalSet::contains(const Rational& x) const {
    for (const auto& iv : parts_)
        if (iv.lo <= x && x < iv.hi) return true;
    return false;
}

RealIntervalSet RealIntervalSet::unite(const RealIntervalSet& other) const {
    std::vector<Interval> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return RealIntervalSet(std::move(all));
}

RealIntervalSet RealIntervalSet::intersect(const RealIntervalSet& other) const {
    std::vector<Interval> out;
    for (const auto& a : parts_)
        for (const auto& b : other.parts_) {
            Rational lo = std::max(a.lo, b.lo);
            Rational hi = std::min(a.hi, b.hi);
            if (lo < hi) out.push_back({lo, hi});
        }
    return RealIntervalSet(std::move(out));
}

RealIntervalSet RealIntervalSet::subtract(const RealIntervalSet& other) const {
    std::vector<Interval> out;
    for (const auto& a : parts_) {
        Rational cur = a.lo;
        for (const auto& b : other.parts_) {
            if (b.hi <= cur || a.hi <= b.lo) continue;
            if (cur < b.lo) out.push_back({cur, b.lo});
            cur = std::max(cur, b.hi);
        }
        if (cur < a.hi) out.push_back({cur, a.hi});
    }
    return RealIntervalSet(std::move(out));
}

RealIntervalSet RealIntervalSet::symmetric_difference(const RealIntervalSet& other) const {
    return subtract(other).unite(other.subtract(*this));
}

RealIntervalSet RealIntervalSet::shift(const Rational& delta) const {
    std::vector<Interval> out = parts_;
    for (auto& iv : out) {
        iv.lo = iv.lo + delta;
        iv.hi = iv.hi + delta;
    }
    return RealIntervalSet(std::move(out));
}

RealIntervalSet RealIntervalSet::scale(const Rational& factor) const {
    std::vector<Interval> out;
    out.reserve(parts_.size());
    for (const auto& iv : parts_) {
        Rational a = iv.lo / factor;
        Rational b = iv.hi / factor;
        if (b < a) std::swap(a, b);
        out.push_back({a, b});
    }
    return RealIntervalSet(std::move(out));
}

ArcSet ArcSet::arc(const RationalAngle& lo, const RationalAngle& hi) {
    Rational a = lo.turns();
    Rational b = hi.turns();
    if (b <= a) b = b + Rational(1);
    return from_intervals(RealIntervalSet::single(a, b));
}

ArcSet ArcSet::full_circle() {
    return wrap(RealIntervalSet::single(Rational(0), Rational(1)));
}

ArcSet ArcSet::from_intervals(const RealIntervalSet& s) {
    std::vector<Interval> out;
    for (const auto& iv : s.intervals()) {
        if (iv.hi - iv.lo >= Rational(1)) {
            out.push_back({Rational(0), Rational(1)});
            continue;
        }
        Rational lo = iv.lo.mod1();
        Rational hi = lo + (iv.hi - iv.lo);
        if (hi <= Rational(1)) {
            out.push_back({lo, hi});
        } else {
            out.push_back({lo, Rational(1)});
            out.push_back({Rational(0), hi - Rational(1)});
        }
    }
    return wrap(RealIntervalSet(std::move(out)));
}

bool ArcSet::contains_interior(const RationalAngle& p) const {
    const Rational x = p.turns();
    for (std::int64_t k = -1; k <= 0; ++k) {
        Rational xs = x + Rational(k);
        for (const auto& iv : base_.intervals())
            if (iv.lo < xs && xs < iv.hi) return true;
    }
    // Interior also across the wrap seam: 0 is interior if both ends meet.
    if (x == Rational(0) && base_.contains(Rational(0))) {
        for (const auto& iv : base_.intervals())
            if (iv.hi == Rational(1)) return true;
    }
    return false;
}

ArcSet ArcSet::rotate(const RationalAngle& delta) const {
    return from_intervals(base_.shift(delta.turns()));
}

ArcSet ArcSet::preimage_times(std::int64_t n) const {
    std::vector<Interval> out;
    for (std::int64_t j = 0; j < n; ++j)
        for (const auto& iv : base_.intervals())
            out.push_back({(iv.lo + Rational(j)) / Rational(n), (iv.hi + Rational(j)) / Rational(n)});
    return wrap(RealIntervalSet(std::move(out)));
}

RealIntervalSet ArcSet::unwrap(std::int64_t k_lo, std::int64_t k_hi) const {
    std::vector<Interval> out;
    for (std::int64_t k = k_lo; k <= k_hi; ++k)
        for (const auto& iv : base_.intervals())
            out.push_back({iv.lo + Rational(k), iv.hi + Rational(k)});
    return RealIntervalSet(std::move(out));
}

double ArcSet::distance_to_boundary(double turns) const {
    double x = turns - std::floor(turns);
    double best = 1.0;
    for (const auto& iv : base_.intervals()) {
        for (double e : {iv.lo.to_double(), iv.hi.to_double()}) {
            double d = std::fabs(x - e);
            d = std::min(d, 1.0 - d);  // circular distance
            best = std::min(best, d);
        }
    }
    return best;
}

}  // namespace superwav
