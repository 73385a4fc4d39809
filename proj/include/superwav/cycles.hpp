#pragma once

#include <vector>

#include "superwav/filters.hpp"
#include "superwav/rational.hpp"
#include "superwav/verdict.hpp"

namespace superwav {

// Periodic orbit of z -> z^N on the circle: angles theta_1..theta_p with
// N*theta_j = theta_{j+1} (mod 2 pi), minimal period, rotated to start at the
// smallest point.
class Cycle {
public:
    Cycle(std::int64_t scale, std::vector<RationalAngle> points);

    std::int64_t scale() const { return scale_; }
    std::int64_t period() const { return static_cast<std::int64_t>(points_.size()); }
    const std::vector<RationalAngle>& points() const { return points_; }
    const RationalAngle& point(std::int64_t j) const {  // 0-based
        return points_[static_cast<std::size_t>(j)];
    }
    bool is_trivial() const { return period() == 1 && points_[0] == RationalAngle(); }

    friend bool operator==(const Cycle& a, const Cycle& b) {
        return a.scale_ == b.scale_ && a.points_ == b.points_;
    }
    friend bool operator<(const Cycle& a, const Cycle& b);

private:
    std::int64_t scale_;
    std::vector<RationalAngle> points_;
};

// An ordered collection of disjoint cycles with a unimodular modulation per
// point, components ordered cycle by cycle.
class CycleSystem {
public:
    CycleSystem(std::int64_t scale, std::vector<Cycle> cycles,
                std::vector<std::vector<cdouble>> modulations);
    // All modulations 1.
    CycleSystem(std::int64_t scale, std::vector<Cycle> cycles);

    std::int64_t scale() const { return scale_; }
    const std::vector<Cycle>& cycles() const { return cycles_; }
    std::int64_t cycle_count() const { return static_cast<std::int64_t>(cycles_.size()); }
    std::int64_t point_count() const;

    const Cycle& cycle(std::int64_t i) const { return cycles_[static_cast<std::size_t>(i)]; }
    cdouble modulation(std::int64_t i, std::int64_t j) const {
        return modulations_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    // Flat component index of (cycle i, point j), both 0-based.
    std::int64_t flat_index(std::int64_t i, std::int64_t j) const;
    std::pair<std::int64_t, std::int64_t> unflatten(std::int64_t idx) const;

    // Sub-system restricted to the given cycle indices (order preserved).
    CycleSystem select(const std::vector<std::int64_t>& indices) const;

    friend bool operator==(const CycleSystem& a, const CycleSystem& b) {
        return a.scale_ == b.scale_ && a.cycles_ == b.cycles_;
    }
    friend bool operator!=(const CycleSystem& a, const CycleSystem& b) { return !(a == b); }

private:
    std::int64_t scale_;
    std::vector<Cycle> cycles_;
    std::vector<std::vector<cdouble>> modulations_;
};

// All cycles of z -> z^N with period <= max_period, each once, in canonical
// order. Exact rational arithmetic on angles k/(N^p - 1); throws
// capacity_error when N^p - 1 would overflow.
std::vector<Cycle> enumerate_cycles(std::int64_t scale, std::int64_t max_period);

// Cycles on which |m0| = sqrt(N) (within tol for trig filters, exact arc
// membership for characteristic ones), with modulations m0(z)/sqrt(N).
// Requires check_qmf to pass.
CycleSystem detect_m0_cycles(const Filter& m, std::int64_t max_period = 8, double tol = 1e-9);

struct CoverageVerdict : Verdict {
    std::vector<Cycle> trapped;             // cycles fully inside the support
    bool endpoint_on_cycle = false;         // input-contract violation
};

// Every cycle (period <= max_period) disjoint from the selected ones must
// have a point outside the characteristic filter's support.
CoverageVerdict check_cycle_coverage(const Filter& m, const CycleSystem& selected,
                                     std::int64_t max_period = 8);

}  // namespace superwav
