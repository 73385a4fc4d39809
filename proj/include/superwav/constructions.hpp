#pragma once

#include <vector>

#include "superwav/cycles.hpp"
#include "superwav/filters.hpp"
#include "superwav/numerics.hpp"
#include "superwav/supervector.hpp"
#include "superwav/verdict.hpp"
#include "superwav/wavelets.hpp"

namespace superwav {

// Point classes of the cycle-interval construction (scale 2): cycle points,
// their antipodes (supplements), and the midpoints between consecutive ones.
struct PointClassification {
    std::vector<RationalAngle> cycle_points;
    std::vector<RationalAngle> supplements;
    std::vector<RationalAngle> main_points;      // cycle points + supplements
    std::vector<RationalAngle> midpoints;        // between consecutive main points
    std::vector<RationalAngle> cycle_midpoints;  // between consecutive cycle points
};

PointClassification classify_points(const std::vector<Cycle>& cycles);

// Characteristic filter + indicator scaling vector generated from 2-cycles.
// phi_hat supports are baseband real intervals (already shifted by -theta_0),
// in units of full turns; one per cycle point, cycle by cycle.
struct CharScalingSystem {
    Filter m0;
    CycleSystem system;
    std::vector<RealIntervalSet> phi_hat;
};

CharScalingSystem build_cycle_char_system(const std::vector<Cycle>& cycles);

// Exact verification of phi_hat_{z1}(2 theta - 2 theta0) =
// m0(theta) phi_hat_{z0}(theta - theta0) for every consecutive cycle pair.
Verdict check_arc_scaling_identity(const CharScalingSystem& sys);

// The shifted supports tile the circle: total measure one full turn, pairwise
// intersections of measure zero.
Verdict check_partition_of_unity(const CharScalingSystem& sys);

// Fourier supports of the wavelets U^{-1} pi(m_i) phi for a characteristic
// bank, exact: result[i-1][component] is the support of psi_hat_i, in turns.
std::vector<std::vector<RealIntervalSet>> synthesize_wavelet_char(const FilterBank& bank,
                                                                  const CharScalingSystem& sys);

// Filter stretching m(z) -> m(z^p) for gcd(p, N) = 1, with the p-th roots of
// unity as the new cycle system.
struct StretchResult {
    Filter stretched;
    CycleSystem system;
    // All components of the stretched super-vector from a reference scaling
    // function of the original filter: x -> (1/p) phi(x/p).
    SuperVector lift(const SampledFunction& phi) const;
};

StretchResult stretch_construction(const Filter& m0, std::int64_t p);

}  // namespace superwav
