#include "superwav/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace superwav {

namespace {

// Sorted distinct circle points (in turns).
std::vector<Rational> sorted_points(const std::set<Rational>& s) {
    return {s.begin(), s.end()};
}

// Real-line neighbors of pts[idx] in the circular order: previous and next
// points, unwrapped so prev < x < next.
std::pair<Rational, Rational> circular_neighbors(const std::vector<Rational>& pts,
                                                 std::size_t idx) {
    const std::size_t n = pts.size();
    const Rational prev = idx == 0 ? pts[n - 1] - Rational(1) : pts[idx - 1];
    const Rational next = idx + 1 == n ? pts[0] + Rational(1) : pts[idx + 1];
    return {prev, next};
}

std::vector<RationalAngle> midpoints_of(const std::vector<Rational>& pts) {
    std::vector<RationalAngle> out;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Rational next = i + 1 == n ? pts[0] + Rational(1) : pts[i + 1];
        out.emplace_back((pts[i] + next) / Rational(2));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

PointClassification classify_points(const std::vector<Cycle>& cycles) {
    if (cycles.empty()) throw std::invalid_argument("classify_points: no cycles");
    for (const auto& c : cycles)
        if (c.scale() != 2)
            throw std::invalid_argument("classify_points: construction is for scale N = 2 only");

    std::set<Rational> cyc, sup, main;
    for (const auto& c : cycles)
        for (const auto& pt : c.points()) {
            cyc.insert(pt.turns());
            sup.insert((pt.turns() + Rational(1, 2)).mod1());
        }
    main.insert(cyc.begin(), cyc.end());
    main.insert(sup.begin(), sup.end());
    if (main.size() != cyc.size() + sup.size())
        throw std::invalid_argument("classify_points: a supplement coincides with a cycle point");

    PointClassification pc;
    for (const auto& x : sorted_points(cyc)) pc.cycle_points.emplace_back(x);
    for (const auto& x : sorted_points(sup)) pc.supplements.emplace_back(x);
    for (const auto& x : sorted_points(main)) pc.main_points.emplace_back(x);
    pc.midpoints = midpoints_of(sorted_points(main));
    pc.cycle_midpoints = midpoints_of(sorted_points(cyc));
    return pc;
}

CharScalingSystem build_cycle_char_system(const std::vector<Cycle>& cycles) {
    const PointClassification pc = classify_points(cycles);

    std::vector<Rational> cyc, main;
    for (const auto& a : pc.cycle_points) cyc.push_back(a.turns());
    for (const auto& a : pc.main_points) main.push_back(a.turns());

    // m0 support: per cycle point theta0, the arc between the midpoints toward
    // its main-point neighbors.
    std::vector<Interval> m0_parts;
    for (const Rational& theta0 : cyc) {
        const std::size_t idx = static_cast<std::size_t>(
            std::lower_bound(main.begin(), main.end(), theta0) - main.begin());
        const auto [c, d] = circular_neighbors(main, idx);
        m0_parts.push_back({(c + theta0) / Rational(2), (theta0 + d) / Rational(2)});
    }
    Filter m0 = Filter::characteristic(
        2, ArcSet::from_intervals(RealIntervalSet(std::move(m0_parts))));

    // phi_hat per cycle point, baseband: [(a - theta0)/2, (b - theta0)/2)
    // with a, b the cycle-point neighbors.
    CycleSystem system(2, cycles);
    std::vector<RealIntervalSet> phi;
    for (const auto& c : cycles)
        for (const auto& pt : c.points()) {
            const Rational theta0 = pt.turns();
            const std::size_t idx = static_cast<std::size_t>(
                std::lower_bound(cyc.begin(), cyc.end(), theta0) - cyc.begin());
            const auto [a, b] = circular_neighbors(cyc, idx);
            phi.push_back(RealIntervalSet::single((a - theta0) / Rational(2),
                                                  (b - theta0) / Rational(2)));
        }
    return {std::move(m0), std::move(system), std::move(phi)};
}

Verdict check_arc_scaling_identity(const CharScalingSystem& sys) {
    const ArcSet& e = sys.m0.support();
    double worst = 0.0;
    for (std::int64_t i = 0; i < sys.system.cycle_count(); ++i) {
        const Cycle& c = sys.system.cycle(i);
        const std::int64_t p = c.period();
        for (std::int64_t j = 0; j < p; ++j) {
            const Rational theta0 = c.point(j).turns();
            const RealIntervalSet& s0 = sys.phi_hat[static_cast<std::size_t>(
                sys.system.flat_index(i, j))];
            const RealIntervalSet& s1 = sys.phi_hat[static_cast<std::size_t>(
                sys.system.flat_index(i, (j + 1) % p))];

            // LHS support: {theta : 2(theta - theta0) in s1}.
            const RealIntervalSet lhs = s1.scale(Rational(2)).shift(theta0);

            // RHS support: supp m0 (unwrapped) intersect (s0 + theta0).
            const RealIntervalSet shifted0 = s0.shift(theta0);
            std::int64_t klo = 0, khi = 0;
            if (!shifted0.empty()) {
                const Rational lo = shifted0.intervals().front().lo;
                const Rational hi = shifted0.intervals().back().hi;
                klo = lo.num() < 0 ? lo.num() / lo.den() - 2 : -1;
                khi = hi.num() / hi.den() + 2;
            }
            const RealIntervalSet rhs = e.unwrap(klo, khi).intersect(shifted0);

            const Rational mism = lhs.symmetric_difference(rhs).measure();
            worst = std::max(worst, mism.to_double());
        }
    }
    return worst == 0.0 ? Verdict::pass(0.0, 0.0)
                        : Verdict::fail(worst, 0.0, "arc scaling identity violated");
}

Verdict check_partition_of_unity(const CharScalingSystem& sys) {
    Rational total(0);
    ArcSet uni;
    std::int64_t flat = 0;
    for (std::int64_t i = 0; i < sys.system.cycle_count(); ++i) {
        const Cycle& c = sys.system.cycle(i);
        for (std::int64_t j = 0; j < c.period(); ++j, ++flat) {
            const ArcSet shifted = ArcSet::from_intervals(
                sys.phi_hat[static_cast<std::size_t>(flat)].shift(c.point(j).turns()));
            total = total + shifted.measure();
            uni = uni.unite(shifted);
        }
    }
    const bool ok = total == Rational(1) && uni.measure() == Rational(1);
    const double dev = std::fabs((total - uni.measure()).to_double()) +
                       std::fabs(1.0 - uni.measure().to_double());
    return ok ? Verdict::pass(0.0, 0.0)
              : Verdict::fail(dev, 0.0, "shifted supports do not tile the circle");
}

std::vector<std::vector<RealIntervalSet>> synthesize_wavelet_char(const FilterBank& bank,
                                                                  const CharScalingSystem& sys) {
    const std::int64_t n = bank.scale();
    std::vector<std::vector<RealIntervalSet>> out;
    for (std::int64_t f = 1; f < n; ++f) {
        const Filter& mi = bank.filter(f);
        if (mi.kind() != Filter::Kind::characteristic)
            throw structural_error("synthesize_wavelet_char: characteristic bank required");
        std::vector<RealIntervalSet> psi(static_cast<std::size_t>(sys.system.point_count()));
        for (std::int64_t i = 0; i < sys.system.cycle_count(); ++i) {
            const Cycle& c = sys.system.cycle(i);
            const std::int64_t p = c.period();
            for (std::int64_t j = 0; j < p; ++j) {
                // psi_hat_{j+1}(xi) = m_i(theta_j + xi/N) phi_hat_j(xi/N) / sqrt(N)
                // with unimodular alpha, so the support is
                // N * (S_j intersect {t : (theta_j + t) mod 1 in E_i}).
                const RealIntervalSet& s = sys.phi_hat[static_cast<std::size_t>(
                    sys.system.flat_index(i, j))];
                RealIntervalSet res;
                if (!s.empty()) {
                    const Rational lo = s.intervals().front().lo + c.point(j).turns();
                    const Rational hi = s.intervals().back().hi + c.point(j).turns();
                    const std::int64_t klo = lo.num() < 0 ? lo.num() / lo.den() - 2 : -1;
                    const std::int64_t khi = hi.num() / hi.den() + 2;
                    const RealIntervalSet e_unwrapped =
                        mi.support().unwrap(klo, khi).shift(-c.point(j).turns());
                    res = s.intersect(e_unwrapped).scale(Rational(1, n));
                }
                psi[static_cast<std::size_t>(sys.system.flat_index(i, (j + 1) % p))] =
                    std::move(res);
            }
        }
        out.push_back(std::move(psi));
    }
    return out;
}

StretchResult stretch_construction(const Filter& m0, std::int64_t p) {
    const std::int64_t n = m0.scale();
    if (p < 1 || std::gcd(p, n) != 1)
        throw std::invalid_argument("stretch_construction: p must be >= 1 and prime with N");

    Filter stretched = [&] {
        if (m0.kind() == Filter::Kind::trig) {
            // Coefficient index map k -> p*k.
            const std::int64_t lo = m0.k_min() * p, hi = m0.k_max() * p;
            std::vector<cdouble> a(static_cast<std::size_t>(hi - lo + 1), 0.0);
            for (std::int64_t k = m0.k_min(); k <= m0.k_max(); ++k)
                a[static_cast<std::size_t>(k * p - lo)] = m0.coeff(k);
            return Filter::trig(n, lo, std::move(a));
        }
        return Filter::characteristic(n, m0.support().preimage_times(p));
    }();

    // The p-th roots of unity split into cycles of z -> z^N.
    std::vector<bool> visited(static_cast<std::size_t>(p), false);
    std::vector<Cycle> cycles;
    for (std::int64_t k = 0; k < p; ++k) {
        if (visited[static_cast<std::size_t>(k)]) continue;
        std::vector<RationalAngle> orbit;
        std::int64_t cur = k;
        do {
            visited[static_cast<std::size_t>(cur)] = true;
            orbit.emplace_back(cur, p);
            cur = (cur * n) % p;
        } while (cur != k);
        cycles.emplace_back(n, std::move(orbit));
    }
    std::sort(cycles.begin(), cycles.end());
    CycleSystem system(n, std::move(cycles));
    return {std::move(stretched), std::move(system)};
}

SuperVector StretchResult::lift(const SampledFunction& phi) const {
    // x -> (1/p) phi(x/p); p recoverable from the point count.
    const std::int64_t p = system.point_count();
    SampledFunction comp(phi.origin() * Rational(p), phi.spacing() * Rational(p),
                         phi.values());
    comp = comp.scaled(1.0 / static_cast<double>(p));
    std::vector<SampledFunction> comps(static_cast<std::size_t>(p), comp);
    return SuperVector(system, std::move(comps));
}

}  // namespace superwav
