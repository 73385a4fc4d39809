#include "superwav/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace superwav {

Cycle::Cycle(std::int64_t scale, std::vector<RationalAngle> points) : scale_(scale) {
    if (points.empty()) throw std::invalid_argument("Cycle: no points");
    const std::int64_t p = static_cast<std::int64_t>(points.size());
    for (std::int64_t j = 0; j < p; ++j) {
        if (points[static_cast<std::size_t>(j)].times(scale) !=
            points[static_cast<std::size_t>((j + 1) % p)])
            throw std::invalid_argument("Cycle: orbit relation violated");
    }
    // Minimal period and distinctness.
    std::set<Rational> distinct;
    for (const auto& pt : points) distinct.insert(pt.turns());
    if (static_cast<std::int64_t>(distinct.size()) != p)
        throw std::invalid_argument("Cycle: points not distinct (sub-period present)");
    // Canonical rotation: start at the smallest point.
    const auto it = std::min_element(points.begin(), points.end());
    std::rotate(points.begin(), points.begin() + (it - points.begin()), points.end());
    points_ = std::move(points);
}

bool operator<(const Cycle& a, const Cycle& b) {
    return a.points_ < b.points_;
}

CycleSystem::CycleSystem(std::int64_t scale, std::vector<Cycle> cycles,
                         std::vector<std::vector<cdouble>> modulations)
    : scale_(scale), cycles_(std::move(cycles)), modulations_(std::move(modulations)) {
    if (cycles_.size() != modulations_.size())
        throw structural_error("CycleSystem: one modulation list per cycle required");
    std::set<Rational> seen;
    for (std::size_t i = 0; i < cycles_.size(); ++i) {
        if (cycles_[i].scale() != scale_)
            throw structural_error("CycleSystem: cycle scale mismatch");
        if (static_cast<std::int64_t>(modulations_[i].size()) != cycles_[i].period())
            throw structural_error("CycleSystem: modulation count != cycle period");
        for (const auto& pt : cycles_[i].points())
            if (!seen.insert(pt.turns()).second)
                throw structural_error("CycleSystem: cycles not pairwise disjoint");
    }
}

CycleSystem::CycleSystem(std::int64_t scale, std::vector<Cycle> cycles)
    : CycleSystem(scale, cycles, [&cycles] {
          std::vector<std::vector<cdouble>> mods;
          for (const auto& c : cycles)
              mods.emplace_back(static_cast<std::size_t>(c.period()), cdouble(1.0));
          return mods;
      }()) {}

std::int64_t CycleSystem::point_count() const {
    std::int64_t n = 0;
    for (const auto& c : cycles_) n += c.period();
    return n;
}

std::int64_t CycleSystem::flat_index(std::int64_t i, std::int64_t j) const {
    std::int64_t idx = 0;
    for (std::int64_t k = 0; k < i; ++k) idx += cycle(k).period();
    return idx + j;
}

std::pair<std::int64_t, std::int64_t> CycleSystem::unflatten(std::int64_t idx) const {
    for (std::int64_t i = 0; i < cycle_count(); ++i) {
        if (idx < cycle(i).period()) return {i, idx};
        idx -= cycle(i).period();
    }
    throw std::out_of_range("CycleSystem: component index out of range");
}

CycleSystem CycleSystem::select(const std::vector<std::int64_t>& indices) const {
    std::vector<Cycle> cs;
    std::vector<std::vector<cdouble>> mods;
    for (std::int64_t i : indices) {
        cs.push_back(cycle(i));
        mods.push_back(modulations_[static_cast<std::size_t>(i)]);
    }
    return CycleSystem(scale_, std::move(cs), std::move(mods));
}

std::vector<Cycle> enumerate_cycles(std::int64_t scale, std::int64_t max_period) {
    if (scale < 2 || max_period < 1)
        throw std::invalid_argument("enumerate_cycles: need N >= 2, max_period >= 1");
    std::set<Cycle> found;
    for (std::int64_t p = 1; p <= max_period; ++p) {
        // Points of period dividing p are the (N^p - 1)-th roots of unity.
        __int128 md = 1;
        for (std::int64_t i = 0; i < p; ++i) {
            md *= scale;
            if (md > static_cast<__int128>(INT64_MAX))
                throw capacity_error("enumerate_cycles: N^p - 1 exceeds 64 bits");
        }
        const std::int64_t den = static_cast<std::int64_t>(md) - 1;
        std::vector<bool> visited(static_cast<std::size_t>(den), false);
        for (std::int64_t k = 0; k < den; ++k) {
            if (visited[static_cast<std::size_t>(k)]) continue;
            std::vector<std::int64_t> orbit;
            std::int64_t cur = k;
            do {
                visited[static_cast<std::size_t>(cur)] = true;
                orbit.push_back(cur);
                cur = static_cast<std::int64_t>(
                    (static_cast<__int128>(cur) * scale) % den);
            } while (cur != k);
            if (static_cast<std::int64_t>(orbit.size()) != p) continue;  // sub-period
            std::vector<RationalAngle> pts;
            pts.reserve(orbit.size());
            for (std::int64_t o : orbit) pts.emplace_back(o, den);
            found.insert(Cycle(scale, std::move(pts)));
        }
    }
    return {found.begin(), found.end()};
}

CycleSystem detect_m0_cycles(const Filter& m, std::int64_t max_period, double tol) {
    if (!check_qmf(m).passed)
        throw std::invalid_argument("detect_m0_cycles: filter fails the QMF condition");
    const std::int64_t n = m.scale();
    const double sqn = std::sqrt(static_cast<double>(n));
    std::vector<Cycle> hits;
    std::vector<std::vector<cdouble>> mods;
    for (const Cycle& c : enumerate_cycles(n, max_period)) {
        bool all = true;
        std::vector<cdouble> alpha;
        for (const auto& pt : c.points()) {
            const cdouble v = eval_filter(m, pt);
            if (m.kind() == Filter::Kind::characteristic) {
                if (!m.support().contains(pt)) { all = false; break; }
            } else if (std::fabs(std::norm(v) - static_cast<double>(n)) >
                       tol * static_cast<double>(n)) {
                all = false;
                break;
            }
            alpha.push_back(v / sqn);
        }
        if (all) {
            hits.push_back(c);
            mods.push_back(std::move(alpha));
        }
    }
    return CycleSystem(n, std::move(hits), std::move(mods));
}

CoverageVerdict check_cycle_coverage(const Filter& m, const CycleSystem& selected,
                                     std::int64_t max_period) {
    if (m.kind() != Filter::Kind::characteristic)
        throw structural_error("check_cycle_coverage: characteristic filter required");
    CoverageVerdict v;
    v.tolerance = 0.0;
    std::set<Rational> selected_points;
    for (const auto& c : selected.cycles())
        for (const auto& pt : c.points()) selected_points.insert(pt.turns());

    for (const Cycle& c : enumerate_cycles(m.scale(), max_period)) {
        bool endpoint_hit = false;
        for (const auto& pt : c.points()) {
            for (const auto& iv : m.support().arcs())
                if (iv.lo == pt.turns() || iv.hi == pt.turns()) endpoint_hit = true;
        }
        if (endpoint_hit) v.endpoint_on_cycle = true;

        bool is_selected = false;
        for (const auto& pt : c.points())
            if (selected_points.count(pt.turns())) { is_selected = true; break; }
        if (is_selected) continue;

        bool escapes = false;
        for (const auto& pt : c.points())
            if (!m.support().contains(pt)) { escapes = true; break; }
        if (!escapes) v.trapped.push_back(c);
    }
    v.passed = v.trapped.empty();
    v.deviation = static_cast<double>(v.trapped.size());
    if (!v.passed) v.detail = "non-selected cycle(s) lie entirely inside the filter support";
    if (v.endpoint_on_cycle)
        v.detail += (v.detail.empty() ? "" : "; ") + std::string("arc endpoint lies on a cycle");
    return v;
}

}  // namespace superwav
