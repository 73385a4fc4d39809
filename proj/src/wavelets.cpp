#include "superwav/wavelets.hpp"

#include <algorithm>
#include <cmath>

namespace superwav {

FilterBank::FilterBank(std::vector<Filter> filters, double tol) : filters_(std::move(filters)) {
    if (filters_.empty()) throw structural_error("FilterBank: empty");
    const Verdict v = check_unitarity(filters_, 256, tol);
    if (!v.passed)
        throw std::invalid_argument("FilterBank: polyphase matrix not unitary (deviation " +
                                    std::to_string(v.deviation) + ")");
}

namespace {

Filter cqf_highpass(const Filter& m0) {
    // b_k = (-1)^{1-k} conj(a_{1-k}); support [1 - k_max, 1 - k_min].
    const std::int64_t lo = 1 - m0.k_max();
    const std::int64_t hi = 1 - m0.k_min();
    std::vector<cdouble> b(static_cast<std::size_t>(hi - lo + 1), 0.0);
    for (std::int64_t k = lo; k <= hi; ++k) {
        const double sign = ((1 - k) % 2 == 0) ? 1.0 : -1.0;
        b[static_cast<std::size_t>(k - lo)] = sign * std::conj(m0.coeff(1 - k));
    }
    return Filter::trig(2, lo, std::move(b));
}

std::vector<Filter> fiber_coloring(const Filter& m0) {
    const std::int64_t n = m0.scale();
    const ArcSet& e = m0.support();

    // Elementary partition of the base window [0, 1/N): all arc endpoints
    // reduced mod 1/N.
    std::vector<Rational> cuts{Rational(0), Rational(1, n)};
    for (const auto& iv : e.arcs()) {
        for (const Rational& x : {iv.lo, iv.hi}) {
            Rational r = x;
            while (r >= Rational(1, n)) r = r - Rational(1, n);
            cuts.push_back(r);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<std::vector<Interval>> color(static_cast<std::size_t>(n));
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const Rational lo = cuts[s], hi = cuts[s + 1];
        if (!(lo < hi)) continue;
        // Each fiber translate lo + j/N is wholly in or out of E; exactly one
        // must be in (QMF tiling).
        std::int64_t in_count = 0;
        std::vector<std::int64_t> free_slots;
        for (std::int64_t j = 0; j < n; ++j) {
            const Rational a = lo + Rational(j, n);
            if (e.as_intervals().contains(a))
                ++in_count;
            else
                free_slots.push_back(j);
        }
        if (in_count != 1)
            throw std::invalid_argument(
                "highpass_complete: QMF tiling violated, fiber coloring impossible");
        std::int64_t next_color = 1;
        for (std::int64_t j : free_slots)
            color[static_cast<std::size_t>(next_color++)].push_back(
                {lo + Rational(j, n), hi + Rational(j, n)});
    }

    std::vector<Filter> bank{m0};
    for (std::int64_t i = 1; i < n; ++i)
        bank.push_back(Filter::characteristic(
            n, ArcSet::from_intervals(RealIntervalSet(color[static_cast<std::size_t>(i)]))));
    return bank;
}

}  // namespace

FilterBank highpass_complete(const Filter& m0) {
    if (!check_qmf(m0).passed)
        throw std::invalid_argument("highpass_complete: m0 fails the QMF condition");
    if (m0.kind() == Filter::Kind::trig) {
        if (m0.scale() != 2)
            throw std::invalid_argument(
                "highpass_complete: trig completion implemented for N = 2 only");
        return FilterBank({m0, cqf_highpass(m0)});
    }
    return FilterBank(fiber_coloring(m0));
}

std::vector<SuperVector> synthesize_wavelet(const FilterBank& bank, const SuperVector& phi,
                                            const CycleSystem& system, double validation_tol) {
    const ScalingVectorVerdict v =
        check_scaling_vector(phi, bank.lowpass(), system, validation_tol);
    if (v.correlation_deviation > validation_tol || v.scaling_residual > validation_tol)
        throw std::invalid_argument(
            "synthesize_wavelet: phi does not satisfy the scaling-vector conditions "
            "(correlation " + std::to_string(v.correlation_deviation) + ", residual " +
            std::to_string(v.scaling_residual) + ")");
    std::vector<SuperVector> out;
    for (std::int64_t i = 1; i < bank.scale(); ++i)
        out.push_back(cascade_step(bank.filter(i), system, phi));
    return out;
}

SuperVector apply_rep_operator(RepOp op, const SuperVector& v, const CycleSystem& system) {
    if (v.system() != system)
        throw structural_error("apply_rep_operator: vector not over the given system");
    const std::int64_t n = system.scale();
    std::vector<SampledFunction> out(static_cast<std::size_t>(system.point_count()));
    for (std::int64_t i = 0; i < system.cycle_count(); ++i) {
        const Cycle& c = system.cycle(i);
        const std::int64_t p = c.period();
        for (std::int64_t j = 0; j < p; ++j) {
            const std::int64_t dst = system.flat_index(i, j);
            switch (op) {
                case RepOp::T: {
                    const cdouble zj = std::exp(cdouble(0.0, -c.point(j).radians()));
                    out[static_cast<std::size_t>(dst)] =
                        v.component(i, j).translated(Rational(1)).scaled(zj);
                    break;
                }
                case RepOp::Tinv: {
                    const cdouble zj = std::exp(cdouble(0.0, c.point(j).radians()));
                    out[static_cast<std::size_t>(dst)] =
                        v.component(i, j).translated(Rational(-1)).scaled(zj);
                    break;
                }
                case RepOp::U: {
                    // (U v)_j = alpha_j * U v_{j+1}
                    const cdouble alpha = system.modulation(i, j);
                    out[static_cast<std::size_t>(dst)] =
                        v.component(i, (j + 1) % p).dilated(n).scaled(alpha);
                    break;
                }
                case RepOp::Uinv: {
                    // (U^{-1} v)_j = U^{-1}(v_{j-1} / alpha_{j-1})
                    const std::int64_t prev = (j - 1 + p) % p;
                    const cdouble alpha = system.modulation(i, prev);
                    out[static_cast<std::size_t>(dst)] =
                        v.component(i, prev).dilated_inverse(n).scaled(1.0 / alpha);
                    break;
                }
            }
        }
    }
    return SuperVector(system, std::move(out));
}

SuperVector apply_pi(const TrigPolynomial& f, const SuperVector& v, const CycleSystem& system) {
    if (v.system() != system)
        throw structural_error("apply_pi: vector not over the given system");
    std::vector<SampledFunction> out(static_cast<std::size_t>(system.point_count()));
    for (std::int64_t i = 0; i < system.cycle_count(); ++i) {
        const Cycle& c = system.cycle(i);
        for (std::int64_t j = 0; j < c.period(); ++j) {
            SampledFunction acc;
            const double theta_j = c.point(j).radians();
            for (std::int64_t k = -f.degree(); k <= f.degree(); ++k) {
                const cdouble fk = f.at(k);
                if (fk == cdouble(0.0)) continue;
                const cdouble zjk = std::exp(cdouble(0.0, -static_cast<double>(k) * theta_j));
                acc = acc + v.component(i, j).translated(Rational(k)).scaled(fk * zjk);
            }
            out[static_cast<std::size_t>(system.flat_index(i, j))] = acc;
        }
    }
    return SuperVector(system, std::move(out));
}

SuperVector dilate_translate(const SuperVector& v, const CycleSystem& system, std::int64_t m,
                             std::int64_t n) {
    SuperVector r = v;
    for (std::int64_t k = 0; k < (n < 0 ? -n : n); ++k)
        r = apply_rep_operator(n > 0 ? RepOp::T : RepOp::Tinv, r, system);
    for (std::int64_t k = 0; k < (m < 0 ? -m : m); ++k)
        r = apply_rep_operator(m > 0 ? RepOp::U : RepOp::Uinv, r, system);
    return r;
}

SuperVector project_to_cycles(const SuperVector& v, const std::vector<std::int64_t>& indices) {
    const CycleSystem sub = v.system().select(indices);
    std::vector<SampledFunction> comps;
    for (std::int64_t i : indices) {
        const Cycle& c = v.system().cycle(i);
        for (std::int64_t j = 0; j < c.period(); ++j) comps.push_back(v.component(i, j));
    }
    return SuperVector(sub, std::move(comps));
}

double frame_ratio(const std::vector<SuperVector>& psis, const SuperVector& f, std::int64_t m_lo,
                   std::int64_t m_hi, std::int64_t n_lo, std::int64_t n_hi) {
    const double fn = f.norm_sq();
    if (fn == 0.0) throw std::invalid_argument("frame_ratio: zero vector");
    double s = 0.0;
    for (const auto& psi : psis) {
        for (std::int64_t m = m_lo; m <= m_hi; ++m)
            for (std::int64_t n = n_lo; n <= n_hi; ++n) {
                const SuperVector g = dilate_translate(psi, psi.system(), m, n);
                s += std::norm(super_inner_product(f, g));
            }
    }
    return s / fn;
}

GramVerdict gram_check(const std::vector<SuperVector>& family, double tol) {
    GramVerdict v;
    v.tolerance = tol;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i; j < family.size(); ++j) {
            const cdouble g = super_inner_product(family[i], family[j]);
            if (i == j)
                v.max_diagonal_deviation =
                    std::max(v.max_diagonal_deviation, std::abs(g - cdouble(1.0)));
            else
                v.max_off_diagonal = std::max(v.max_off_diagonal, std::abs(g));
        }
    v.deviation = std::max(v.max_off_diagonal, v.max_diagonal_deviation);
    v.passed = v.deviation <= tol;
    if (!v.passed) v.detail = "Gram matrix deviates from identity";
    return v;
}

}  // namespace superwav
