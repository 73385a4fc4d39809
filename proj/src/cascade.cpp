#include "superwav/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace superwav {

namespace {

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    const __int128 l = static_cast<__int128>(a) / std::gcd(a, b) * b;
    if (l > INT64_MAX) throw capacity_error("canonical_start: L overflows 64 bits");
    return static_cast<std::int64_t>(l);
}

}  // namespace

std::int64_t canonical_start_width(const CycleSystem& system) {
    std::int64_t l = 1;
    for (const auto& c : system.cycles())
        for (const auto& pt : c.points()) l = lcm64(l, pt.turns().den());
    return l;
}

SuperVector canonical_start(const CycleSystem& system) {
    const std::int64_t l = canonical_start_width(system);
    std::vector<SampledFunction> comps(
        static_cast<std::size_t>(system.point_count()),
        SampledFunction::indicator(Rational(0), Rational(1), l, 1.0 / static_cast<double>(l)));
    return SuperVector(system, std::move(comps));
}

Verdict validate_start(const SuperVector& psi0, const CycleSystem& system, double tol) {
    if (psi0.system() != system)
        throw structural_error("validate_start: vector not over the given system");
    double worst = 0.0;
    std::string note;

    // Collect all cycle points flat.
    std::vector<RationalAngle> angles;
    for (const auto& c : system.cycles())
        for (const auto& pt : c.points()) angles.push_back(pt);

    for (std::int64_t idx = 0; idx < psi0.size(); ++idx) {
        const SampledFunction& f = psi0.component(idx);
        if (f.size() == 0) return Verdict::fail(1.0, tol, "zero component");
        const Rational width = f.support_end() - f.origin();
        const std::int64_t kmax = width.num() / width.den() + 1;

        // eqc1_1: periodization of |f_hat|^2 evaluated as the trig series of
        // the translate autocorrelations.
        for (std::int64_t jdx = 0; jdx < psi0.size(); ++jdx) {
            const double theta =
                angles[static_cast<std::size_t>(idx)].radians() -
                angles[static_cast<std::size_t>(jdx)].radians();
            cdouble per = 0.0;
            for (std::int64_t k = -kmax; k <= kmax; ++k)
                per += autocorrelation(f, k) * std::exp(cdouble(0.0, -static_cast<double>(k) * theta));
            const double want = idx == jdx ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(per - cdouble(want)));
        }

        // eqc1_2: f_hat(2 k pi) = delta_k on |k| <= K from the support width.
        for (std::int64_t k = -kmax; k <= kmax; ++k) {
            const cdouble v = fourier_eval(f, 2.0 * M_PI * static_cast<double>(k));
            worst = std::max(worst, std::abs(v - cdouble(k == 0 ? 1.0 : 0.0)));
        }
    }
    return worst <= tol ? Verdict::pass(worst, tol)
                        : Verdict::fail(worst, tol, "starting-vector conditions violated");
}

SuperVector cascade_step(const Filter& m, const CycleSystem& system, const SuperVector& psi) {
    if (m.kind() != Filter::Kind::trig)
        throw structural_error(
            "cascade_step: characteristic filters have no finite coefficient sequence; "
            "use product_eval");
    if (psi.system() != system)
        throw structural_error("cascade_step: vector not over the given system");
    const std::int64_t n = m.scale();
    const double sqn = std::sqrt(static_cast<double>(n));

    std::vector<SampledFunction> out(static_cast<std::size_t>(system.point_count()));
    for (std::int64_t i = 0; i < system.cycle_count(); ++i) {
        const Cycle& c = system.cycle(i);
        const std::int64_t p = c.period();
        for (std::int64_t j = 0; j < p; ++j) {
            const SampledFunction& src = psi.component(i, j);
            const cdouble alpha = system.modulation(i, j);
            const double theta_j = c.point(j).radians();

            // Accumulate sqrt(N) sum_k (a_k z_j^k / alpha_j) src(N x - k) on the
            // refined grid: spacing /N, shift between successive k is 1/N.
            const Rational out_spacing = src.spacing() / Rational(n);
            const Rational step = (Rational(1, n)) / out_spacing;  // cells per unit shift
            if (!step.is_integer())
                throw structural_error("cascade_step: grid does not refine under the scale");
            const std::int64_t cell_shift = step.num();
            const std::int64_t kmin = m.k_min(), kmax = m.k_max();
            const std::int64_t len =
                src.size() + (kmax - kmin) * cell_shift;
            std::vector<cdouble> acc(static_cast<std::size_t>(len), 0.0);
            for (std::int64_t k = kmin; k <= kmax; ++k) {
                // z_j^k = e^{-i k theta_j}
                const cdouble coef = sqn * m.coeff(k) *
                                     std::exp(cdouble(0.0, -static_cast<double>(k) * theta_j)) /
                                     alpha;
                if (coef == cdouble(0.0)) continue;
                const std::int64_t off = (k - kmin) * cell_shift;
                for (std::int64_t s = 0; s < src.size(); ++s)
                    acc[static_cast<std::size_t>(off + s)] +=
                        coef * src.values()[static_cast<std::size_t>(s)];
            }
            const Rational out_origin = (src.origin() + Rational(kmin)) / Rational(n);
            out[static_cast<std::size_t>(system.flat_index(i, (j + 1) % p))] =
                SampledFunction(out_origin, out_spacing, std::move(acc)).trimmed();
        }
    }
    return SuperVector(system, std::move(out));
}

CascadeState cascade_run(const Filter& m, const CycleSystem& system, const SuperVector& psi0,
                         const CascadeOptions& opts) {
    if (!opts.skip_start_validation) {
        const Verdict v = validate_start(psi0, system, opts.start_tol);
        if (!v.passed)
            throw std::invalid_argument("cascade_run: starting vector fails validation (deviation " +
                                        std::to_string(v.deviation) + ")");
    }

    CascadeState state{psi0, 0, {}, {}};
    const bool with_ref = opts.reference.has_value();

    // Correlation polynomial of phi - psi^(n), iterated through the transfer
    // operator alongside the time-domain cascade.
    TrigPolynomial h_diff;
    if (with_ref) {
        const SuperVector diff = *opts.reference - psi0;
        h_diff = correlation_function(diff, system);
        state.error_trace.push_back(diff.norm());
    }

    std::int64_t bad_streak = 0;
    for (std::int64_t n = 0; n < opts.n_max; ++n) {
        SuperVector next = cascade_step(m, system, state.iterate);
        const double step_diff = (next - state.iterate).norm();
        double err = step_diff;
        if (with_ref) {
            const SuperVector diff = *opts.reference - next;
            err = diff.norm();
            if (n < 5) {
                const TrigPolynomial lhs = correlation_function(diff, system);
                const TrigPolynomial rhs = apply_transfer(m, h_diff);
                state.identity_trace.push_back(lhs.max_coeff_deviation(rhs));
                h_diff = lhs;
            }
        }
        if (!state.error_trace.empty() && err >= state.error_trace.back())
            ++bad_streak;
        else
            bad_streak = 0;
        if (bad_streak >= 5)
            throw numeric_error("cascade_run: error trace non-decreasing over 5 steps; "
                                "filter likely fails the convergence hypotheses");
        state.error_trace.push_back(err);
        state.iterate = std::move(next);
        state.iterations = n + 1;
        if (step_diff <= opts.stop_tol) break;
    }
    return state;
}

std::vector<cdouble> product_eval(const Filter& m, const CycleSystem& system,
                                  std::int64_t cycle_index, std::int64_t point_index,
                                  const std::vector<double>& xi_grid, double truncation_tol) {
    if (!check_qmf(m).passed)
        throw std::invalid_argument("product_eval: filter fails the QMF condition");
    const Cycle& c = system.cycle(cycle_index);
    const std::int64_t p = c.period();
    const std::int64_t n = m.scale();
    const double sqn = std::sqrt(static_cast<double>(n));

    double xmax = 0.0;
    for (double x : xi_grid) xmax = std::max(xmax, std::fabs(x));

    std::int64_t depth;
    if (m.kind() == Filter::Kind::trig) {
        const double lip = m.lipschitz_bound();
        depth = 4;
        double bound = lip * xmax / sqn;
        while (bound / std::pow(static_cast<double>(n), static_cast<double>(depth)) >
                   truncation_tol &&
               depth < 200)
            ++depth;
    } else {
        // Stop once the tail argument offsets sit inside the arcs that contain
        // the cycle points.
        double margin = 1.0;  // in turns
        for (std::int64_t j = 0; j < p; ++j) {
            const double d = m.support().distance_to_boundary(c.point(j).turns().to_double());
            margin = std::min(margin, d);
        }
        if (margin <= 0.0)
            throw numeric_error("product_eval: a cycle point lies on an arc boundary");
        depth = 1;
        while (xmax / (2.0 * M_PI) / std::pow(static_cast<double>(n), static_cast<double>(depth)) >=
                   margin &&
               depth < 200)
            ++depth;
    }

    std::vector<cdouble> out;
    out.reserve(xi_grid.size());
    for (double x : xi_grid) {
        cdouble prod = 1.0;
        for (std::int64_t l = 1; l <= depth; ++l) {
            // subscripts mod p: theta_0 = theta_p etc.
            const std::int64_t idx = ((point_index - l) % p + p) % p;
            const double arg =
                x / std::pow(static_cast<double>(n), static_cast<double>(l)) +
                c.point(idx).radians();
            if (m.kind() == Filter::Kind::characteristic) {
                const double dist = m.support().distance_to_boundary(arg / (2.0 * M_PI));
                if (dist < 1e-13)
                    throw numeric_error("product_eval: factor at level " + std::to_string(l) +
                                        " hits an arc boundary");
            }
            const cdouble alpha = system.modulation(cycle_index, idx);
            prod *= std::conj(alpha) * eval_filter(m, arg) / sqn;
            if (prod == cdouble(0.0)) break;
        }
        out.push_back(prod);
    }
    return out;
}

TrigPolynomial correlation_function(const SuperVector& v, const CycleSystem& system,
                                    const SuperVector* w) {
    if (v.system() != system)
        throw structural_error("correlation_function: vector not over the given system");
    if (w && w->system() != system)
        throw structural_error("correlation_function: second vector over a different system");
    const SuperVector& ww = w ? *w : v;

    std::vector<RationalAngle> angles;
    for (const auto& c : system.cycles())
        for (const auto& pt : c.points()) angles.push_back(pt);

    std::int64_t d = 0;
    for (std::int64_t idx = 0; idx < v.size(); ++idx) {
        for (const SampledFunction* f : {&v.component(idx), &ww.component(idx)}) {
            if (f->size() == 0) continue;
            const Rational width = f->support_end() - f->origin();
            d = std::max<std::int64_t>(d, width.num() / width.den() + 1);
        }
    }
    TrigPolynomial h(d);
    for (std::int64_t idx = 0; idx < v.size(); ++idx) {
        const double theta = angles[static_cast<std::size_t>(idx)].radians();
        for (std::int64_t k = -d; k <= d; ++k) {
            const cdouble r = cross_correlation(v.component(idx), ww.component(idx), k);
            h.set(k, h.at(k) + r * std::exp(cdouble(0.0, static_cast<double>(k) * theta)));
        }
    }
    return h.trimmed();
}

ScalingVectorVerdict check_scaling_vector(const SuperVector& v, const Filter& m,
                                          const CycleSystem& system, double tol) {
    ScalingVectorVerdict out;
    out.tolerance = tol;

    // (i) correlation function identically 1.
    const TrigPolynomial h = correlation_function(v, system);
    out.correlation_deviation = h.max_coeff_deviation(TrigPolynomial::constant(1.0));

    // (ii) scaling-equation residual on a frequency grid, off arc endpoints.
    const std::int64_t n = m.scale();
    const double sqn = std::sqrt(static_cast<double>(n));
    constexpr int kSamples = 1 << 10;
    double resid = 0.0;
    for (std::int64_t i = 0; i < system.cycle_count(); ++i) {
        const Cycle& c = system.cycle(i);
        const std::int64_t p = c.period();
        for (std::int64_t j = 0; j < p; ++j) {
            const SampledFunction& cur = v.component(i, j);
            const SampledFunction& nxt = v.component(i, (j + 1) % p);
            const cdouble alpha = system.modulation(i, j);
            const double theta_j = c.point(j).radians();
            for (int s = 0; s < kSamples; ++s) {
                const double xi =
                    -4.0 * M_PI + 8.0 * M_PI * (s + 0.318309886183790672) / kSamples;
                const cdouble lhs = alpha * sqn * fourier_eval(nxt, static_cast<double>(n) * xi);
                const cdouble rhs = eval_filter(m, theta_j + xi) * fourier_eval(cur, xi);
                resid = std::max(resid, std::abs(lhs - rhs));
            }
        }
    }
    out.scaling_residual = resid;

    // (iii) necessary-only: the transform does not vanish near 0.
    double deficit = 0.0;
    for (std::int64_t idx = 0; idx < v.size(); ++idx)
        deficit = std::max(deficit,
                           std::fabs(1.0 - std::abs(fourier_eval(v.component(idx), 0.0))));
    out.zero_value_deficit = deficit;
    out.necessary_only = true;

    out.deviation = std::max({out.correlation_deviation, out.scaling_residual, deficit});
    out.passed = out.deviation <= tol;
    if (!out.passed) out.detail = "scaling-vector conditions violated";
    return out;
}

}  // namespace superwav
