#include "superwav/filters.hpp"

#include <cmath>

namespace superwav {

Filter Filter::trig(std::int64_t scale, std::int64_t k_min, std::vector<cdouble> coeffs) {
    if (scale < 2) throw std::invalid_argument("Filter: scale must be >= 2");
    if (coeffs.empty()) throw std::invalid_argument("Filter: empty coefficient list");
    // Trim zero ends so k_min/k_max carry the true support.
    std::size_t b = 0, e = coeffs.size();
    while (b < e && coeffs[b] == cdouble(0.0)) ++b;
    while (e > b && coeffs[e - 1] == cdouble(0.0)) --e;
    if (b == e) throw std::invalid_argument("Filter: all coefficients zero");
    Filter f;
    f.kind_ = Kind::trig;
    f.scale_ = scale;
    f.k_min_ = k_min + static_cast<std::int64_t>(b);
    f.coeffs_.assign(coeffs.begin() + static_cast<std::ptrdiff_t>(b),
                     coeffs.begin() + static_cast<std::ptrdiff_t>(e));
    return f;
}

Filter Filter::characteristic(std::int64_t scale, ArcSet support) {
    if (scale < 2) throw std::invalid_argument("Filter: scale must be >= 2");
    Filter f;
    f.kind_ = Kind::characteristic;
    f.scale_ = scale;
    f.support_ = std::move(support);
    return f;
}

Filter Filter::haar() {
    const double c = 1.0 / std::sqrt(2.0);
    return trig(2, 0, {c, c});
}

Filter Filter::stretched_haar(std::int64_t p) {
    const double c = 1.0 / std::sqrt(2.0);
    std::vector<cdouble> a(static_cast<std::size_t>(p + 1), 0.0);
    a.front() = c;
    a.back() = c;
    return trig(2, 0, std::move(a));
}

double Filter::lipschitz_bound() const {
    if (kind_ != Kind::trig)
        throw structural_error("lipschitz_bound: trig filter required");
    double s = 0.0;
    for (std::int64_t k = k_min(); k <= k_max(); ++k)
        s += std::fabs(static_cast<double>(k)) * std::abs(coeff(k));
    return s;
}

cdouble eval_filter(const Filter& m, double theta) {
    if (m.kind() == Filter::Kind::trig) {
        cdouble s = 0.0;
        for (std::int64_t k = m.k_min(); k <= m.k_max(); ++k)
            s += m.coeff(k) * std::exp(cdouble(0.0, -static_cast<double>(k) * theta));
        return s;
    }
    const double t = theta / (2.0 * M_PI);
    const double frac = t - std::floor(t);
    // Half-open membership decided in floating point; exact variant below.
    for (const auto& iv : m.support().arcs())
        if (iv.lo.to_double() <= frac && frac < iv.hi.to_double())
            return std::sqrt(static_cast<double>(m.scale()));
    return 0.0;
}

cdouble eval_filter(const Filter& m, const RationalAngle& theta) {
    if (m.kind() == Filter::Kind::trig) return eval_filter(m, theta.radians());
    return m.support().contains(theta) ? std::sqrt(static_cast<double>(m.scale())) : 0.0;
}

CoefficientSeq filter_autocorr(const Filter& m) {
    if (m.kind() != Filter::Kind::trig)
        throw structural_error("filter_autocorr: trig filter required");
    const std::int64_t d = m.k_max() - m.k_min();
    CoefficientSeq c(d);
    for (std::int64_t n = -d; n <= d; ++n) {
        cdouble s = 0.0;
        for (std::int64_t k = m.k_min(); k <= m.k_max(); ++k)
            s += m.coeff(k + n) * std::conj(m.coeff(k));
        c.set(n, s);
    }
    return c;
}

QmfVerdict check_qmf(const Filter& m, double tol) {
    QmfVerdict v;
    v.tolerance = tol;
    const std::int64_t n = m.scale();
    if (m.kind() == Filter::Kind::trig) {
        const CoefficientSeq c = filter_autocorr(m);
        double worst = std::abs(c.at(0) - cdouble(1.0));
        for (std::int64_t k = 1; n * k <= c.degree(); ++k) {
            worst = std::max(worst, std::abs(c.at(n * k)));
            worst = std::max(worst, std::abs(c.at(-n * k)));
        }
        v.deviation = worst;
        v.passed = worst <= tol;
        // |m|^2 == 1 iff the autocorrelation is the delta sequence.
        bool delta = std::abs(c.at(0) - cdouble(1.0)) <= tol;
        for (std::int64_t k = 1; k <= c.degree() && delta; ++k)
            delta = std::abs(c.at(k)) <= tol && std::abs(c.at(-k)) <= tol;
        v.degenerate_warning = delta;
        if (!v.passed) v.detail = "sum over roots of |m0|^2 is not constant N";
        return v;
    }
    // Characteristic: the branch images N*(E intersect [j/N,(j+1)/N)) - j must
    // tile the circle up to measure zero. Decided exactly.
    const ArcSet& e = m.support();
    Rational total(0);
    ArcSet uni;
    for (std::int64_t j = 0; j < n; ++j) {
        ArcSet branch = e.intersect(ArcSet::from_intervals(
            RealIntervalSet::single(Rational(j, n), Rational(j + 1, n))));
        ArcSet image = ArcSet::from_intervals(branch.as_intervals().scale(Rational(1, n)));
        total = total + image.measure();
        uni = uni.unite(image);
    }
    const bool tiles = total == Rational(1) && uni.measure() == Rational(1);
    v.passed = tiles;
    v.deviation = tiles ? 0.0 : std::fabs((total - uni.measure()).to_double()) +
                                    std::fabs(1.0 - uni.measure().to_double());
    v.degenerate_warning = e.measure() == Rational(1);
    if (!tiles) v.detail = "preimage branches of the support do not tile the circle";
    return v;
}

Verdict check_unitarity(const std::vector<Filter>& bank, int sample_count, double tol) {
    if (bank.empty()) throw structural_error("check_unitarity: empty bank");
    const std::int64_t n = bank[0].scale();
    for (const auto& f : bank)
        if (f.scale() != n) throw structural_error("check_unitarity: mismatched scales");
    if (static_cast<std::int64_t>(bank.size()) != n)
        throw structural_error("check_unitarity: bank must have N filters");

    const double sqn = std::sqrt(static_cast<double>(n));
    double worst = 0.0;
    for (int s = 0; s < sample_count; ++s) {
        // Offset keeps samples off arc endpoints (which are rational angles).
        const double theta = 2.0 * M_PI * (s + 0.318309886183790672) / sample_count;
        std::vector<std::vector<cdouble>> mat(static_cast<std::size_t>(n),
                                              std::vector<cdouble>(static_cast<std::size_t>(n)));
        for (std::int64_t i = 0; i < n; ++i)
            for (std::int64_t j = 0; j < n; ++j)
                // rho^j z with z = e^{-i theta}: angle theta - 2 pi j / N.
                mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    eval_filter(bank[static_cast<std::size_t>(i)],
                                theta - 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n)) /
                    sqn;
        for (std::int64_t i = 0; i < n; ++i)
            for (std::int64_t k = 0; k < n; ++k) {
                cdouble dot = 0.0;
                for (std::int64_t j = 0; j < n; ++j)
                    dot += mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                           std::conj(mat[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
                worst = std::max(worst, std::abs(dot - (i == k ? cdouble(1.0) : cdouble(0.0))));
            }
    }
    return worst <= tol ? Verdict::pass(worst, tol) : Verdict::fail(worst, tol, "M M* != I");
}

}  // namespace superwav
