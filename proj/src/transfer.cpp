#include "superwav/transfer.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace superwav {

TrigPolynomial TrigPolynomial::constant(cdouble c) {
    TrigPolynomial p(0);
    p.set(0, c);
    return p;
}

cdouble TrigPolynomial::eval(double theta) const {
    cdouble s = 0.0;
    for (std::int64_t k = -degree(); k <= degree(); ++k)
        s += at(k) * std::exp(cdouble(0.0, -static_cast<double>(k) * theta));
    return s;
}

TrigPolynomial TrigPolynomial::operator+(const TrigPolynomial& o) const {
    TrigPolynomial r(std::max(degree(), o.degree()));
    for (std::int64_t k = -r.degree(); k <= r.degree(); ++k) r.set(k, at(k) + o.at(k));
    return r;
}

TrigPolynomial TrigPolynomial::operator-(const TrigPolynomial& o) const {
    TrigPolynomial r(std::max(degree(), o.degree()));
    for (std::int64_t k = -r.degree(); k <= r.degree(); ++k) r.set(k, at(k) - o.at(k));
    return r;
}

TrigPolynomial TrigPolynomial::scaled(cdouble factor) const {
    TrigPolynomial r = *this;
    for (auto& c : r.coeffs_) c *= factor;
    return r;
}

TrigPolynomial TrigPolynomial::trimmed() const {
    std::int64_t d = degree();
    while (d > 0 && at(d) == cdouble(0.0) && at(-d) == cdouble(0.0)) --d;
    if (d == degree()) return *this;
    TrigPolynomial r(d);
    for (std::int64_t k = -d; k <= d; ++k) r.set(k, at(k));
    return r;
}

double TrigPolynomial::max_coeff_deviation(const TrigPolynomial& o) const {
    const std::int64_t d = std::max(degree(), o.degree());
    double worst = 0.0;
    for (std::int64_t k = -d; k <= d; ++k)
        worst = std::max(worst, std::abs(at(k) - o.at(k)));
    return worst;
}

TrigPolynomial apply_transfer(const Filter& m, const TrigPolynomial& h) {
    if (m.kind() != Filter::Kind::trig)
        throw structural_error("apply_transfer: trig filter required");
    const CoefficientSeq c = filter_autocorr(m);
    const std::int64_t n = m.scale();
    const std::int64_t out_deg = (c.degree() + h.degree()) / n;
    TrigPolynomial out(out_deg);
    for (std::int64_t mm = -out_deg; mm <= out_deg; ++mm) {
        cdouble s = 0.0;
        for (std::int64_t j = -h.degree(); j <= h.degree(); ++j)
            s += c.at(n * mm - j) * h.at(j);
        out.set(mm, s);
    }
    return out;
}

LawtonMatrix::LawtonMatrix(const Filter& m) {
    if (m.kind() != Filter::Kind::trig)
        throw structural_error("LawtonMatrix: trig filter required");
    const CoefficientSeq c = filter_autocorr(m);
    const std::int64_t n = m.scale();
    const std::int64_t big_d = c.degree();
    d_ = (big_d + (n - 1) - 1) / (n - 1);  // ceil(D / (N-1))
    if (d_ < 1) d_ = 1;
    a_.assign(static_cast<std::size_t>(dim() * dim()), 0.0);
    for (std::int64_t mm = -d_; mm <= d_; ++mm)
        for (std::int64_t j = -d_; j <= d_; ++j)
            a_[static_cast<std::size_t>((mm + d_) * dim() + (j + d_))] = c.at(n * mm - j);
}

TrigPolynomial LawtonMatrix::apply(const TrigPolynomial& h) const {
    if (h.degree() > d_)
        throw structural_error("LawtonMatrix: polynomial degree exceeds invariant space");
    TrigPolynomial out(d_);
    for (std::int64_t mm = -d_; mm <= d_; ++mm) {
        cdouble s = 0.0;
        for (std::int64_t j = -d_; j <= d_; ++j) s += entry(mm, j) * h.at(j);
        out.set(mm, s);
    }
    return out;
}

SpectrumReport peripheral_spectrum(const LawtonMatrix& a, double tol) {
    const std::int64_t n = a.dim();
    Eigen::MatrixXcd mat(n, n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            mat(i, j) = a.entry(i - a.half_dim(), j - a.half_dim());

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(mat, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("peripheral_spectrum: eigensolver did not converge");

    SpectrumReport rep;
    for (std::int64_t i = 0; i < n; ++i) {
        const cdouble lam = solver.eigenvalues()(i);
        rep.eigenvalues.push_back(lam);
        if (std::fabs(std::abs(lam) - 1.0) <= tol) rep.unit_modulus.push_back(lam);
        if (std::abs(lam - cdouble(1.0)) <= tol) ++rep.multiplicity_of_one;
    }
    // Cross-check: geometric multiplicity of 1 as the rank deficiency of A - I
    // via column-pivoted QR at the same tolerance.
    Eigen::MatrixXcd ami = mat - Eigen::MatrixXcd::Identity(n, n);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(ami);
    qr.setThreshold(tol);
    rep.rank_deficiency_of_a_minus_i = n - qr.rank();
    rep.consistent = rep.rank_deficiency_of_a_minus_i == rep.multiplicity_of_one;
    return rep;
}

OrthogonalityVerdict orthogonality_verdict(const Filter& m, const CycleSystem& selected,
                                           std::int64_t max_period, double tol) {
    OrthogonalityVerdict v;
    v.tolerance = tol;
    const CycleSystem all = detect_m0_cycles(m, max_period, std::max(tol, 1e-9));
    v.selected_count = selected.cycle_count();
    v.cohen_count = all.cycle_count();

    // Every selected cycle must be a detected m0-cycle.
    for (const auto& c : selected.cycles()) {
        bool found = false;
        for (const auto& d : all.cycles())
            if (c == d) { found = true; break; }
        if (!found)
            throw std::invalid_argument("orthogonality_verdict: selected cycle is not an m0-cycle");
    }
    for (const auto& d : all.cycles()) {
        bool found = false;
        for (const auto& c : selected.cycles())
            if (c == d) { found = true; break; }
        if (!found) v.missing_cycles.push_back(d);
    }

    const SpectrumReport spec = peripheral_spectrum(LawtonMatrix(m), tol);
    v.lawton_count = spec.multiplicity_of_one;

    if (v.cohen_count != v.lawton_count) {
        v.verdict = OrthogonalityKind::INCONSISTENT;
        v.passed = false;
        v.detail = "Cohen count and Lawton multiplicity disagree; max_period may be too small";
    } else if (v.selected_count == v.cohen_count) {
        v.verdict = OrthogonalityKind::ORTHOGONAL;
        v.passed = true;
    } else {
        v.verdict = OrthogonalityKind::TIGHT_FRAME_ONLY;
        v.passed = false;
        v.detail = "selection omits m0-cycles; translates form a normalized tight frame only";
    }
    v.deviation = std::fabs(static_cast<double>(v.cohen_count - v.lawton_count));
    return v;
}

TrigPolynomial harmonic_for_cycle(const SuperVector& phi, const CycleSystem& system,
                                  std::int64_t cycle_index) {
    if (phi.system() != system)
        throw structural_error("harmonic_for_cycle: vector not over the given system");
    const Cycle& c = system.cycle(cycle_index);
    // Coefficient support is bounded by the widest component support.
    std::int64_t d = 0;
    for (std::int64_t j = 0; j < c.period(); ++j) {
        const auto& f = phi.component(cycle_index, j);
        if (f.size() == 0) continue;
        const Rational w = f.support_end() - f.origin();
        d = std::max<std::int64_t>(d, w.num() / w.den() + 1);
    }
    TrigPolynomial h(d);
    for (std::int64_t j = 0; j < c.period(); ++j) {
        const auto& f = phi.component(cycle_index, j);
        const double theta_j = c.point(j).radians();
        for (std::int64_t k = -d; k <= d; ++k) {
            const cdouble r = autocorrelation(f, k);
            h.set(k, h.at(k) + r * std::exp(cdouble(0.0, static_cast<double>(k) * theta_j)));
        }
    }
    return h.trimmed();
}

}  // namespace superwav
