#include "superwav/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace superwav {

namespace {

// Number of new_spacing cells per old cell plus the integer cell offset of
// `origin` relative to `base_origin`. Throws structural_error when the grids
// are incommensurable.
std::int64_t cell_ratio(const Rational& coarse, const Rational& fine) {
    Rational r = coarse / fine;
    if (!r.is_integer() || r.num() <= 0)
        throw structural_error("grid spacings are not nested: " + coarse.str() + " vs " +
                               fine.str());
    return r.num();
}

std::int64_t cell_offset(const Rational& origin, const Rational& base_origin,
                         const Rational& spacing) {
    Rational r = (origin - base_origin) / spacing;
    if (!r.is_integer())
        throw structural_error("grid origins are not aligned");
    return r.num();
}

}  // namespace

SampledFunction::SampledFunction(Rational origin, Rational spacing, std::vector<cdouble> values)
    : origin_(origin), spacing_(spacing), values_(std::move(values)) {
    if (!(Rational(0) < spacing_))
        throw std::invalid_argument("SampledFunction: spacing must be positive");
}

SampledFunction SampledFunction::indicator(Rational lo, Rational spacing, std::int64_t cells,
                                           cdouble amplitude) {
    return SampledFunction(lo, spacing,
                           std::vector<cdouble>(static_cast<std::size_t>(cells), amplitude));
}

double SampledFunction::norm_sq() const {
    double s = 0.0;
    for (const auto& v : values_) s += std::norm(v);
    return spacing_.to_double() * s;
}

double SampledFunction::norm() const { return std::sqrt(norm_sq()); }

SampledFunction SampledFunction::scaled(cdouble factor) const {
    std::vector<cdouble> v = values_;
    for (auto& x : v) x *= factor;
    return SampledFunction(origin_, spacing_, std::move(v));
}

SampledFunction SampledFunction::translated(const Rational& delta) const {
    return SampledFunction(origin_ + delta, spacing_, values_);
}

SampledFunction SampledFunction::dilated(std::int64_t n) const {
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<cdouble> v = values_;
    for (auto& x : v) x *= s;
    return SampledFunction(origin_ * Rational(n), spacing_ * Rational(n), std::move(v));
}

SampledFunction SampledFunction::dilated_inverse(std::int64_t n) const {
    const double s = std::sqrt(static_cast<double>(n));
    std::vector<cdouble> v = values_;
    for (auto& x : v) x *= s;
    return SampledFunction(origin_ / Rational(n), spacing_ / Rational(n), std::move(v));
}

SampledFunction SampledFunction::refined(const Rational& new_spacing,
                                         const Rational& new_origin) const {
    const std::int64_t r = cell_ratio(spacing_, new_spacing);
    const std::int64_t off = cell_offset(origin_, new_origin, new_spacing);
    if (off < 0) throw structural_error("refined: new origin past function support");
    std::vector<cdouble> v(static_cast<std::size_t>(off + size() * r), 0.0);
    for (std::int64_t i = 0; i < size(); ++i)
        for (std::int64_t j = 0; j < r; ++j)
            v[static_cast<std::size_t>(off + i * r + j)] = values_[static_cast<std::size_t>(i)];
    return SampledFunction(new_origin, new_spacing, std::move(v));
}

namespace {

// Common grid description for two functions: spacing dividing both, aligned
// with both origins.
Rational common_spacing(const SampledFunction& f, const SampledFunction& g) {
    Rational h = rational_gcd(f.spacing(), g.spacing());
    Rational d = f.origin() - g.origin();
    if (d.num() != 0) h = rational_gcd(h, Rational(d.num() < 0 ? -d.num() : d.num(), d.den()));
    return h;
}

template <typename Op>
SampledFunction combine(const SampledFunction& f, const SampledFunction& g, Op op) {
    const Rational h = common_spacing(f, g);
    const Rational lo = std::min(f.origin(), g.origin());
    const Rational hi = std::max(f.support_end(), g.support_end());
    const std::int64_t n = ((hi - lo) / h).num();
    const std::int64_t rf = (f.spacing() / h).num();
    const std::int64_t rg = (g.spacing() / h).num();
    const std::int64_t of = ((f.origin() - lo) / h).num();
    const std::int64_t og = ((g.origin() - lo) / h).num();
    std::vector<cdouble> v(static_cast<std::size_t>(n), 0.0);
    for (std::int64_t j = 0; j < n; ++j) {
        cdouble a = 0.0, b = 0.0;
        if (j >= of && (j - of) / rf < f.size()) a = f.values()[static_cast<std::size_t>((j - of) / rf)];
        if (j >= og && (j - og) / rg < g.size()) b = g.values()[static_cast<std::size_t>((j - og) / rg)];
        v[static_cast<std::size_t>(j)] = op(a, b);
    }
    return SampledFunction(lo, h, std::move(v)).trimmed();
}

}  // namespace

SampledFunction SampledFunction::operator+(const SampledFunction& other) const {
    if (values_.empty()) return other;
    if (other.values_.empty()) return *this;
    return combine(*this, other, [](cdouble a, cdouble b) { return a + b; });
}

SampledFunction SampledFunction::operator-(const SampledFunction& other) const {
    if (other.values_.empty()) return *this;
    if (values_.empty()) return other.scaled(-1.0);
    return combine(*this, other, [](cdouble a, cdouble b) { return a - b; });
}

SampledFunction SampledFunction::trimmed() const {
    std::int64_t b = 0, e = size();
    while (b < e && values_[static_cast<std::size_t>(b)] == cdouble(0.0)) ++b;
    while (e > b && values_[static_cast<std::size_t>(e - 1)] == cdouble(0.0)) --e;
    if (b == 0 && e == size()) return *this;
    std::vector<cdouble> v(values_.begin() + b, values_.begin() + e);
    return SampledFunction(origin_ + spacing_ * Rational(b), spacing_, std::move(v));
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    // gcd(p/q, r/s) = gcd(p*s, r*q) / (q*s)
    const __int128 n1 = static_cast<__int128>(a.num()) * b.den();
    const __int128 n2 = static_cast<__int128>(b.num()) * a.den();
    __int128 x = n1 < 0 ? -n1 : n1, y = n2 < 0 ? -n2 : n2;
    while (y) { __int128 t = x % y; x = y; y = t; }
    const __int128 den = static_cast<__int128>(a.den()) * b.den();
    // Reduce before narrowing.
    __int128 g = x, d = den;
    __int128 gg = g, dd = d;
    while (dd) { __int128 t = gg % dd; gg = dd; dd = t; }
    g /= gg; d /= gg;
    if (g > INT64_MAX || d > INT64_MAX) throw capacity_error("rational_gcd overflow");
    return Rational(static_cast<std::int64_t>(g), static_cast<std::int64_t>(d));
}

cdouble inner_product(const SampledFunction& f, const SampledFunction& g) {
    if (f.values().empty() || g.values().empty()) return 0.0;
    if (f.support_end() <= g.origin() || g.support_end() <= f.origin()) return 0.0;
    const Rational h = common_spacing(f, g);
    const Rational lo = std::max(f.origin(), g.origin());
    const Rational hi = std::min(f.support_end(), g.support_end());
    const std::int64_t n = ((hi - lo) / h).num();
    const std::int64_t rf = (f.spacing() / h).num();
    const std::int64_t rg = (g.spacing() / h).num();
    const std::int64_t of = ((lo - f.origin()) / h).num();
    const std::int64_t og = ((lo - g.origin()) / h).num();
    cdouble s = 0.0;
    for (std::int64_t j = 0; j < n; ++j) {
        const cdouble a = f.values()[static_cast<std::size_t>((j + of) / rf)];
        const cdouble b = g.values()[static_cast<std::size_t>((j + og) / rg)];
        s += a * std::conj(b);
    }
    return s * h.to_double();
}

cdouble fourier_eval(const SampledFunction& f, double xi) {
    const double dx = f.spacing().to_double();
    if (xi == 0.0) {
        cdouble s = 0.0;
        for (const auto& v : f.values()) s += v;
        return s * dx;
    }
    // Per-cell transform: e^{-i xi (x + dx/2)} * dx * sinc(xi dx / 2).
    const double half = xi * dx / 2.0;
    const double sinc = std::sin(half) / half;
    const double x0 = f.origin().to_double() + dx / 2.0;
    const cdouble step = std::exp(cdouble(0.0, -xi * dx));
    cdouble phase = std::exp(cdouble(0.0, -xi * x0));
    cdouble s = 0.0;
    std::int64_t i = 0;
    for (const auto& v : f.values()) {
        s += v * phase;
        phase *= step;
        // Re-anchor the running phase now and then to cap drift.
        if ((++i & 0xFFF) == 0)
            phase = std::exp(cdouble(0.0, -xi * (x0 + dx * static_cast<double>(i))));
    }
    return s * (dx * sinc);
}

cdouble autocorrelation(const SampledFunction& f, std::int64_t k) {
    return inner_product(f, f.translated(Rational(k)));
}

cdouble cross_correlation(const SampledFunction& f, const SampledFunction& g, std::int64_t k) {
    return inner_product(f, g.translated(Rational(k)));
}

void write_csv(std::ostream& os, const SampledFunction& f) {
    os << "x,re,im\n";
    os.precision(17);
    for (std::int64_t i = 0; i < f.size(); ++i) {
        const double x = (f.origin() + f.spacing() * Rational(i)).to_double();
        const cdouble v = f.values()[static_cast<std::size_t>(i)];
        os << x << "," << v.real() << "," << v.imag() << "\n";
    }
}

}  // namespace superwav
