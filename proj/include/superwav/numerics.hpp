#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "superwav/rational.hpp"

namespace superwav {

using cdouble = std::complex<double>;

// Raised when two values that must live over the same structure (grid family,
// cycle system) do not.
class structural_error : public std::invalid_argument {
public:
    explicit structural_error(const std::string& what) : std::invalid_argument(what) {}
};

// A compactly supported function on R, constant = values[i] on
// [origin + i*spacing, origin + (i+1)*spacing). Grids are exact rationals so
// cascade iterates and inner products never pick up alignment error.
class SampledFunction {
public:
    SampledFunction() : origin_(0), spacing_(1) {}
    SampledFunction(Rational origin, Rational spacing, std::vector<cdouble> values);

    static SampledFunction zero() { return SampledFunction(); }
    // Indicator of [lo, lo + cells*spacing) scaled by `amplitude`.
    static SampledFunction indicator(Rational lo, Rational spacing, std::int64_t cells,
                                     cdouble amplitude = 1.0);

    const Rational& origin() const { return origin_; }
    const Rational& spacing() const { return spacing_; }
    const std::vector<cdouble>& values() const { return values_; }
    std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }
    Rational support_end() const { return origin_ + spacing_ * Rational(size()); }

    double norm_sq() const;
    double norm() const;

    SampledFunction scaled(cdouble factor) const;
    SampledFunction translated(const Rational& delta) const;
    // (Uf)(x) = f(x/N)/sqrt(N): exact on grids (spacing and origin times N).
    SampledFunction dilated(std::int64_t n) const;
    SampledFunction dilated_inverse(std::int64_t n) const;

    SampledFunction operator+(const SampledFunction& other) const;
    SampledFunction operator-(const SampledFunction& other) const;

    // Drops exactly-zero leading/trailing cells.
    SampledFunction trimmed() const;

    // Same function on a refined grid; new_spacing must divide spacing and the
    // origin shift must be a multiple of new_spacing.
    SampledFunction refined(const Rational& new_spacing, const Rational& new_origin) const;

    friend cdouble inner_product(const SampledFunction& f, const SampledFunction& g);

private:
    Rational origin_;
    Rational spacing_;
    std::vector<cdouble> values_;
};

// <f, g> = integral of f * conj(g), exact on the common grid refinement.
cdouble inner_product(const SampledFunction& f, const SampledFunction& g);

// f_hat(xi) = integral of f(x) e^{-i xi x} dx, closed form per grid cell.
cdouble fourier_eval(const SampledFunction& f, double xi);

// <f, T^k f> = integral of f(x) conj(f(x - k)) dx.
cdouble autocorrelation(const SampledFunction& f, std::int64_t k);
cdouble cross_correlation(const SampledFunction& f, const SampledFunction& g, std::int64_t k);

// gcd of two positive rationals.
Rational rational_gcd(const Rational& a, const Rational& b);

// CSV export: header "x,re,im", one row per cell left endpoint, >= 15
// significant digits.
void write_csv(std::ostream& os, const SampledFunction& f);

}  // namespace superwav
