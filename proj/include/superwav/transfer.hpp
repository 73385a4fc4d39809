#pragma once

#include <vector>

#include "superwav/cycles.hpp"
#include "superwav/filters.hpp"
#include "superwav/supervector.hpp"
#include "superwav/verdict.hpp"

namespace superwav {

// Trigonometric polynomial h(theta) = sum_k h_k e^{-ik theta}, |k| <= degree.
class TrigPolynomial {
public:
    TrigPolynomial() : coeffs_(1, 0.0) {}
    explicit TrigPolynomial(std::int64_t degree)
        : coeffs_(static_cast<std::size_t>(2 * degree + 1), 0.0) {}

    static TrigPolynomial constant(cdouble c);

    std::int64_t degree() const { return (static_cast<std::int64_t>(coeffs_.size()) - 1) / 2; }
    cdouble at(std::int64_t k) const {
        if (k < -degree() || k > degree()) return 0.0;
        return coeffs_[static_cast<std::size_t>(k + degree())];
    }
    void set(std::int64_t k, cdouble v) { coeffs_[static_cast<std::size_t>(k + degree())] = v; }

    cdouble eval(double theta) const;
    cdouble eval(const RationalAngle& theta) const { return eval(theta.radians()); }

    TrigPolynomial operator+(const TrigPolynomial& o) const;
    TrigPolynomial operator-(const TrigPolynomial& o) const;
    TrigPolynomial scaled(cdouble factor) const;
    // Drops the zero fringe (tolerance 0).
    TrigPolynomial trimmed() const;

    double max_coeff_deviation(const TrigPolynomial& o) const;

private:
    std::vector<cdouble> coeffs_;
};

// Matrix realization of the transfer operator on the invariant space of trig
// polynomials of degree <= d, d = ceil(D / (N-1)). A_{m,j} = c_{N m - j}.
class LawtonMatrix {
public:
    explicit LawtonMatrix(const Filter& m);

    std::int64_t half_dim() const { return d_; }  // indices run in [-d, d]
    std::int64_t dim() const { return 2 * d_ + 1; }
    cdouble entry(std::int64_t m, std::int64_t j) const {
        return a_[static_cast<std::size_t>((m + d_) * dim() + (j + d_))];
    }

    TrigPolynomial apply(const TrigPolynomial& h) const;

private:
    std::int64_t d_;
    std::vector<cdouble> a_;  // row-major, (2d+1)^2
};

// (R h)_m = sum_j c_{N m - j} h_j with c the filter autocorrelation.
TrigPolynomial apply_transfer(const Filter& m, const TrigPolynomial& h);

struct SpectrumReport {
    std::vector<cdouble> eigenvalues;            // all of them
    std::vector<cdouble> unit_modulus;           // ||lambda| - 1| <= tol
    std::int64_t multiplicity_of_one = 0;        // eigenvalue clustering count
    std::int64_t rank_deficiency_of_a_minus_i = 0;  // cross-check
    bool consistent = false;                     // the two counts agree
};

SpectrumReport peripheral_spectrum(const LawtonMatrix& a, double tol = 1e-8);

enum class OrthogonalityKind { ORTHOGONAL, TIGHT_FRAME_ONLY, INCONSISTENT };

struct OrthogonalityVerdict : Verdict {
    OrthogonalityKind verdict = OrthogonalityKind::INCONSISTENT;
    std::int64_t selected_count = 0;
    std::int64_t cohen_count = 0;    // all detected m0-cycles
    std::int64_t lawton_count = 0;   // eigenvalue-1 multiplicity
    std::vector<Cycle> missing_cycles;
};

// Theorem-of-record check: ORTHOGONAL iff selected = Cohen count = Lawton
// multiplicity; TIGHT_FRAME_ONLY when the selection is a proper subset.
OrthogonalityVerdict orthogonality_verdict(const Filter& m, const CycleSystem& selected,
                                           std::int64_t max_period = 8, double tol = 1e-8);

// h_C(theta) assembled from component autocorrelations: coefficient of
// e^{-ik theta} is sum_j <phi_j, T^k phi_j> e^{i k theta_j}.
TrigPolynomial harmonic_for_cycle(const SuperVector& phi, const CycleSystem& system,
                                  std::int64_t cycle_index);

}  // namespace superwav
