#pragma once

#include <complex>
#include <vector>

#include "superwav/arcs.hpp"
#include "superwav/numerics.hpp"
#include "superwav/verdict.hpp"

namespace superwav {

// Two-sided finite complex sequence c_n, n in [-degree, degree].
class CoefficientSeq {
public:
    CoefficientSeq() : degree_(0), c_(1, 0.0) {}
    explicit CoefficientSeq(std::int64_t degree)
        : degree_(degree), c_(static_cast<std::size_t>(2 * degree + 1), 0.0) {}

    std::int64_t degree() const { return degree_; }
    cdouble at(std::int64_t n) const {
        if (n < -degree_ || n > degree_) return 0.0;
        return c_[static_cast<std::size_t>(n + degree_)];
    }
    void set(std::int64_t n, cdouble v) { c_[static_cast<std::size_t>(n + degree_)] = v; }

private:
    std::int64_t degree_;
    std::vector<cdouble> c_;
};

// A filter on the circle with scale N: either a trigonometric polynomial
// m(theta) = sum_k a_k e^{-ik theta} with a_k on [k_min, k_max], or
// sqrt(N) times the indicator of an arc set.
class Filter {
public:
    enum class Kind { trig, characteristic };

    static Filter trig(std::int64_t scale, std::int64_t k_min, std::vector<cdouble> coeffs);
    static Filter characteristic(std::int64_t scale, ArcSet support);

    static Filter haar();                 // a_0 = a_1 = 1/sqrt(2), N = 2
    static Filter stretched_haar(std::int64_t p);  // a_0 = a_p = 1/sqrt(2)

    Kind kind() const { return kind_; }
    std::int64_t scale() const { return scale_; }

    // trig accessors
    std::int64_t k_min() const { return k_min_; }
    std::int64_t k_max() const { return k_min_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const std::vector<cdouble>& coeffs() const { return coeffs_; }
    cdouble coeff(std::int64_t k) const {
        if (k < k_min() || k > k_max()) return 0.0;
        return coeffs_[static_cast<std::size_t>(k - k_min_)];
    }

    // characteristic accessor
    const ArcSet& support() const { return support_; }

    // Upper bound on the Lipschitz constant: sum |k a_k| (trig only).
    double lipschitz_bound() const;

private:
    Filter() = default;
    Kind kind_ = Kind::trig;
    std::int64_t scale_ = 2;
    std::int64_t k_min_ = 0;
    std::vector<cdouble> coeffs_;
    ArcSet support_;
};

// m(theta); theta in radians. Exact arc-membership test for characteristic
// filters when theta is given as a RationalAngle.
cdouble eval_filter(const Filter& m, double theta);
cdouble eval_filter(const Filter& m, const RationalAngle& theta);

// c_n = sum_k a_{k+n} conj(a_k): Fourier coefficients of |m|^2.
CoefficientSeq filter_autocorr(const Filter& m);

struct QmfVerdict : Verdict {
    bool degenerate_warning = false;  // |m|^2 identically 1
};

// R_m 1 = 1: trig via the autocorrelation coefficients, characteristic via
// exact arc tiling of the N preimage branches.
QmfVerdict check_qmf(const Filter& m, double tol = 1e-9);

// Unitarity a.e. of the (1/sqrt(N)) (m_i(rho^j z)) matrix, sampled.
Verdict check_unitarity(const std::vector<Filter>& bank, int sample_count = 256,
                        double tol = 1e-9);

}  // namespace superwav
