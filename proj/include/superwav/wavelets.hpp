#pragma once

#include <vector>

#include "superwav/cascade.hpp"
#include "superwav/filters.hpp"
#include "superwav/supervector.hpp"
#include "superwav/transfer.hpp"

namespace superwav {

// m0 plus N-1 high-pass filters forming a unitary polyphase matrix a.e.
class FilterBank {
public:
    explicit FilterBank(std::vector<Filter> filters, double tol = 1e-9);

    std::int64_t scale() const { return filters_[0].scale(); }
    const std::vector<Filter>& filters() const { return filters_; }
    const Filter& lowpass() const { return filters_[0]; }
    const Filter& filter(std::int64_t i) const { return filters_[static_cast<std::size_t>(i)]; }

private:
    std::vector<Filter> filters_;
};

// Completes m0 to a filter bank. Trig filters: N = 2 only, conjugate
// quadrature mirror m1(theta) = e^{-i theta} conj(m0(theta + pi)).
// Characteristic filters: deterministic fiber coloring, E0 = E.
FilterBank highpass_complete(const Filter& m0);

// psi_i = U^{-1} pi(m_i) phi in the time domain (trig banks).
// `validation_tol` gates the scaling-vector precondition on phi.
std::vector<SuperVector> synthesize_wavelet(const FilterBank& bank, const SuperVector& phi,
                                            const CycleSystem& system,
                                            double validation_tol = 1e-6);

enum class RepOp { U, Uinv, T, Tinv };

// The cyclic-amplification dilation/translation, exact on grids.
SuperVector apply_rep_operator(RepOp op, const SuperVector& v, const CycleSystem& system);
// pi(f) for a trig polynomial f: component j gets sum_k f_k z_j^k (T^k ξ_j).
SuperVector apply_pi(const TrigPolynomial& f, const SuperVector& v, const CycleSystem& system);

// U^m T^n v (m, n any sign).
SuperVector dilate_translate(const SuperVector& v, const CycleSystem& system, std::int64_t m,
                             std::int64_t n);

// Restriction of v to a sub-system of selected cycles.
SuperVector project_to_cycles(const SuperVector& v, const std::vector<std::int64_t>& indices);

// (sum over i, m, n of |<f, U^m T^n psi_i>|^2) / ||f||^2 over the stated
// truncation ranges.
double frame_ratio(const std::vector<SuperVector>& psis, const SuperVector& f,
                   std::int64_t m_lo, std::int64_t m_hi, std::int64_t n_lo, std::int64_t n_hi);

struct GramVerdict : Verdict {
    double max_off_diagonal = 0.0;
    double max_diagonal_deviation = 0.0;
};

GramVerdict gram_check(const std::vector<SuperVector>& family, double tol = 1e-9);

}  // namespace superwav
