#pragma once

#include <optional>
#include <vector>

#include "superwav/filters.hpp"
#include "superwav/supervector.hpp"
#include "superwav/transfer.hpp"
#include "superwav/verdict.hpp"

namespace superwav {

class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

struct CascadeState {
    SuperVector iterate;
    std::int64_t iterations = 0;
    // ||phi_ref - psi^(n)|| when a reference is given, else successive
    // differences ||psi^(n+1) - psi^(n)||.
    std::vector<double> error_trace;
    // Deviations of the recursion identity h_{phi - psi^(n+1)} = R h_{phi - psi^(n)}
    // (coefficient-wise) for the first few steps; empty without a reference.
    std::vector<double> identity_trace;
};

// Starting vector of the convergence theorem: every component (1/L) chi_[0,L)
// with L the least integer making all cycle points L-th roots of unity.
SuperVector canonical_start(const CycleSystem& system);
std::int64_t canonical_start_width(const CycleSystem& system);

// Checks the two starting-vector conditions: the periodized square modulus is
// the delta pattern at cycle-point differences, and psi_hat(2 k pi) = delta_k.
Verdict validate_start(const SuperVector& psi0, const CycleSystem& system, double tol = 1e-9);

// One refinement step: within each cycle, output component j+1 (cyclic) is
// x -> sqrt(N) sum_k (a_k z_j^k / alpha_j) psi_j(N x - k). Trig filters only.
SuperVector cascade_step(const Filter& m, const CycleSystem& system, const SuperVector& psi);

struct CascadeOptions {
    std::int64_t n_max = 40;
    double stop_tol = 1e-10;
    double start_tol = 1e-9;
    bool skip_start_validation = false;
    std::optional<SuperVector> reference;
};

CascadeState cascade_run(const Filter& m, const CycleSystem& system, const SuperVector& psi0,
                         const CascadeOptions& opts = {});

// Infinite-product evaluation of the scaling vector component's Fourier
// transform at each grid frequency (Fourier-domain route, Eq-free of grids).
std::vector<cdouble> product_eval(const Filter& m, const CycleSystem& system,
                                  std::int64_t cycle_index, std::int64_t point_index,
                                  const std::vector<double>& xi_grid,
                                  double truncation_tol = 1e-12);

// h(theta) = sum_j sum_k <v_j, T^k w_j> e^{-ik(theta - theta_j)} over all
// components; w defaults to v.
TrigPolynomial correlation_function(const SuperVector& v, const CycleSystem& system,
                                    const SuperVector* w = nullptr);

struct ScalingVectorVerdict : Verdict {
    double correlation_deviation = 0.0;  // (i)
    double scaling_residual = 0.0;       // (ii)
    double zero_value_deficit = 0.0;     // (iii), necessary-only
    bool necessary_only = true;          // (iii) cannot be decided from samples
};

ScalingVectorVerdict check_scaling_vector(const SuperVector& v, const Filter& m,
                                          const CycleSystem& system, double tol = 1e-9);

}  // namespace superwav
