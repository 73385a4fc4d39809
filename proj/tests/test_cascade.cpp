#include <doctest.h>

#include <cmath>
#include <numbers>

#include "superwav/cascade.hpp"

using namespace superwav;

namespace {
const double pi = std::numbers::pi;

CycleSystem trivial_system() { return CycleSystem(2, {Cycle(2, {RationalAngle()})}); }

CycleSystem cube_root_system() {
    return CycleSystem(2, {Cycle(2, {RationalAngle()}),
                           Cycle(2, {RationalAngle(1, 3), RationalAngle(2, 3)})});
}

// Piecewise-constant midpoint sampling of the triangle on [0, 2]; exact for
// the autocorrelation/transform checks because the hat is affine per cell.
SuperVector hat_start(const CycleSystem& sys, std::int64_t cells_per_unit) {
    const Rational h(1, cells_per_unit);
    std::vector<cdouble> v(static_cast<std::size_t>(2 * cells_per_unit));
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double x = (Rational(static_cast<std::int64_t>(i)) * h + h / Rational(2)).to_double();
        v[i] = x <= 1.0 ? x : 2.0 - x;
    }
    return SuperVector(sys, {SampledFunction(Rational(0), h, v)});
}
}  // namespace

TEST_SUITE_BEGIN("cascade");

TEST_CASE("canonical start") {
    const auto t = canonical_start(trivial_system());
    CHECK(t.component(0).values() == std::vector<cdouble>{1.0});
    CHECK(canonical_start_width(trivial_system()) == 1);

    const auto c = canonical_start(cube_root_system());
    CHECK(canonical_start_width(cube_root_system()) == 3);
    REQUIRE(c.size() == 3);
    for (std::int64_t j = 0; j < 3; ++j) {
        CHECK(c.component(j).spacing() == Rational(1));
        CHECK(c.component(j).size() == 3);
        CHECK(std::abs(c.component(j).values()[0] - cdouble(1.0 / 3.0)) < 1e-15);
    }

    CycleSystem seven(2, {Cycle(2, {RationalAngle(1, 7), RationalAngle(2, 7), RationalAngle(4, 7)})});
    CHECK(canonical_start_width(seven) == 7);
}

TEST_CASE("start validation") {
    CHECK(validate_start(canonical_start(trivial_system()), trivial_system()).passed);
    CHECK(validate_start(canonical_start(cube_root_system()), cube_root_system()).passed);

    // the triangle on [0, 2] satisfies both conditions
    const auto hat = hat_start(trivial_system(), 64);
    CHECK(validate_start(hat, trivial_system(), 1e-3).passed);

    // unnormalized double-width indicator fails the periodization condition
    SuperVector bad(trivial_system(), {SampledFunction::indicator(Rational(0), Rational(1), 2)});
    CHECK_FALSE(validate_start(bad, trivial_system()).passed);
}

TEST_CASE("one refinement step") {
    const auto fixed = canonical_start(trivial_system());
    const auto next = cascade_step(Filter::haar(), trivial_system(), fixed);
    CHECK((next - fixed).norm_sq() < 1e-26);

    const auto st_fixed = canonical_start(cube_root_system());
    const auto st_next = cascade_step(Filter::stretched_haar(3), cube_root_system(), st_fixed);
    CHECK((st_next - st_fixed).norm_sq() < 1e-26);

    // a hat start contracts toward the indicator
    const auto hat = hat_start(trivial_system(), 2);
    const auto once = cascade_step(Filter::haar(), trivial_system(), hat);
    CHECK((once - fixed).norm() < (hat - fixed).norm());

    CHECK_THROWS_AS(cascade_step(Filter::characteristic(2, ArcSet::full_circle()),
                                 trivial_system(), fixed),
                    structural_error);
}

TEST_CASE("cascade run converges with a decreasing trace") {
    CascadeOptions opts;
    opts.reference = canonical_start(trivial_system());
    opts.n_max = 20;
    opts.stop_tol = 0.0;  // run the full n_max
    opts.start_tol = 1e-6;
    const auto state = cascade_run(Filter::haar(), trivial_system(), hat_start(trivial_system(), 2),
                                   opts);
    REQUIRE(state.error_trace.size() >= 2);
    for (std::size_t i = 1; i < state.error_trace.size(); ++i)
        CHECK(state.error_trace[i] < state.error_trace[i - 1]);
    CHECK(state.error_trace.back() < 1e-3);
    // recursion identity on the correlation polynomials for the first steps
    for (double dev : state.identity_trace) CHECK(dev <= 1e-9);
}

TEST_CASE("cascade from the canonical start is stationary") {
    CascadeOptions opts;
    opts.stop_tol = 1e-12;
    const auto haar = cascade_run(Filter::haar(), trivial_system(),
                                  canonical_start(trivial_system()), opts);
    CHECK(haar.error_trace.front() <= 1e-12);
    const auto st = cascade_run(Filter::stretched_haar(3), cube_root_system(),
                                canonical_start(cube_root_system()), opts);
    CHECK(st.error_trace.front() <= 1e-12);
}

TEST_CASE("infinite product evaluation") {
    // at 0 every factor is 1
    const auto sys = cube_root_system();
    for (std::int64_t i = 0; i < 2; ++i)
        for (std::int64_t j = 0; j < sys.cycle(i).period(); ++j) {
            const auto v = product_eval(Filter::stretched_haar(3), sys, i, j, {0.0});
            CHECK(std::abs(v[0] - cdouble(1.0)) < 1e-10);
        }
    // closed form for the two-tap filter at pi
    const auto at_pi = product_eval(Filter::haar(), trivial_system(), 0, 0, {pi});
    CHECK(std::abs(at_pi[0] - cdouble(0.0, -2.0 / pi)) < 1e-9);

    // characteristic product: indicator of [-4 pi/7, pi/7) for the first
    // component of the 7th-root system
    const Filter chi = Filter::characteristic(
        2, ArcSet::from_intervals(RealIntervalSet(
               {{Rational(-1, 2), Rational(-11, 28)}, {Rational(3, 28), Rational(1, 2)}})));
    CycleSystem seven(2, {Cycle(2, {RationalAngle(1, 7), RationalAngle(2, 7), RationalAngle(4, 7)})});
    std::vector<double> grid;
    for (int s = -56; s < 56; ++s) grid.push_back(2 * pi * (s + 0.5) / 56.0);
    const auto vals = product_eval(chi, seven, 0, 0, grid);
    for (std::size_t s = 0; s < grid.size(); ++s) {
        const double turns = grid[s] / (2 * pi);
        const bool inside = -4.0 / 14.0 < turns && turns < 1.0 / 14.0;
        CHECK(std::abs(vals[s] - (inside ? cdouble(1.0) : cdouble(0.0))) < 1e-12);
    }
}

TEST_CASE("correlation function") {
    const auto haar_phi = canonical_start(trivial_system());
    CHECK(correlation_function(haar_phi, trivial_system())
              .max_coeff_deviation(TrigPolynomial::constant(1.0)) < 1e-14);

    const auto st_phi = canonical_start(cube_root_system());
    CHECK(correlation_function(st_phi, cube_root_system())
              .max_coeff_deviation(TrigPolynomial::constant(1.0)) < 1e-12);

    // single trivial-cycle component of the same width is only a tight frame
    SuperVector lone(trivial_system(),
                     {SampledFunction::indicator(Rational(0), Rational(1), 3, 1.0 / 3.0)});
    const auto h = correlation_function(lone, trivial_system());
    CHECK(std::abs(h.at(0) - cdouble(1.0 / 3.0)) < 1e-12);
    CHECK(std::abs(h.at(1) - cdouble(2.0 / 9.0)) < 1e-12);
    CHECK(std::abs(h.at(2) - cdouble(1.0 / 9.0)) < 1e-12);
}

TEST_CASE("scaling vector verification") {
    const auto haar = check_scaling_vector(canonical_start(trivial_system()), Filter::haar(),
                                           trivial_system());
    CHECK(haar.passed);
    CHECK(haar.correlation_deviation < 1e-10);
    CHECK(haar.scaling_residual < 1e-9);
    CHECK(haar.zero_value_deficit < 1e-9);
    CHECK(haar.necessary_only);

    const auto st = check_scaling_vector(canonical_start(cube_root_system()),
                                         Filter::stretched_haar(3), cube_root_system());
    CHECK(st.passed);

    // the projection phenomenon: condition (i) fails, (ii) holds
    SuperVector lone(trivial_system(),
                     {SampledFunction::indicator(Rational(0), Rational(1), 3, 1.0 / 3.0)});
    const auto proj = check_scaling_vector(lone, Filter::stretched_haar(3), trivial_system());
    CHECK_FALSE(proj.passed);
    CHECK(proj.correlation_deviation > 0.1);
    CHECK(proj.scaling_residual < 1e-9);
}

TEST_SUITE_END();
