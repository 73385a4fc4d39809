#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "superwav/arcs.hpp"
#include "superwav/numerics.hpp"
#include "superwav/supervector.hpp"

using namespace superwav;

namespace {
const double pi = std::numbers::pi;

SampledFunction random_function(std::mt19937& rng) {
    std::uniform_int_distribution<int> len(1, 12);
    std::uniform_int_distribution<std::int64_t> off(-4, 4);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    const int n = len(rng);
    std::vector<cdouble> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = cdouble(val(rng), val(rng));
    return SampledFunction(Rational(off(rng)), Rational(1, 4), std::move(v));
}
}  // namespace

TEST_SUITE_BEGIN("numerics");

TEST_CASE("rational arithmetic is exact and reduced") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(-1, 3).mod1() == Rational(2, 3));
    CHECK(Rational(7, 3).mod1() == Rational(1, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, INT64_MAX) + Rational(1, INT64_MAX - 2), capacity_error);
}

TEST_CASE("interval set algebra") {
    const auto a = RealIntervalSet::single(Rational(0), Rational(1));
    const auto b = RealIntervalSet::single(Rational(1, 2), Rational(3, 2));
    CHECK(a.unite(b).measure() == Rational(3, 2));
    CHECK(a.intersect(b).measure() == Rational(1, 2));
    CHECK(a.subtract(b) == RealIntervalSet::single(Rational(0), Rational(1, 2)));
    CHECK(a.symmetric_difference(a).empty());
    // scale(c) = {x : c x in S}
    CHECK(a.scale(Rational(2)) == RealIntervalSet::single(Rational(0), Rational(1, 2)));
    CHECK(a.scale(Rational(1, 2)) == RealIntervalSet::single(Rational(0), Rational(2)));
    CHECK(a.shift(Rational(3)).intervals().front().lo == Rational(3));
    // adjacent pieces merge
    const RealIntervalSet m({{Rational(0), Rational(1, 2)}, {Rational(1, 2), Rational(1)}});
    CHECK(m.intervals().size() == 1);
}

TEST_CASE("arc sets wrap and rotate") {
    const auto e = ArcSet::arc(RationalAngle(3, 4), RationalAngle(1, 4));
    CHECK(e.measure() == Rational(1, 2));
    CHECK(e.arcs().size() == 2);  // stored split at the wrap
    CHECK(e.contains(RationalAngle(0, 1)));
    CHECK(e.contains(RationalAngle(3, 4)));       // half-open: lo in
    CHECK_FALSE(e.contains(RationalAngle(1, 4)));  // hi out
    CHECK(e.rotate(RationalAngle(1, 4)) == ArcSet::arc(RationalAngle(0, 1), RationalAngle(1, 2)));
    CHECK(e.complement() == ArcSet::arc(RationalAngle(1, 4), RationalAngle(3, 4)));
    // preimage under doubling: two half-size copies
    const auto pre = e.preimage_times(2);
    CHECK(pre.measure() == Rational(1, 2));
    CHECK(pre.contains(RationalAngle(7, 8)));
    CHECK(pre.contains(RationalAngle(3, 8)));
    CHECK_FALSE(pre.contains(RationalAngle(1, 8)));
}

TEST_CASE("inner products of indicators") {
    const auto u = SampledFunction::indicator(Rational(0), Rational(1), 1);
    const auto v = SampledFunction::indicator(Rational(1), Rational(1), 1);
    CHECK(inner_product(u, u) == cdouble(1.0));
    CHECK(inner_product(u, v) == cdouble(0.0));
    const auto w = SampledFunction::indicator(Rational(0), Rational(1), 3, 1.0 / 3.0);
    CHECK(std::abs(inner_product(w, w) - cdouble(1.0 / 3.0)) < 1e-15);
}

TEST_CASE("super inner product sums components") {
    CycleSystem sys(2, {Cycle(2, {RationalAngle()}),
                        Cycle(2, {RationalAngle(1, 3), RationalAngle(2, 3)})});
    const auto c = SampledFunction::indicator(Rational(0), Rational(1), 3, 1.0 / 3.0);
    SuperVector v(sys, {c, c, c});
    CHECK(std::abs(super_inner_product(v, v) - cdouble(1.0)) < 1e-15);
    CycleSystem other(2, {Cycle(2, {RationalAngle()})});
    SuperVector w(other, {c});
    CHECK_THROWS_AS(super_inner_product(v, w), structural_error);
}

TEST_CASE("fourier transform of the unit indicator") {
    const auto f = SampledFunction::indicator(Rational(0), Rational(1), 1);
    CHECK(std::abs(fourier_eval(f, 0.0) - cdouble(1.0)) < 1e-15);
    CHECK(std::abs(fourier_eval(f, 2 * pi)) < 1e-14);
    // e^{-i xi/2} sin(xi/2)/(xi/2) at xi = pi
    CHECK(std::abs(fourier_eval(f, pi) - cdouble(0.0, -2.0 / pi)) < 1e-14);
}

TEST_CASE("autocorrelations of indicators") {
    const auto u = SampledFunction::indicator(Rational(0), Rational(1), 1);
    CHECK(autocorrelation(u, 0) == cdouble(1.0));
    CHECK(autocorrelation(u, 1) == cdouble(0.0));
    const auto w = SampledFunction::indicator(Rational(0), Rational(1), 3, 1.0 / 3.0);
    CHECK(std::abs(autocorrelation(w, 1) - cdouble(2.0 / 9.0)) < 1e-15);
    CHECK(std::abs(autocorrelation(w, 2) - cdouble(1.0 / 9.0)) < 1e-15);
}

TEST_CASE("parseval quadrature") {
    std::mt19937 rng(7);
    const auto f = random_function(rng);
    const double bandwidth = 256.0 * pi * 2.0;
    const int samples = 1 << 16;
    double integral = 0.0;
    for (int s = 0; s < samples; ++s) {
        const double xi = -bandwidth + (2 * bandwidth) * (s + 0.5) / samples;
        integral += std::norm(fourier_eval(f, xi));
    }
    integral *= (2 * bandwidth / samples) / (2 * pi);
    CHECK(std::abs(integral - f.norm_sq()) / f.norm_sq() < 1e-3);
}

TEST_CASE("inner product symmetry and parallelogram law") {
    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        const auto f = random_function(rng);
        const auto g = random_function(rng);
        CHECK(inner_product(f, g) == std::conj(inner_product(g, f)));
        const double lhs = (f + g).norm_sq() + (f - g).norm_sq();
        const double rhs = 2 * f.norm_sq() + 2 * g.norm_sq();
        CHECK(std::abs(lhs - rhs) < 1e-12);
        for (std::int64_t k = 0; k <= 4; ++k)
            CHECK(autocorrelation(f, -k) == std::conj(autocorrelation(f, k)));
    }
}

TEST_CASE("dilation is unitary and exact on grids") {
    std::mt19937 rng(13);
    const auto f = random_function(rng);
    const auto uf = f.dilated(2);
    CHECK(std::abs(uf.norm_sq() - f.norm_sq()) < 1e-13);
    const auto back = uf.dilated_inverse(2);
    CHECK(back.origin() == f.origin());
    CHECK(std::abs((back - f).norm_sq()) < 1e-26);
}

TEST_CASE("csv export format") {
    const auto f = SampledFunction(Rational(-1, 2), Rational(1, 2), {cdouble(1.0, -2.0), 0.25});
    std::ostringstream os;
    write_csv(os, f);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "x,re,im");
    std::getline(is, line);
    CHECK(line.substr(0, 5) == "-0.5,");
    CHECK(line.find("1") != std::string::npos);
    std::getline(is, line);
    CHECK(line.substr(0, 2) == "0,");
}

TEST_SUITE_END();
