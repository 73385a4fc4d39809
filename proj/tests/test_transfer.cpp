#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "superwav/cascade.hpp"
#include "superwav/transfer.hpp"

using namespace superwav;

namespace {
const double pi = std::numbers::pi;

// Independent oracle: sample (R h)(theta) = (1/N) sum over the N preimage
// angles (theta + 2 pi l)/N of |m|^2 h, then recover coefficients by DFT.
TrigPolynomial transfer_by_sampling(const Filter& m, const TrigPolynomial& h,
                                    std::int64_t out_degree) {
    const std::int64_t n = m.scale();
    const int samples = 256;
    std::vector<cdouble> vals(samples);
    for (int s = 0; s < samples; ++s) {
        const double theta = 2 * pi * s / samples;
        cdouble acc = 0.0;
        for (std::int64_t l = 0; l < n; ++l) {
            const double w = (theta + 2 * pi * static_cast<double>(l)) / static_cast<double>(n);
            acc += std::norm(eval_filter(m, w)) * h.eval(w);
        }
        vals[static_cast<std::size_t>(s)] = acc / static_cast<double>(n);
    }
    TrigPolynomial out(out_degree);
    for (std::int64_t k = -out_degree; k <= out_degree; ++k) {
        cdouble c = 0.0;
        for (int s = 0; s < samples; ++s)
            c += vals[static_cast<std::size_t>(s)] *
                 std::exp(cdouble(0.0, static_cast<double>(k) * 2 * pi * s / samples));
        out.set(k, c / static_cast<double>(samples));
    }
    return out;
}

TrigPolynomial random_poly(std::mt19937& rng, std::int64_t degree) {
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    TrigPolynomial h(degree);
    for (std::int64_t k = -degree; k <= degree; ++k) h.set(k, cdouble(val(rng), val(rng)));
    return h;
}
}  // namespace

TEST_SUITE_BEGIN("transfer");

TEST_CASE("constant one is fixed") {
    const auto r = apply_transfer(Filter::haar(), TrigPolynomial::constant(1.0));
    CHECK(r.max_coeff_deviation(TrigPolynomial::constant(1.0)) < 1e-14);
}

TEST_CASE("transfer operator agrees with the sampling oracle") {
    std::mt19937 rng(3);
    for (const Filter& m : {Filter::haar(), Filter::stretched_haar(3)}) {
        for (int t = 0; t < 10; ++t) {
            const auto h = random_poly(rng, 3);
            const auto r = apply_transfer(m, h);
            const auto oracle = transfer_by_sampling(m, h, r.degree() + 1);
            CHECK(r.max_coeff_deviation(oracle) < 1e-12);
        }
    }
    // the specific first-harmonic case for the two-coefficient filter
    TrigPolynomial e1(1);
    e1.set(1, 1.0);
    const auto r = apply_transfer(Filter::haar(), e1);
    CHECK(std::abs(r.at(0) - cdouble(0.5)) < 1e-14);
    CHECK(std::abs(r.at(1) - cdouble(0.5)) < 1e-14);
    CHECK(std::abs(r.at(-1)) < 1e-14);
}

TEST_CASE("constant term of R h matches the autocorrelation pairing") {
    std::mt19937 rng(5);
    const Filter m = Filter::stretched_haar(3);
    const auto c = filter_autocorr(m);
    for (int t = 0; t < 20; ++t) {
        const auto h = random_poly(rng, 4);
        cdouble expected = 0.0;
        for (std::int64_t j = -h.degree(); j <= h.degree(); ++j) expected += c.at(-j) * h.at(j);
        CHECK(std::abs(apply_transfer(m, h).at(0) - expected) < 1e-12);
    }
}

TEST_CASE("positivity is preserved on squared magnitudes") {
    std::mt19937 rng(9);
    for (int t = 0; t < 10; ++t) {
        const auto g = random_poly(rng, 2);
        // h = |g|^2 as a trig polynomial via its autocorrelation
        TrigPolynomial h(4);
        for (std::int64_t k = -4; k <= 4; ++k) {
            cdouble s = 0.0;
            for (std::int64_t j = -2; j <= 2; ++j) s += g.at(j + k) * std::conj(g.at(j));
            h.set(k, s);
        }
        const auto r = apply_transfer(Filter::haar(), h);
        for (int s = 0; s < 1024; ++s)
            CHECK(r.eval(2 * pi * s / 1024.0).real() >= -1e-9);
    }
}

TEST_CASE("lawton matrix entries") {
    const LawtonMatrix a(Filter::haar());
    REQUIRE(a.dim() == 3);
    // rows m = -1, 0, 1; entries c_{2m-j}
    CHECK(std::abs(a.entry(-1, -1) - cdouble(0.5)) < 1e-14);
    CHECK(std::abs(a.entry(-1, 0)) < 1e-14);
    CHECK(std::abs(a.entry(0, -1) - cdouble(0.5)) < 1e-14);
    CHECK(std::abs(a.entry(0, 0) - cdouble(1.0)) < 1e-14);
    CHECK(std::abs(a.entry(0, 1) - cdouble(0.5)) < 1e-14);
    CHECK(std::abs(a.entry(1, 1) - cdouble(0.5)) < 1e-14);
    CHECK(std::abs(a.entry(1, -1)) < 1e-14);

    const LawtonMatrix s(Filter::stretched_haar(3));
    REQUIRE(s.dim() == 7);
    for (std::int64_t m = -3; m <= 3; ++m)
        for (std::int64_t j = -3; j <= 3; ++j) {
            const std::int64_t idx = 2 * m - j;
            cdouble want = 0.0;
            if (idx == 0) want = 1.0;
            if (idx == 3 || idx == -3) want = 0.5;
            CHECK(std::abs(s.entry(m, j) - want) < 1e-14);
        }

    const LawtonMatrix c(Filter::trig(2, 0, {1.0}));
    for (std::int64_t m = -c.half_dim(); m <= c.half_dim(); ++m)
        for (std::int64_t j = -c.half_dim(); j <= c.half_dim(); ++j)
            CHECK(std::abs(c.entry(m, j) - (j == 2 * m ? cdouble(1.0) : cdouble(0.0))) < 1e-14);
}

TEST_CASE("matrix and operator agree on the invariant space") {
    std::mt19937 rng(17);
    const Filter m = Filter::stretched_haar(3);
    const LawtonMatrix a(m);
    for (int t = 0; t < 100; ++t) {
        const auto h = random_poly(rng, a.half_dim());
        CHECK(a.apply(h).max_coeff_deviation(apply_transfer(m, h)) <= 1e-12);
    }
}

TEST_CASE("peripheral spectrum") {
    const auto haar = peripheral_spectrum(LawtonMatrix(Filter::haar()));
    CHECK(haar.multiplicity_of_one == 1);
    CHECK(haar.consistent);
    REQUIRE(haar.unit_modulus.size() == 1);
    // characteristic polynomial oracle: eigenvalues must be {1, 1/2, 1/2}
    std::vector<cdouble> ev = haar.eigenvalues;
    std::sort(ev.begin(), ev.end(), [](cdouble x, cdouble y) { return x.real() < y.real(); });
    CHECK(std::abs(ev[0] - cdouble(0.5)) < 1e-9);
    CHECK(std::abs(ev[1] - cdouble(0.5)) < 1e-9);
    CHECK(std::abs(ev[2] - cdouble(1.0)) < 1e-9);

    const auto st = peripheral_spectrum(LawtonMatrix(Filter::stretched_haar(3)));
    CHECK(st.multiplicity_of_one == 2);
    CHECK(st.consistent);
    std::int64_t minus_one = 0, plus_one = 0;
    for (const cdouble& l : st.unit_modulus) {
        if (std::abs(l - cdouble(1.0)) < 1e-6) ++plus_one;
        if (std::abs(l + cdouble(1.0)) < 1e-6) ++minus_one;
    }
    CHECK(plus_one == 2);
    CHECK(minus_one == 1);
    CHECK(st.unit_modulus.size() == 3);
    // unit-modulus eigenvalues obey lambda^p = 1 over the cycle periods {1, 2}
    for (const cdouble& l : st.unit_modulus) {
        const double d1 = std::abs(l - cdouble(1.0));
        const double d2 = std::abs(l * l - cdouble(1.0));
        CHECK(std::min(d1, d2) <= 1e-6);
    }
}

TEST_CASE("orthogonality verdict") {
    const auto haar_sel = detect_m0_cycles(Filter::haar(), 8);
    const auto v1 = orthogonality_verdict(Filter::haar(), haar_sel, 8);
    CHECK(v1.verdict == OrthogonalityKind::ORTHOGONAL);
    CHECK(v1.passed);
    CHECK(v1.cohen_count == 1);
    CHECK(v1.lawton_count == 1);

    const Filter st = Filter::stretched_haar(3);
    const auto both = detect_m0_cycles(st, 8);
    CHECK(orthogonality_verdict(st, both, 8).verdict == OrthogonalityKind::ORTHOGONAL);

    const auto trivial_only = both.select({0});
    const auto v2 = orthogonality_verdict(st, trivial_only, 8);
    CHECK(v2.verdict == OrthogonalityKind::TIGHT_FRAME_ONLY);
    CHECK_FALSE(v2.passed);
    REQUIRE(v2.missing_cycles.size() == 1);
    CHECK(v2.missing_cycles[0].points() ==
          std::vector<RationalAngle>{RationalAngle(1, 3), RationalAngle(2, 3)});
}

TEST_CASE("harmonic function of a cycle") {
    CycleSystem trivial(2, {Cycle(2, {RationalAngle()})});
    SuperVector haar_phi(trivial, {SampledFunction::indicator(Rational(0), Rational(1), 1)});
    const auto h = harmonic_for_cycle(haar_phi, trivial, 0);
    CHECK(h.max_coeff_deviation(TrigPolynomial::constant(1.0)) < 1e-14);

    const auto third = SampledFunction::indicator(Rational(0), Rational(1), 3, 1.0 / 3.0);
    SuperVector v(trivial, {third});
    const auto h1 = harmonic_for_cycle(v, trivial, 0);
    // 1/3 + (4/9) cos t + (2/9) cos 2t
    CHECK(std::abs(h1.at(0) - cdouble(1.0 / 3.0)) < 1e-12);
    CHECK(std::abs(h1.at(1) - cdouble(2.0 / 9.0)) < 1e-12);
    CHECK(std::abs(h1.at(-1) - cdouble(2.0 / 9.0)) < 1e-12);
    CHECK(std::abs(h1.at(2) - cdouble(1.0 / 9.0)) < 1e-12);
    CHECK(std::abs(h1.eval(0.0) - cdouble(1.0)) < 1e-10);
    CHECK(std::abs(h1.eval(2 * pi / 3)) < 1e-10);
    CHECK(std::abs(h1.eval(-2 * pi / 3)) < 1e-10);
    // fixed point of the transfer operator for the matching filter
    const auto r = apply_transfer(Filter::stretched_haar(3), h1);
    CHECK(r.max_coeff_deviation(h1) <= 1e-9);
}

TEST_SUITE_END();
