#include "hypasym/errors.hpp"
#include "hypasym/gamma.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace hypasym;
using std::numbers::pi;
using C = std::complex<double>;

TEST_CASE("exact values") {
    const LogGammaValue one = log_gamma(C(1.0, 0.0));
    CHECK(std::fabs(one.logmag) < 1e-15);
    CHECK(std::fabs(one.phase) < 1e-15);
    const LogGammaValue half = log_gamma(C(0.5, 0.0));
    CHECK(half.logmag == doctest::Approx(0.5 * std::log(pi)).epsilon(1e-15));
    CHECK(std::fabs(half.phase) < 1e-15);
    CHECK_THROWS_AS(log_gamma(C(0.0, 0.0)), PoleError);
    CHECK_THROWS_AS(log_gamma(C(-3.0, 0.0)), PoleError);
}

TEST_CASE("real axis against std::lgamma") {
    for (double x : {0.1, 0.75, 2.5, 7.0, 33.3, 170.5})
        CHECK(log_gamma(C(x, 0.0)).logmag == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
}

// Recurrence log Gamma(z+1) = log Gamma(z) + log z, modulo 2 pi i in the phase.
double recurrence_defect(C z) {
    const C d = log_gamma(z + 1.0).as_complex() - log_gamma(z).as_complex() - std::log(z);
    const double k = std::round(d.imag() / (2.0 * pi));
    return std::abs(d - C(0.0, 2.0 * pi * k));
}

TEST_CASE("recurrence at 1/4 + 90i") { CHECK(recurrence_defect(C(0.25, 90.0)) < 1e-12); }

TEST_CASE("recurrence on random points with |z| <= 200") {
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> re(0.05, 140.0), im(-140.0, 140.0);
    for (int i = 0; i < 100; ++i) {
        const C z(re(gen), im(gen));
        CHECK(recurrence_defect(z) < 1e-12);
    }
}

TEST_CASE("extended precision log gamma agrees with double version") {
    const PrecisionContext ctx = big_eval_context(50);
    for (C z : {C(0.25, 90.0), C(0.25, -110.0), C(3.0, 0.5), C(0.5, 0.0)}) {
        const BigComplex b = log_gamma(BigComplex(z.real(), z.imag(), ctx), ctx);
        const LogGammaValue d = log_gamma(z);
        CHECK(b.re().to_double() == doctest::Approx(d.logmag).epsilon(1e-13));
        const double k = std::round((b.im().to_double() - d.phase) / (2.0 * pi));
        CHECK(std::fabs(b.im().to_double() - d.phase - 2.0 * pi * k) < 1e-12 * std::max(1.0, std::fabs(d.phase)));
    }
}

TEST_CASE("prefactor magnitude follows the leading Stirling form") {
    const double r = 100.0, alpha = 0.1;
    const ScaledComplex g = gamma_prefactor(r, alpha);
    const double lead = std::log(2.0 * std::sqrt(pi)) - pi * r - 0.25 * std::log1p(-alpha * alpha) - 0.5 * std::log(r);
    CHECK(std::fabs(std::exp(g.log_abs() - lead) - 1.0) <= 0.05);
    CHECK(std::llabs(g.exponent() + 314) <= 6);

    const ScaledComplex s = stirling_prefactor_leading(r, alpha);
    CHECK(s.log_abs() == doctest::Approx(lead).epsilon(1e-14));
    CHECK((g - s).abs().to_double() / g.abs().to_double() <= 0.05);
}

TEST_CASE("conjugate symmetry of the Gamma product") {
    // Gamma(conj z) = conj Gamma(z), so flipping r conjugates the product.
    const double r = 40.0, alpha = 0.2;
    const C z1(0.25, r * (1 - alpha)), z2(0.25, -r * (1 + alpha));
    const C direct = log_gamma(z1).as_complex() + log_gamma(z2).as_complex() - log_gamma(C(0.5, 0)).as_complex();
    const C flipped = log_gamma(std::conj(z1)).as_complex() + log_gamma(std::conj(z2)).as_complex() -
                      log_gamma(C(0.5, 0)).as_complex();
    CHECK(direct.real() == doctest::Approx(flipped.real()).epsilon(1e-14));
    CHECK(direct.imag() == doctest::Approx(-flipped.imag()).epsilon(1e-14));
    const ScaledComplex g = gamma_prefactor(r, alpha);
    CHECK(g.log_abs() == doctest::Approx(direct.real()).epsilon(1e-13));
}

TEST_CASE("Stirling ratio approaches 1 like 1/r") {
    double prev = 1.0;
    for (double r : {50.0, 100.0, 200.0, 400.0}) {
        const ScaledComplex g = gamma_prefactor(r, 0.1), s = stirling_prefactor_leading(r, 0.1);
        const double dev = ((g - s).abs() / g.abs()).to_double();
        if (r > 50.0) {
            CHECK(dev < prev);
            // deviation ~ 1/r: halves per doubling, within a factor 3
            CHECK(prev / dev > 2.0 / 3.0);
            CHECK(prev / dev < 6.0);
        }
        prev = dev;
    }
}

TEST_CASE("Stirling modulus scaling law") {
    const double l100 = stirling_prefactor_leading(100.0, 0.3).log_abs();
    const double l200 = stirling_prefactor_leading(200.0, 0.3).log_abs();
    CHECK(std::fabs((l200 - l100) - (-100.0 * pi - 0.5 * std::log(2.0))) < 1e-10);
}
