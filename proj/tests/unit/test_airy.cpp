#include "hypasym/airy.hpp"
#include "hypasym/bigfloat.hpp"
#include "hypasym/gamma.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace hypasym;
using std::numbers::pi;

namespace {

// Reference Ai from the Maclaurin series summed at 120 digits, with the two
// constants taken from the extended-precision log-gamma.
double ai_reference(double xd) {
    const PrecisionContext ctx = big_eval_context(120);
    const BigReal one(1L, ctx), three(3L, ctx);
    auto gamma_of = [&](long num) {
        const BigComplex z(BigReal(num, ctx) / three, BigReal(ctx));
        return exp(log_gamma(z, ctx).re());
    };
    const BigReal c1 = one / (pow(three, BigReal(2L, ctx) / three) * gamma_of(2));
    const BigReal c2 = one / (pow(three, one / three) * gamma_of(1));
    const BigReal x(xd, ctx), x3 = x * x * x;
    BigReal f = one, g = x, tf = one, tg = x;
    for (long k = 1; k < 2000; ++k) {
        tf = tf * x3 / BigReal((3 * k - 1) * (3 * k), ctx);
        tg = tg * x3 / BigReal((3 * k) * (3 * k + 1), ctx);
        f = f + tf;
        g = g + tg;
        if (k > 10 && tf.log10_abs() < -130 && tg.log10_abs() < -130) break;
    }
    return (c1 * f - c2 * g).to_double();
}

} // namespace

TEST_CASE("value at the origin") {
    const double ai0 = 1.0 / (std::cbrt(9.0) * std::tgamma(2.0 / 3.0));
    CHECK(std::fabs(airy_ai(0.0).value - ai0) <= 1e-12 * ai0);
    CHECK(airy_ai(0.0).value == doctest::Approx(0.35502805).epsilon(1e-8));
    CHECK(airy_ai(0.0).method == AiryMethod::maclaurin);
}

TEST_CASE("absolute accuracy on [-10, 10]") {
    for (double x = -10.0; x <= 10.0; x += 0.625) {
        CAPTURE(x);
        CHECK(std::fabs(airy_ai(x).value - ai_reference(x)) <= 1e-10);
    }
}

TEST_CASE("relative accuracy for x >= 10") {
    for (double x : {10.0, 12.5, 15.0}) {
        CAPTURE(x);
        const double ref = ai_reference(x);
        CHECK(std::fabs(airy_ai(x).value - ref) <= 1e-8 * ref);
    }
}

TEST_CASE("envelope-relative accuracy for x <= -10") {
    for (double x : {-10.0, -12.5, -15.0}) {
        CAPTURE(x);
        const double env = 1.0 / (std::sqrt(pi) * std::pow(-x, 0.25));
        CHECK(std::fabs(airy_ai(x).value - ai_reference(x)) <= 1e-8 * env);
    }
}

TEST_CASE("x = 8 against the leading asymptotic form") {
    const double x = 8.0;
    const double lead = std::exp(-2.0 / 3.0 * std::pow(x, 1.5)) / (2.0 * std::sqrt(pi) * std::pow(x, 0.25));
    const double v = airy_ai(x).value;
    CHECK(std::fabs(v / lead - 1.0) <= 0.02);
    CHECK(v == doctest::Approx(ai_reference(x)).epsilon(1e-12));
    CHECK(airy_ai(x).method == AiryMethod::asymptotic_positive);
    CHECK(airy_ai(-8.0).method == AiryMethod::asymptotic_negative);
}

TEST_CASE("dual-method overlap on [5, 9] and [-9, -5]") {
    for (double x = 5.0; x <= 9.0 + 1e-12; x += 0.25) {
        CAPTURE(x);
        CHECK(std::fabs(detail::airy_ai_maclaurin(x) - detail::airy_ai_asymptotic(x)) <= 1e-8);
        CHECK(std::fabs(detail::airy_ai_maclaurin(-x) - detail::airy_ai_asymptotic(-x)) <= 1e-8);
    }
    // Overlap window quoted for the negative side.
    for (double x = -8.0; x <= -6.0; x += 0.1)
        CHECK(std::fabs(detail::airy_ai_maclaurin(x) - detail::airy_ai_asymptotic(x)) <= 1e-8);
}

TEST_CASE("Airy equation by finite differences") {
    const double h = 1e-3;
    for (double x = -5.0; x <= 5.0; x += 0.25) {
        auto ai = [](double t) { return airy_ai(t).value; };
        const double d2 = (-ai(x + 2 * h) + 16 * ai(x + h) - 30 * ai(x) + 16 * ai(x - h) - ai(x - 2 * h)) / (12 * h * h);
        CAPTURE(x);
        CHECK(std::fabs(d2 - x * ai(x)) <= 1e-6);
    }
}

TEST_CASE("sign pattern and first zero") {
    for (double x = 0.0; x <= 30.0; x += 0.5) CHECK(airy_ai(x).value > 0.0);
    double lo = -2.4, hi = -2.3;
    REQUIRE(airy_ai(lo).value < 0.0);
    REQUIRE(airy_ai(hi).value > 0.0);
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (airy_ai(mid).value < 0.0 ? lo : hi) = mid;
    }
    CHECK(std::fabs(ai_reference(lo)) < 1e-12);
    for (double x = -2.3; x <= 0.0; x += 0.05) CHECK(airy_ai(x).value > 0.0);
}

TEST_CASE("scaled evaluation far on the decaying side") {
    const ScaledReal v = airy_ai_scaled(1e4);
    const double x = 1e4;
    const double lead = -2.0 / 3.0 * std::pow(x, 1.5) - std::log(2.0 * std::sqrt(pi)) - 0.25 * std::log(x);
    CHECK(std::fabs(v.log_abs() - lead) < 1e-5);
    CHECK(airy_ai_scaled(3.0).to_double() == doctest::Approx(airy_ai(3.0).value).epsilon(1e-15));
}
