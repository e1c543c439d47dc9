#include "hypasym/bigfloat.hpp"
#include "hypasym/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hypasym;

TEST_CASE("context floor") {
    CHECK_THROWS_AS(big_eval_context(10), ConfigError);
    CHECK(big_eval_context(50).digits() == 50);
    CHECK(big_eval_context(200).digits() == 200);
}

TEST_CASE("precision is at least the requested digit count") {
    const PrecisionContext ctx = big_eval_context(50);
    const BigReal one(1L, ctx), three(3L, ctx);
    const BigReal third = one / three;
    // 1 - 3 * (1/3) is one rounding error at the working precision
    const BigReal defect = abs(one - three * third);
    CHECK(defect.log10_abs() < -49.0);
}

TEST_CASE("(a + b) - b == a within 2 ulp") {
    const PrecisionContext ctx = big_eval_context(60);
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const BigReal a(u(gen), ctx), b(u(gen) * 1e-3, ctx);
        const BigReal back = (a + b) - b;
        const BigReal diff = abs(back - a);
        const BigReal bound = ulp(a + b) * 2.0;
        CHECK(!(diff > bound));
    }
}

TEST_CASE("cross-precision consistency of transcendental values") {
    const PrecisionContext c50 = big_eval_context(50), c100 = big_eval_context(100);
    const BigComplex z50(0.25, 90.0, c50), z100(0.25, 90.0, c100);
    const BigComplex e50 = exp(log(z50)), e100 = exp(log(z100));
    const BigReal d = (BigComplex(e50.re(), e50.im()) - e100).abs();
    CHECK(d.log10_abs() - e100.abs().log10_abs() < -45.0);
}

TEST_CASE("to_scaled keeps huge exponents") {
    const PrecisionContext ctx = big_eval_context(50);
    const BigReal x = exp(BigReal(-2000.0, ctx));
    const ScaledReal s = to_scaled(x);
    CHECK(s.log_abs() == doctest::Approx(-2000.0).epsilon(1e-15));
}
