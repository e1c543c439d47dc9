#include "hypasym/bessel.hpp"
#include "hypasym/errors.hpp"
#include "hypasym/quadrature.hpp"
#include "hypasym/zeta_map.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

using namespace hypasym;
using std::numbers::pi;

namespace {

// Phase integrals of sqrt|f|: a = int |T - t|^{1/2} / (2 sqrt(t) (1 - t)) dt between y and
// the turning point T, written with t = T -+ s w so that no cancellation occurs.
double a_integral(double alpha, double y) {
    const double T = 1.0 - alpha * alpha;
    const double w = std::fabs(T - y);
    const double sgn = y < T ? -1.0 : 1.0;
    auto f = [&](double s) {
        const double t = T + sgn * s * w;
        return std::sqrt(s) / (2.0 * std::sqrt(t) * (1.0 - t));
    };
    return w * std::sqrt(w) * tanh_sinh(f, 0.0, 1.0, 1e-15).value;
}

// Plain bisection on the monotone branch maps.
double zeta_bisect(double alpha, double y) {
    const double a2 = alpha * alpha, T = 1.0 - a2;
    double lo, hi;
    std::function<double(double)> g;
    if (y < T) {
        const double target = a_integral(alpha, y);
        g = [=](double z) { return phi_monotonic(alpha, z) - target; }; // increasing
        lo = a2;
        hi = 4.0;
    } else {
        const double target = a_integral(alpha, y);
        g = [=](double z) { return target - psi_oscillatory(alpha, z); }; // psi decreasing
        lo = 0.0;
        hi = a2;
    }
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("zeta0") {
    const double z = zeta0(0.1);
    CHECK(z > 2.45);
    CHECK(z < 2.46);
    CHECK(std::fabs(phi_monotonic(0.1, z) - pi * 0.9 / 2.0) <= 1e-13);
    CHECK(zeta0(1e-6) == doctest::Approx(pi * pi / 4.0).epsilon(1e-5));
    for (double alpha : {0.01, 0.1, 0.5, 0.9}) CHECK(zeta0(alpha) > alpha * alpha);
}

TEST_CASE("branch endpoints") {
    for (double alpha : {0.02, 0.1, 0.4}) {
        const double T = 1.0 - alpha * alpha;
        CHECK(zeta_for_y(alpha, T).zeta == alpha * alpha);
        CHECK(zeta_hat(alpha, T) == 0.0);
        CHECK(zeta_for_y(alpha, 0.0).zeta == doctest::Approx(zeta0(alpha)).epsilon(1e-14));
        CHECK(a0(alpha, 1e-14) == doctest::Approx(pi * (1.0 - alpha) / 2.0).epsilon(1e-6));
        CHECK(a0(alpha, std::nextafter(T, 0.0)) == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
        CHECK(a1(alpha, std::nextafter(T, 1.0)) == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("a0 and a1 against their phase integrals") {
    for (double alpha : {0.02, 0.1, 0.3}) {
        const double T = 1.0 - alpha * alpha, a2 = alpha * alpha;
        for (double y : {0.01, 0.3, 0.8, T - 0.1 * a2, T - 1.001e-3 * a2, T - 0.999e-3 * a2, T - 1e-7 * a2})
            if (y > 0.0) {
                CAPTURE(alpha);
                CAPTURE(y);
                CHECK(a0(alpha, y) == doctest::Approx(a_integral(alpha, y)).epsilon(1e-12));
            }
        for (double y : {T + 1e-7 * a2, T + 0.999e-3 * a2, T + 1.001e-3 * a2, T + 0.1 * a2, 0.5 * (1 + T), 1 - 1e-6}) {
            CAPTURE(alpha);
            CAPTURE(y);
            CHECK(a1(alpha, y) == doctest::Approx(a_integral(alpha, y)).epsilon(1e-12));
        }
    }
}

TEST_CASE("a1 leading Taylor term") {
    const double alpha = 0.1, y = 0.991, w = y - 1.0 + alpha * alpha;
    const double lead = std::pow(w, 1.5) / (3.0 * alpha * alpha * std::sqrt(1.0 - alpha * alpha));
    CHECK(std::fabs(a1(alpha, y) / lead - 1.0) <= 0.15);
}

TEST_CASE("wrong side of the turning point") {
    CHECK_THROWS_AS(a0(0.1, 0.995), DomainError);
    CHECK_THROWS_AS(a1(0.1, 0.5), DomainError);
}

TEST_CASE("zeta against bisection") {
    std::mt19937_64 gen(29);
    std::uniform_real_distribution<double> ua(0.01, 0.9), uy(1e-4, 1.0 - 1e-4);
    for (int i = 0; i < 300; ++i) {
        const double alpha = ua(gen), y = uy(gen);
        const ZetaPoint zp = zeta_for_y(alpha, y);
        CAPTURE(alpha);
        CAPTURE(y);
        CHECK(zp.zeta == doctest::Approx(zeta_bisect(alpha, y)).epsilon(1e-11));
        CHECK(zp.residual <= 1e-12);
        CHECK((zp.zeta > alpha * alpha) == (y < 1.0 - alpha * alpha));
        CHECK((zp.zeta_hat < 0.0) == (y < 1.0 - alpha * alpha));
        CHECK(zp.zeta > 0.0);
        CHECK(zp.zeta <= zeta0(alpha));
    }
}

TEST_CASE("example point above the turning point") {
    const ZetaPoint zp = zeta_for_y(0.1, 0.991);
    CHECK(zp.zeta < 0.01);
    CHECK(zp.residual <= 1e-12);
    CHECK(zp.regime == Regime::oscillatory);
}

TEST_CASE("monotone decreasing in y") {
    for (double alpha : {0.05, 0.1, 0.5}) {
        double prev = INFINITY;
        for (int i = 1; i < 1000; ++i) {
            const double z = zeta_for_y(alpha, i / 1000.0).zeta;
            CHECK(z < prev);
            prev = z;
        }
    }
}

TEST_CASE("continuity at the turning point") {
    for (double alpha : {0.02, 0.1, 0.3}) {
        const double T = 1.0 - alpha * alpha;
        for (double s : {-1e-9, 1e-9}) CHECK(std::fabs(zeta_for_y(alpha, T + s).zeta - alpha * alpha) <= 1e-5);
        CHECK(std::fabs(zeta_hat(alpha, T - 1e-9) - zeta_hat(alpha, T + 1e-9)) <= 1e-5);
        CHECK(zeta_hat_ratio(alpha, T - 1e-9) == doctest::Approx(zeta_hat_ratio(alpha, T + 1e-9)).epsilon(1e-5));
    }
}

TEST_CASE("branch derivative identities") {
    const double alpha = 0.1, h = 1e-6;
    for (double z : {0.02, 0.1, 1.0, 2.0}) {
        const double fd = (phi_monotonic(alpha, z + h) - phi_monotonic(alpha, z - h)) / (2 * h);
        CHECK(std::fabs(fd - phi_monotonic_deriv(alpha, z)) <= 1e-8);
        CHECK(phi_monotonic_deriv(alpha, z) == doctest::Approx(std::sqrt(z - alpha * alpha) / (2 * z)).epsilon(1e-15));
    }
    for (double z : {0.001, 0.005, 0.009}) {
        // five-point stencil; the step shrinks with the distance to the branch point alpha^2
        const double hz = 1e-3 * (alpha * alpha - z);
        auto psi = [&](double t) { return psi_oscillatory(alpha, t); };
        const double fd = (-psi(z + 2 * hz) + 8 * psi(z + hz) - 8 * psi(z - hz) + psi(z - 2 * hz)) / (12 * hz);
        CHECK(std::fabs(fd - psi_oscillatory_deriv(alpha, z)) <= 1e-8 * std::fabs(fd));
    }
}

TEST_CASE("zeta_hat relations") {
    for (double alpha : {0.02, 0.1, 0.3})
        for (double y : {0.1, 0.5, 0.9, 0.97, 0.99, 0.995, 0.999}) {
            const ZetaPoint zp = zeta_for_y(alpha, y);
            CAPTURE(alpha);
            CAPTURE(y);
            CHECK(std::fabs(zp.a_value - 2.0 * alpha / 3.0 * std::pow(std::fabs(zp.zeta_hat), 1.5)) <= 1e-12);
            CHECK(zp.zeta_hat == doctest::Approx(zeta_hat(alpha, y)).epsilon(1e-15));
            CHECK(std::fabs(bessel_zeta_hat(std::sqrt(zp.zeta) / alpha) - zp.zeta_hat) <= 1e-10);
        }
}

TEST_CASE("l2 phase") {
    const double alpha = 0.1, r = 100.0, y = 0.9999;
    const double direct = 0.1 * std::log(0.0001) - 0.2 * std::log(100.0) + 0.9 * std::log(0.9) -
                          1.1 * std::log(1.1) + 0.2;
    CHECK(l2_phase(r, alpha, y) == doctest::Approx(direct).epsilon(1e-14));
    CHECK(std::fabs(l2_phase(r, 1e-12, 0.5)) < 1e-10);
    const double h = 1e-6;
    for (double yy : {0.1, 0.5, 0.9}) {
        const double fd = (l2_phase(r, alpha, yy + h) - l2_phase(r, alpha, yy - h)) / (2 * h);
        CHECK(fd == doctest::Approx(-alpha / (1 - yy)).epsilon(1e-7));
    }
}

TEST_CASE("regime classification") {
    CHECK(regime_width(100.0, 0.1, 0.0) == doctest::Approx(std::pow(0.1, 4.0 / 3.0) / std::pow(100.0, 2.0 / 3.0)));
    CHECK(classify_regime(100.0, 0.1, 0.9999, 0.0) == Regime::oscillatory);
    CHECK(classify_regime(100.0, 0.1, 0.99, 0.0) == Regime::turning);
    CHECK(classify_regime(100.0, 0.1, 0.989, 0.0) == Regime::turning);
    CHECK(classify_regime(100.0, 0.1, 0.5, 0.0) == Regime::monotonic);
    CHECK(classify_regime(100.0, 0.1, 0.99 + 1e-12) == Regime::turning);
}

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(validate(Params{100, 0.1, 0.5}));
    CHECK_THROWS_AS(validate(Params{100, 0.1, 1.5}), DomainError);
    CHECK_THROWS_AS(validate(Params{-1, 0.1, 0.5}), DomainError);
    CHECK_THROWS_AS(validate(Params{100, 1.0, 0.5}), DomainError);
    CHECK_FALSE(regime_warning(Params{100, 0.1, 0.5}).has_value());
    CHECK(regime_warning(Params{100, 0.001, 0.5}).has_value());
    CHECK(regime_warning(Params{100, 0.9, 0.5}).has_value());
}
