#include "hypasym/zeta_map.hpp"

#include "hypasym/bigfloat.hpp"
#include "hypasym/cubic_ratio.hpp"
#include "hypasym/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace hypasym {

using std::numbers::pi;

const char* to_string(Regime r) {
    switch (r) {
    case Regime::monotonic: return "monotonic";
    case Regime::turning: return "turning";
    case Regime::oscillatory: return "oscillatory";
    }
    return "?";
}

void validate(const Params& p) {
    if (!(p.r > 0.0) || !std::isfinite(p.r)) throw DomainError("r must be positive and finite");
    if (!(p.alpha > 0.0 && p.alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
    if (!(p.y > 0.0 && p.y < 1.0)) throw DomainError("y must lie in (0, 1)");
    if (!(p.delta >= 0.0 && p.delta < 0.5)) throw DomainError("delta must lie in [0, 0.5)");
}

std::optional<std::string> regime_warning(const Params& p) {
    const double lo = std::pow(p.r, -1.0 + p.delta);
    const double hi = std::pow(p.r, -p.delta);
    if (p.alpha > lo && p.alpha < hi) return std::nullopt;
    std::ostringstream os;
    os << "alpha = " << p.alpha << " outside (r^{-1+delta}, r^{-delta}) = (" << lo << ", " << hi
       << ") for r = " << p.r << ", delta = " << p.delta;
    return os.str();
}

namespace {

// Half the width of the zone where the closed forms of a0/a1 are evaluated
// at extended precision, in units of alpha^2.
constexpr double kNearTurning = 1e-3;

// The turning point as a double. With T = 1 - alpha*alpha rounded, y - T is
// exact for y >= 1/2, so the side of the turning point is decided exactly.
double turning_point(double alpha) { return 1.0 - alpha * alpha; }

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
}

// Solves alpha (t - atan t) = a for t >= 0; zeta = alpha^2 (1 + t^2).
double solve_monotonic_t(double alpha, double a) {
    if (a == 0.0) return 0.0;
    const double c = a / alpha;
    auto F = [&](double t) { return t * t * t * atan_cubic_ratio(t) / 3.0 - c; };
    double lo = 0.0, hi = c + 2.0;
    double t = std::min(std::cbrt(3.0 * c), c + pi / 2.0);
    for (int it = 0; it < 200; ++it) {
        const double f = F(t);
        if (f == 0.0) return t;
        (f > 0 ? hi : lo) = t;
        const double d = t * t / (1.0 + t * t);
        double next = d > 0 ? t - f / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - t) <= 2e-16 * std::fabs(next) || hi - lo <= 2e-16 * hi) return next;
        t = next;
    }
    throw NumericalError("zeta map (monotonic branch): Newton iteration did not converge, a = " +
                         std::to_string(a));
}

// Solves alpha (atanh s - s) = a with u = log(zeta / alpha^2), s^2 = 1 - e^u.
double solve_oscillatory_u(double alpha, double a) {
    if (a == 0.0) return 0.0;
    const double c = a / alpha;
    auto G = [&](double u, double& s) {
        s = std::sqrt(-std::expm1(u));
        const double g = s < 0.1 ? s * s * s * atanh_cubic_ratio(s) / 3.0 : std::log1p(s) - 0.5 * u - s;
        return g - c;
    };
    double lo = -2.0 * (c + 1.0) - 1.0, hi = 0.0;
    const double s0 = std::cbrt(3.0 * c);
    double u = s0 < 0.9 ? std::log1p(-s0 * s0) : 2.0 * (std::log(2.0) - 1.0 - c);
    if (!(u > lo && u < hi)) u = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        double s;
        const double g = G(u, s);
        if (g == 0.0) return u;
        (g > 0 ? lo : hi) = u; // G decreases in u
        const double d = -0.5 * s;
        double next = d < 0 ? u - g / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - u) <= 2e-16 * std::fabs(next) || hi - lo <= 2e-16 * std::fabs(lo)) return next;
        u = next;
    }
    throw NumericalError("zeta map (oscillatory branch): Newton iteration did not converge, a = " +
                         std::to_string(a));
}

double a0_big(double alpha, double y) {
    const PrecisionContext ctx = big_eval_context(kMinBigDigits);
    const double T = turning_point(alpha);
    const BigReal one(1L, ctx);
    const BigReal A2 = one - BigReal(T, ctx);
    const BigReal A = sqrt(A2);
    const BigReal Y(y, ctx);
    const BigReal S = sqrt(Y);
    const BigReal V = sqrt(BigReal(T, ctx) - Y);
    const BigReal v = big_pi(ctx) * 0.5 * (one - A) - atan(S / V) + A * atan(A * S / V);
    return v.to_double();
}

double a1_big(double alpha, double y) {
    const PrecisionContext ctx = big_eval_context(kMinBigDigits);
    const double T = turning_point(alpha);
    const BigReal one(1L, ctx);
    const BigReal A2 = one - BigReal(T, ctx);
    const BigReal A = sqrt(A2);
    const BigReal Y(y, ctx);
    const BigReal S = sqrt(Y);
    const BigReal Sw = sqrt(Y - BigReal(T, ctx));
    const BigReal v = A * log(A * S + Sw) - log(S + Sw) - A * 0.5 * log(one - Y) +
                      (one - A) * 0.5 * log(BigReal(T, ctx));
    return v.to_double();
}

} // namespace

double phi_monotonic(double alpha, double zeta) {
    const double a2 = alpha * alpha;
    if (!(zeta >= a2)) throw DomainError("phi_monotonic needs zeta >= alpha^2");
    const double t = std::sqrt(zeta - a2) / alpha;
    return alpha * t * t * t * atan_cubic_ratio(t) / 3.0;
}

double phi_monotonic_deriv(double alpha, double zeta) {
    const double a2 = alpha * alpha;
    if (!(zeta >= a2)) throw DomainError("phi_monotonic_deriv needs zeta >= alpha^2");
    return std::sqrt(zeta - a2) / (2.0 * zeta);
}

double psi_oscillatory(double alpha, double zeta) {
    const double a2 = alpha * alpha;
    if (!(zeta > 0.0 && zeta <= a2)) throw DomainError("psi_oscillatory needs 0 < zeta <= alpha^2");
    const double root = std::sqrt(a2 - zeta);
    const double s = root / alpha;
    if (s < 0.1) return alpha * s * s * s * atanh_cubic_ratio(s) / 3.0;
    return alpha * std::log((alpha + root) / std::sqrt(zeta)) - root;
}

double psi_oscillatory_deriv(double alpha, double zeta) {
    const double a2 = alpha * alpha;
    if (!(zeta > 0.0 && zeta <= a2)) throw DomainError("psi_oscillatory_deriv needs 0 < zeta <= alpha^2");
    return -std::sqrt(a2 - zeta) / (2.0 * zeta);
}

double zeta0(double alpha) {
    check_alpha(alpha);
    const double t = solve_monotonic_t(alpha, 0.5 * pi * (1.0 - alpha));
    return alpha * alpha * (1.0 + t * t);
}

double a0(double alpha, double y) {
    check_alpha(alpha);
    const double T = turning_point(alpha);
    if (!(y >= 0.0 && y < T)) throw DomainError("a0 needs 0 <= y < 1 - alpha^2");
    if (T - y <= kNearTurning * alpha * alpha) return a0_big(alpha, y);
    const double s = std::sqrt(y);
    const double v = std::sqrt(T - y);
    return 0.5 * pi * (1.0 - alpha) - std::atan(s / v) + alpha * std::atan(alpha * s / v);
}

double a1(double alpha, double y) {
    check_alpha(alpha);
    const double T = turning_point(alpha);
    if (!(y > T && y < 1.0)) throw DomainError("a1 needs 1 - alpha^2 < y < 1");
    if (y - T <= kNearTurning * alpha * alpha) return a1_big(alpha, y);
    const double s = std::sqrt(y);
    const double sw = std::sqrt(y - T);
    return alpha * std::log(alpha * s + sw) - std::log(s + sw) - 0.5 * alpha * std::log1p(-y) +
           0.5 * (1.0 - alpha) * std::log1p(-alpha * alpha);
}

ZetaPoint zeta_for_y(double alpha, double y) {
    check_alpha(alpha);
    if (!(y >= 0.0 && y < 1.0)) throw DomainError("zeta_for_y needs 0 <= y < 1");
    const double a2 = alpha * alpha;
    const double T = turning_point(alpha);
    ZetaPoint zp;
    if (y == T) {
        zp.zeta = a2;
        zp.regime = Regime::turning;
        return zp;
    }
    if (y < T) {
        zp.regime = Regime::monotonic;
        zp.a_value = a0(alpha, y);
        const double t = solve_monotonic_t(alpha, zp.a_value);
        zp.zeta = a2 * (1.0 + t * t);
        zp.zeta_hat = -std::cbrt(std::pow(1.5 * zp.a_value / alpha, 2.0));
        zp.residual = std::fabs(phi_monotonic(alpha, zp.zeta) - zp.a_value);
    } else {
        zp.regime = Regime::oscillatory;
        zp.a_value = a1(alpha, y);
        const double u = solve_oscillatory_u(alpha, zp.a_value);
        zp.zeta = a2 * std::exp(u);
        zp.zeta_hat = std::cbrt(std::pow(1.5 * zp.a_value / alpha, 2.0));
        zp.residual = std::fabs(psi_oscillatory(alpha, zp.zeta) - zp.a_value);
    }
    return zp;
}

double zeta_hat(double alpha, double y) {
    check_alpha(alpha);
    const double T = turning_point(alpha);
    if (y == T) return 0.0;
    if (y < T) return -std::cbrt(std::pow(1.5 * a0(alpha, y) / alpha, 2.0));
    return std::cbrt(std::pow(1.5 * a1(alpha, y) / alpha, 2.0));
}

double zeta_hat_ratio(double alpha, double y) {
    check_alpha(alpha);
    const double w = y - turning_point(alpha);
    // limit 1 / (2^{2/3} (1 - alpha^2)^{1/3}) from the leading Taylor terms of a0, a1
    if (w == 0.0) return 1.0 / std::cbrt(4.0 * (1.0 - alpha * alpha));
    return alpha * alpha * zeta_hat(alpha, y) / w;
}

double l2_phase(double r, double alpha, double y) {
    return alpha * std::log1p(-y) - 2.0 * alpha * std::log(r) + (1.0 - alpha) * std::log1p(-alpha) -
           (1.0 + alpha) * std::log1p(alpha) + 2.0 * alpha;
}

double regime_width(double r, double alpha, double delta) {
    return std::pow(alpha, 4.0 / 3.0) / std::pow(r, 2.0 / 3.0 - delta);
}

Regime classify_regime(double r, double alpha, double y, double delta) {
    const double D = regime_width(r, alpha, delta);
    const double w = y - (1.0 - alpha * alpha);
    if (w <= -D) return Regime::monotonic;
    if (w >= D) return Regime::oscillatory;
    return Regime::turning;
}

} // namespace hypasym
