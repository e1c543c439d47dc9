#pragma once

#include <optional>
#include <string>

namespace hypasym {

enum class Regime { monotonic, turning, oscillatory };

const char* to_string(Regime r);

inline constexpr double kDefaultDelta = 0.1;

// Evaluation point (r, alpha, y).
struct Params {
    double r = 0.0;
    double alpha = 0.0;
    double y = 0.0;
    double delta = kDefaultDelta;
};

// Throws DomainError unless r > 0, 0 < alpha < 1, 0 < y < 1, delta in [0, 1/2).
void validate(const Params& p);

// Message when r^{-1+delta} < alpha < r^{-delta} fails; the asymptotic forms
// are still evaluated, but outside the range they are proven for.
std::optional<std::string> regime_warning(const Params& p);

struct ZetaPoint {
    double zeta = 0.0;
    double zeta_hat = 0.0;
    double a_value = 0.0; // a0 below the turning point, a1 above
    Regime regime = Regime::turning; // side of the turning point y = 1 - alpha^2
    double residual = 0.0;           // |branch map(zeta) - a_value|
};

// Branch maps of the transcendental equations.
//   zeta > alpha^2: phi(zeta) = sqrt(zeta - alpha^2) - alpha arccos(alpha / sqrt(zeta)) = a0
//   zeta < alpha^2: psi(zeta) = alpha log((alpha + sqrt(alpha^2 - zeta)) / sqrt(zeta)) - sqrt(alpha^2 - zeta) = a1
double phi_monotonic(double alpha, double zeta);
double phi_monotonic_deriv(double alpha, double zeta); // sqrt(zeta - alpha^2) / (2 zeta)
double psi_oscillatory(double alpha, double zeta);
double psi_oscillatory_deriv(double alpha, double zeta); // -sqrt(alpha^2 - zeta) / (2 zeta)

// Value of zeta at y = 0: phi(zeta0) = pi (1 - alpha) / 2.
double zeta0(double alpha);

// Solves the branch equation for y in [0, 1). Throws NumericalError if the
// safeguarded Newton iteration fails to converge.
ZetaPoint zeta_for_y(double alpha, double y);

// Phase functions; a0 for y < 1 - alpha^2, a1 for y > 1 - alpha^2. Near the
// turning point (|1 - alpha^2 - y| <= 1e-3 alpha^2) the closed forms are
// evaluated at extended precision.
double a0(double alpha, double y);
double a1(double alpha, double y);

// -(3 a0 / (2 alpha))^{2/3} below the turning point, (3 a1 / (2 alpha))^{2/3} above.
double zeta_hat(double alpha, double y);

// alpha^2 zeta_hat / (y - 1 + alpha^2), positive and continuous through the turning point.
double zeta_hat_ratio(double alpha, double y);

// alpha log(1-y) - 2 alpha log r + (1-alpha) log(1-alpha) - (1+alpha) log(1+alpha) + 2 alpha.
double l2_phase(double r, double alpha, double y);

// Half-width alpha^{4/3} / r^{2/3 - delta} of the turning zone.
double regime_width(double r, double alpha, double delta);

Regime classify_regime(double r, double alpha, double y, double delta = kDefaultDelta);

} // namespace hypasym
