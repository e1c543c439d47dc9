#pragma once

#include "hypasym/scaled.hpp"

namespace hypasym {

// Modified Bessel functions of purely imaginary order i nu, real argument x:
//   K_{i nu}(x)   (recessive for x > nu)
//   I~_{i nu}(x) = pi e^{-pi nu} (I_{i nu}(x) + I_{-i nu}(x))
// Both are real. Values are returned scaled since I~ grows like e^x.

enum class BesselMethod { series, integral };

const char* to_string(BesselMethod m);

enum class BesselSelect { automatic, series, integral };

struct BesselImOrderValue {
    ScaledReal value;
    double order = 0.0;
    double argument = 0.0;
    BesselMethod method = BesselMethod::series;
};

// All four quantities from one evaluation.
struct BesselPair {
    ScaledReal k, k_deriv, i_tilde, i_tilde_deriv;
    BesselMethod method = BesselMethod::series;
    int digits_used = 0; // extended precision used by the series path, 0 otherwise
};

// Automatic choice: series (extended precision, complex Gamma) when x <= 40
// or x < 1.5 nu; real integrals with tanh-sinh quadrature otherwise.
// Forcing the integral path requires x > nu.
BesselPair bessel_pair(double nu, double x, BesselSelect select = BesselSelect::automatic);

BesselImOrderValue bessel_k_im_value(double nu, double x, BesselSelect select = BesselSelect::automatic);
BesselImOrderValue bessel_i_tilde_value(double nu, double x, BesselSelect select = BesselSelect::automatic);

ScaledReal bessel_k_im(double nu, double x);
ScaledReal bessel_i_tilde(double nu, double x);
ScaledReal bessel_k_im_deriv(double nu, double x);
ScaledReal bessel_i_tilde_deriv(double nu, double x);

// |Im(I_{i nu} + I_{-i nu})| / |Re(...)| with the two orders summed as
// independent series runs.
double bessel_i_tilde_imag_residue(double nu, double x);

// eta(x) = sqrt(x^2 - 1) - atan sqrt(x^2 - 1), x >= 1.
double eta(double x);

// Airy-type variable for K_{i nu}(nu z): zeta_hat > 0 for z < 1, < 0 for z > 1.
double bessel_zeta_hat(double z);

// (4 zeta_hat / (1 - z^2))^{1/4}, continuous through z = 1.
double bessel_airy_ratio(double z);

// K_{i nu}(nu z) ~ pi e^{-pi nu / 2} nu^{-1/3} (4 zeta_hat/(1-z^2))^{1/4} Ai(-nu^{2/3} zeta_hat).
ScaledReal bessel_k_airy_approx(double nu, double z);

} // namespace hypasym
