#pragma once

#include "hypasym/bigfloat.hpp"
#include "hypasym/scaled.hpp"

#include <complex>

namespace hypasym {

// log Gamma(z) split into log-magnitude and a continuous phase
// (Im log Gamma on the principal branch, not reduced mod 2 pi).
struct LogGammaValue {
    double logmag = 0.0;
    double phase = 0.0;

    std::complex<double> as_complex() const { return {logmag, phase}; }
    ScaledComplex exp() const { return ScaledComplex::polar_log(logmag, phase); }
};

// Stirling series with upward recurrence until Re z >= 1 and |z| >= 20.
// Throws PoleError at non-positive integers.
LogGammaValue log_gamma(std::complex<double> z);

// Same function at extended precision, for Re z > 0.
BigComplex log_gamma(const BigComplex& z, const PrecisionContext& ctx);

// Gamma(1/4 + i r (1-alpha)) Gamma(1/4 - i r (1+alpha)) / Gamma(1/2).
ScaledComplex gamma_prefactor(double r, double alpha);

// Log of the same product at extended precision (log-magnitude + i phase).
BigComplex log_gamma_prefactor(double r, double alpha, const PrecisionContext& ctx);

// Leading Stirling form of gamma_prefactor:
//   2 sqrt(pi) e^{-pi r} (1-alpha^2)^{-1/4} r^{-1/2}
//   * exp(i r (-2 alpha log r + (1-alpha) log(1-alpha) - (1+alpha) log(1+alpha) + 2 alpha)).
ScaledComplex stirling_prefactor_leading(double r, double alpha);

} // namespace hypasym
