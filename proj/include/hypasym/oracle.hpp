#pragma once

#include "hypasym/bigfloat.hpp"
#include "hypasym/zeta_map.hpp"

namespace hypasym {

struct OracleValue {
    BigComplex value;
    long terms_used = 0;
    BigReal tail_bound;               // rigorous bound on the dropped tail
    double cancellation_digits = 0.0; // log10(max |partial sum| / |result|)
    int working_digits = 0;           // precision the final pass ran at
};

// Upper limit on series terms before giving up with ResourceError.
inline constexpr long kOracleMaxTerms = 50'000'000;
// Upper limit on the automatically raised working precision.
inline constexpr int kOracleMaxDigits = 4000;

// Gauss series sum (a)_n (b)_n / ((c)_n n!) y^n for |y| < 1, summed with the
// term recurrence until the geometric tail bound is below 10^{-digits} of the
// partial sum, where digits = ctx.digits(). The working precision is raised
// and the sum restarted when cancellation eats into the guard digits.
OracleValue gauss_2f1_series(const BigComplex& a, const BigComplex& b, const BigComplex& c, const BigReal& y,
                             const PrecisionContext& ctx);

// 2F1(1/4 + i r (1-alpha), 1/4 - i r (1+alpha); 1/2; y).
OracleValue hyp2f1_oracle(const Params& p, const BigReal& y, const PrecisionContext& ctx);

// F2 = Gamma(1/4 + i r (1-alpha)) Gamma(1/4 - i r (1+alpha)) / Gamma(1/2) * 2F1(...).
// The Gamma product enters through its logarithm.
OracleValue f2_oracle(const Params& p, const PrecisionContext& ctx);

// Y = y^{1/4} (1-y)^{1/2 - i r alpha} F2 / prefactor; real up to oracle error.
BigComplex y_transform(const Params& p, const BigComplex& f2, const PrecisionContext& ctx);

// Coefficients of Y'' = ((2r)^2 f + g) Y.
BigReal ode_f(double alpha, const BigReal& y, const PrecisionContext& ctx);
BigReal ode_g(const BigReal& y, const PrecisionContext& ctx);

// |Y'' - ((2r)^2 f + g) Y| / (((2r)^2 |f| + |g|) |Y|) at y0, Y'' from the
// five-point fourth-order stencil with step h.
double ode_residual(const Params& p, double y0, double h, const PrecisionContext& ctx);

} // namespace hypasym
