#include "hypasym/gamma.hpp"

#include "hypasym/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace hypasym {

namespace {

using cld = std::complex<long double>;

// B_{2k} / (2k (2k-1)), k = 1..8.
constexpr std::array<long double, 8> kStirling = {
    1.0L / 12.0L,        -1.0L / 360.0L,     1.0L / 1260.0L,       -1.0L / 1680.0L,
    1.0L / 1188.0L,      -691.0L / 360360.0L, 1.0L / 156.0L,       -3617.0L / 122400.0L,
};

constexpr long double kHalfLog2Pi = 0.918938533204672741780329736405617639861L;

bool is_pole(std::complex<double> z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

} // namespace

LogGammaValue log_gamma(std::complex<double> z) {
    if (is_pole(z)) throw PoleError("log_gamma: pole at non-positive integer");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("log_gamma: non-finite argument");

    cld w(z.real(), z.imag());
    cld shift = 0;
    while (w.real() < 1.0L || std::abs(w) < 20.0L) {
        shift += std::log(w);
        w += 1.0L;
    }

    const cld inv = 1.0L / w;
    const cld inv2 = inv * inv;
    cld series = 0;
    cld power = inv;
    for (long double c : kStirling) {
        series += c * power;
        power *= inv2;
    }
    const cld lg = (w - 0.5L) * std::log(w) - w + kHalfLog2Pi + series - shift;
    return {static_cast<double>(lg.real()), static_cast<double>(lg.imag())};
}

BigComplex log_gamma(const BigComplex& z, const PrecisionContext& ctx) {
    if (z.re().sign() <= 0) throw DomainError("log_gamma: extended precision path needs Re z > 0");

    const PrecisionContext work = ctx.widened(10);
    BigComplex w(BigReal(z.re()) + BigReal(0.0, work), BigReal(z.im()) + BigReal(0.0, work));
    BigComplex shift(work);

    // Optimal truncation of the Stirling series reaches ~e^{-2 pi |z|}.
    const double min_mod = std::max(20.0, 0.5 * work.digits());
    while (w.abs().to_double() < min_mod) {
        shift += log(w);
        w.re() += BigReal(1L, work);
    }

    const BigReal pi = big_pi(work);
    BigReal two_pi = pi * 2.0;
    const BigComplex logw = log(w);
    BigComplex result = BigComplex(w.re() + (-0.5), w.im()) * logw - w;
    result.re() += log(two_pi) * 0.5;

    const BigComplex inv = BigComplex(1.0, 0.0, work) / w;
    const BigComplex inv2 = inv * inv;
    BigComplex power = inv;

    BigReal tol(1.0, work);
    mpfr_div_2ui(tol.raw(), tol.raw(), static_cast<unsigned long>(work.bits()), MPFR_RNDN);

    BigReal fact(work), zeta(work), denom(work), coeff(work), two_pi_pow(two_pi);
    two_pi_pow *= two_pi;
    double last = HUGE_VAL;
    for (unsigned long k = 1; k < 2000; ++k) {
        // |B_{2k}| = 2 (2k)! zeta(2k) / (2 pi)^{2k}
        mpfr_fac_ui(fact.raw(), 2 * k, MPFR_RNDN);
        mpfr_zeta_ui(zeta.raw(), 2 * k, MPFR_RNDN);
        coeff = fact * zeta * 2.0 / two_pi_pow;
        if (k % 2 == 0) coeff = -coeff;
        mpfr_set_ui(denom.raw(), (2 * k) * (2 * k - 1), MPFR_RNDN);
        coeff /= denom;

        const BigComplex term = power * coeff;
        const BigReal mag = term.abs();
        const double magd = mag.to_double();
        if (magd > last) break; // asymptotic series started diverging
        result += term;
        if (mag < tol) break;
        last = magd;
        power *= inv2;
        two_pi_pow *= two_pi;
        two_pi_pow *= two_pi;
    }
    result -= shift;

    BigComplex out(ctx);
    out.re() = result.re();
    out.im() = result.im();
    mpfr_prec_round(out.re().raw(), ctx.bits(), MPFR_RNDN);
    mpfr_prec_round(out.im().raw(), ctx.bits(), MPFR_RNDN);
    return out;
}

ScaledComplex gamma_prefactor(double r, double alpha) {
    const LogGammaValue g1 = log_gamma({0.25, r * (1.0 - alpha)});
    const LogGammaValue g2 = log_gamma({0.25, -r * (1.0 + alpha)});
    constexpr double kHalfLogPi = 0.57236494292470008707171367567652935;
    return ScaledComplex::polar_log(g1.logmag + g2.logmag - kHalfLogPi, g1.phase + g2.phase);
}

BigComplex log_gamma_prefactor(double r, double alpha, const PrecisionContext& ctx) {
    const BigReal quarter(0.25, ctx);
    const BigReal rr(r, ctx);
    const BigReal one(1L, ctx);
    const BigReal a(alpha, ctx);
    const BigComplex z1(quarter, rr * (one - a));
    const BigComplex z2(quarter, -(rr * (one + a)));
    BigComplex sum = log_gamma(z1, ctx) + log_gamma(z2, ctx);
    sum.re() -= log(big_pi(ctx)) * 0.5;
    return sum;
}

ScaledComplex stirling_prefactor_leading(double r, double alpha) {
    using std::numbers::pi;
    const double logmag = std::log(2.0 * std::sqrt(pi)) - pi * r - 0.25 * std::log1p(-alpha * alpha) -
                          0.5 * std::log(r);
    const double phase = r * (-2.0 * alpha * std::log(r) + (1.0 - alpha) * std::log1p(-alpha) -
                              (1.0 + alpha) * std::log1p(alpha) + 2.0 * alpha);
    return ScaledComplex::polar_log(logmag, phase);
}

} // namespace hypasym
