#include "hypasym/bessel.hpp"

#include "hypasym/airy.hpp"
#include "hypasym/bigfloat.hpp"
#include "hypasym/cubic_ratio.hpp"
#include "hypasym/errors.hpp"
#include "hypasym/gamma.hpp"
#include "hypasym/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hypasym {

const char* to_string(BesselMethod m) {
    return m == BesselMethod::series ? "series" : "integral";
}

namespace {

using std::numbers::pi;

// Removable singularity of K at nu = 0 (division by sinh(pi nu)).
constexpr double kNuFloor = 1e-8;
constexpr double kSeriesMaxX = 40.0;
constexpr double kSeriesNuFactor = 1.5;
// Integration range is cut where the scaled integrand drops below e^{-L}.
const double kTailLog = 45.0 * std::log(10.0);
// Digits of accuracy demanded from the series beyond its cancellation.
constexpr int kSeriesGuard = 25;
constexpr int kSeriesMaxDigits = 3000;

void check_args(double nu, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("Bessel functions need x > 0");
    if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("Bessel functions need nu >= 0");
}

long top_exp(const BigReal& v) {
    return v.is_zero() ? std::numeric_limits<long>::min() / 2 : static_cast<long>(mpfr_get_exp(v.raw()));
}

long top_exp(const BigComplex& z) { return std::max(top_exp(z.re()), top_exp(z.im())); }

struct SeriesOut {
    BesselPair pair;
    double cancellation = 0.0; // decimal digits lost in the worst component
};

// I_{i nu}(x) = (x/2)^{i nu} / Gamma(1 + i nu) * sum_k u_k,
// u_{k+1} = u_k (x^2/4) / ((k+1)(k+1+i nu)); derivative term-wise.
SeriesOut series_run(double nu, double nu_true, double x, int digits) {
    const PrecisionContext ctx = big_eval_context(digits);
    const BigReal bnu(nu, ctx), bx(x, ctx);
    const BigReal q = bx * bx * 0.25;

    const BigReal log_half_x = log(bx * 0.5);
    BigComplex logt0 = BigComplex(BigReal(0L, ctx), bnu * log_half_x) -
                       log_gamma(BigComplex(BigReal(1L, ctx), bnu), ctx);
    const BigComplex t0 = exp(logt0);

    BigComplex u(1.0, 0.0, ctx);
    BigComplex sum(1.0, 0.0, ctx);
    BigComplex dsum = BigComplex(BigReal(0L, ctx), bnu) / BigComplex(bx, BigReal(0L, ctx));
    long max_sum = top_exp(sum), max_dsum = top_exp(dsum);
    const long bits = static_cast<long>(ctx.bits());

    for (long k = 0; k < 100000; ++k) {
        const double kp1 = static_cast<double>(k + 1);
        u *= q;
        u /= BigComplex(BigReal(kp1, ctx) * kp1, bnu * kp1);
        sum += u;
        BigComplex du = u * BigComplex(BigReal(2.0 * kp1, ctx) / bx, bnu / bx);
        dsum += du;
        max_sum = std::max(max_sum, top_exp(sum));
        max_dsum = std::max(max_dsum, top_exp(dsum));
        const bool decreasing = x * x * 0.25 < 0.5 * kp1 * kp1;
        if (decreasing && top_exp(u) < top_exp(sum) - bits - 4 && top_exp(du) < top_exp(dsum) - bits - 4)
            break;
    }

    const BigComplex I = t0 * sum;
    const BigComplex dI = t0 * dsum;
    const double log10_t0 = t0.abs().log10_abs();
    constexpr double kLog10_2 = 0.30102999566398120;
    const double peak_i = log10_t0 + static_cast<double>(max_sum) * kLog10_2;
    const double peak_d = log10_t0 + static_cast<double>(max_dsum) * kLog10_2;

    SeriesOut out;
    auto lost = [](double peak, const BigReal& v) { return v.is_zero() ? 1e9 : peak - v.log10_abs(); };
    out.cancellation = std::max({lost(peak_i, I.re()), lost(peak_i, I.im()), lost(peak_d, dI.re()),
                                 lost(peak_d, dI.im()), 0.0});

    const BigReal bpi = big_pi(ctx);
    const BigReal pinu = bpi * bnu;
    BigReal sh(ctx);
    mpfr_sinh(sh.raw(), pinu.raw(), MPFR_RNDN);
    const BigReal kfac = -(bpi / sh);
    // The floor on nu only serves K; I~ keeps its exact e^{-pi nu} factor.
    const BigReal ifac = bpi * 2.0 * exp(-(bpi * BigReal(nu_true, ctx)));

    out.pair.k = to_scaled(I.im() * kfac);
    out.pair.k_deriv = to_scaled(dI.im() * kfac);
    out.pair.i_tilde = to_scaled(I.re() * ifac);
    out.pair.i_tilde_deriv = to_scaled(dI.re() * ifac);
    out.pair.method = BesselMethod::series;
    out.pair.digits_used = digits;
    return out;
}

BesselPair series_pair(double nu_true, double x) {
    const double nu = std::max(nu_true, kNuFloor);
    // Partial sums reach ~ e^{x + pi nu / 2} while K can be as small as
    // e^{-x - pi nu / 2}; start from that estimate and re-run if the
    // measured loss says so.
    int digits = std::max(kMinBigDigits, kSeriesGuard + static_cast<int>(std::ceil((2.0 * x + pi * nu) / std::log(10.0))));
    for (int attempt = 0; attempt < 6; ++attempt) {
        SeriesOut out = series_run(nu, nu_true, x, digits);
        const int needed = static_cast<int>(std::ceil(out.cancellation)) + kSeriesGuard;
        if (needed <= digits) return out.pair;
        if (needed > kSeriesMaxDigits)
            throw ResourceError("Bessel series cancellation exceeds precision cap", needed);
        digits = needed + 10;
    }
    throw NumericalError("Bessel series precision did not stabilise");
}

// K along the steepest-descent-shifted contour t = s + i beta, sin beta = nu/x:
//   K = e^{-nu beta} int_0^inf e^{-x cos(beta) cosh s} cos(nu (s - sinh s)) ds.
// I~ via the cosh/sinh split of the Schlaefli integral:
//   I~ = 2 e^{-pi nu} int_0^pi e^{x cos t} cosh(nu t) dt
//        - 2 e^{-pi nu} sinh(pi nu) int_0^inf e^{-x cosh t} sin(nu t) dt.
BesselPair integral_pair(double nu, double x) {
    if (!(x > nu)) throw DomainError("Bessel integral representation needs x > nu");
    const double sb = nu / x;
    const double cb = std::sqrt((1.0 - sb) * (1.0 + sb));
    const double beta = std::asin(sb);
    const double X = x * cb;
    const double rel = 1e-15;

    BesselPair out;
    out.method = BesselMethod::integral;

    {
        const double smax = std::acosh(1.0 + kTailLog / X) + 0.5;
        const double osc = nu * (std::sinh(smax) - smax) / pi;
        const int panels = 1 + static_cast<int>(std::ceil(osc / 4.0));
        auto fk = [&](double s) {
            return std::exp(-X * (std::cosh(s) - 1.0)) * std::cos(nu * (s - std::sinh(s)));
        };
        auto fkd = [&](double s) {
            const double phi = nu * (s - std::sinh(s));
            return std::exp(-X * (std::cosh(s) - 1.0)) *
                   (std::cosh(s) * cb * std::cos(phi) - std::sinh(s) * sb * std::sin(phi));
        };
        const double ik = tanh_sinh_panels(fk, 0.0, smax, panels, rel, 1e-18).value;
        const double ikd = tanh_sinh_panels(fkd, 0.0, smax, panels, rel, 1e-18).value;
        const ScaledReal scale = ScaledReal::from_log(-X - nu * beta);
        out.k = scale * ScaledReal(ik);
        out.k_deriv = -(scale * ScaledReal(ikd));
    }

    {
        // log cosh(nu t) without overflow.
        auto log_cosh = [&](double t) { return nu * t + std::log1p(std::exp(-2.0 * nu * t)) - std::log(2.0); };
        auto g = [&](double t) { return x * std::cos(t) + log_cosh(t); };
        const double t1 = beta;
        const double gmax = std::max(g(t1), g(pi));
        auto fa = [&](double t) { return std::exp(g(t) - gmax); };
        auto fad = [&](double t) { return std::cos(t) * std::exp(g(t) - gmax); };
        const double ia = tanh_sinh(fa, 0.0, t1, rel, 1e-18).value + tanh_sinh(fa, t1, pi, rel, 1e-18).value;
        const double iad = tanh_sinh(fad, 0.0, t1, rel, 1e-18).value + tanh_sinh(fad, t1, pi, rel, 1e-18).value;

        const double tmax = std::acosh(1.0 + kTailLog / x) + 0.5;
        const int panels = 1 + static_cast<int>(std::ceil(nu * tmax / (4.0 * pi)));
        auto fb = [&](double t) { return std::exp(-x * (std::cosh(t) - 1.0)) * std::sin(nu * t); };
        auto fbd = [&](double t) { return std::cosh(t) * std::exp(-x * (std::cosh(t) - 1.0)) * std::sin(nu * t); };
        const double ib = tanh_sinh_panels(fb, 0.0, tmax, panels, rel, 1e-18).value;
        const double ibd = tanh_sinh_panels(fbd, 0.0, tmax, panels, rel, 1e-18).value;

        // e^{-pi nu} sinh(pi nu) = -expm1(-2 pi nu) / 2
        const double damp = -std::expm1(-2.0 * pi * nu);
        const ScaledReal sa = ScaledReal::from_log(gmax - pi * nu);
        const ScaledReal sbk = ScaledReal::from_log(-x);
        out.i_tilde = sa * ScaledReal(2.0 * ia) - sbk * ScaledReal(damp * ib);
        out.i_tilde_deriv = sa * ScaledReal(2.0 * iad) + sbk * ScaledReal(damp * ibd);
    }
    return out;
}

bool use_series(double nu, double x) { return x <= kSeriesMaxX || x < kSeriesNuFactor * nu; }

} // namespace

BesselPair bessel_pair(double nu, double x, BesselSelect select) {
    check_args(nu, x);
    switch (select) {
    case BesselSelect::series: return series_pair(nu, x);
    case BesselSelect::integral: return integral_pair(nu, x);
    case BesselSelect::automatic: break;
    }
    return use_series(nu, x) ? series_pair(nu, x) : integral_pair(nu, x);
}

BesselImOrderValue bessel_k_im_value(double nu, double x, BesselSelect select) {
    const BesselPair p = bessel_pair(nu, x, select);
    return {p.k, nu, x, p.method};
}

BesselImOrderValue bessel_i_tilde_value(double nu, double x, BesselSelect select) {
    const BesselPair p = bessel_pair(nu, x, select);
    return {p.i_tilde, nu, x, p.method};
}

ScaledReal bessel_k_im(double nu, double x) { return bessel_pair(nu, x).k; }
ScaledReal bessel_i_tilde(double nu, double x) { return bessel_pair(nu, x).i_tilde; }
ScaledReal bessel_k_im_deriv(double nu, double x) { return bessel_pair(nu, x).k_deriv; }
ScaledReal bessel_i_tilde_deriv(double nu, double x) { return bessel_pair(nu, x).i_tilde_deriv; }

double bessel_i_tilde_imag_residue(double nu, double x) {
    check_args(nu, x);
    const PrecisionContext ctx = big_eval_context(std::max(kMinBigDigits, 30 + static_cast<int>(x)));
    auto run = [&](double order) {
        const BigReal bnu(order, ctx), bx(x, ctx);
        const BigReal q = bx * bx * 0.25;
        BigComplex logt0 = BigComplex(BigReal(0L, ctx), bnu * log(bx * 0.5)) -
                           log_gamma(BigComplex(BigReal(1L, ctx), bnu), ctx);
        BigComplex u(1.0, 0.0, ctx), sum(1.0, 0.0, ctx);
        const long bits = static_cast<long>(ctx.bits());
        for (long k = 0; k < 100000; ++k) {
            const double kp1 = static_cast<double>(k + 1);
            u *= q;
            u /= BigComplex(BigReal(kp1, ctx) * kp1, bnu * kp1);
            sum += u;
            if (x * x * 0.25 < 0.5 * kp1 * kp1 && top_exp(u) < top_exp(sum) - bits - 4) break;
        }
        return exp(logt0) * sum;
    };
    const BigComplex total = run(nu) + run(-nu);
    if (total.re().is_zero()) return 0.0;
    return (abs(total.im()) / abs(total.re())).to_double();
}

double eta(double x) {
    if (!(x >= 1.0)) throw DomainError("eta needs x >= 1");
    const double p = std::sqrt((x - 1.0) * (x + 1.0));
    return p * p * p * atan_cubic_ratio(p) / 3.0;
}

double bessel_zeta_hat(double z) {
    if (!(z > 0.0)) throw DomainError("bessel_zeta_hat needs z > 0");
    if (z == 1.0) return 0.0;
    if (z < 1.0) {
        const double q = std::sqrt((1.0 - z) * (1.0 + z));
        const double F = q < 0.1 ? q * q * q * atanh_cubic_ratio(q) / 3.0 : std::log((1.0 + q) / z) - q;
        return std::cbrt(1.5 * F * 1.5 * F);
    }
    const double p = std::sqrt((z - 1.0) * (z + 1.0));
    const double F = p * p * p * atan_cubic_ratio(p) / 3.0;
    return -std::cbrt(1.5 * F * 1.5 * F);
}

double bessel_airy_ratio(double z) {
    if (!(z > 0.0)) throw DomainError("bessel_airy_ratio needs z > 0");
    double ratio;
    if (z < 1.0) {
        const double q = std::sqrt((1.0 - z) * (1.0 + z));
        ratio = q < 0.1 ? std::cbrt(16.0) * std::cbrt(atanh_cubic_ratio(q) * atanh_cubic_ratio(q))
                        : 4.0 * bessel_zeta_hat(z) / (q * q);
    } else {
        const double p = std::sqrt((z - 1.0) * (z + 1.0));
        ratio = std::cbrt(16.0) * std::cbrt(atan_cubic_ratio(p) * atan_cubic_ratio(p));
    }
    return std::sqrt(std::sqrt(ratio));
}

ScaledReal bessel_k_airy_approx(double nu, double z) {
    if (!(nu > 0.0)) throw DomainError("bessel_k_airy_approx needs nu > 0");
    const double zh = bessel_zeta_hat(z);
    const ScaledReal ai = airy_ai_scaled(-std::cbrt(nu * nu) * zh);
    return ScaledReal::from_log(std::log(pi) - 0.5 * pi * nu - std::log(nu) / 3.0) *
           ScaledReal(bessel_airy_ratio(z)) * ai;
}

} // namespace hypasym
