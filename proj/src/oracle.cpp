#include "hypasym/oracle.hpp"

#include "hypasym/errors.hpp"
#include "hypasym/gamma.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace hypasym {

namespace {

constexpr double kLog10_2 = 0.30102999566398120;
constexpr int kGuardDigits = 5;
constexpr int kRestartMargin = 12;
constexpr long kCheckEvery = 32;

// Bound on |(p + m) / (q + m)| over all m >= n, valid for n > |q|:
//   |p+m|^2 / |q+m|^2 = 1 + (2 (Re p - Re q) m + |p|^2 - |q|^2) / |q+m|^2
//                     <= 1 + (P m + Q) / (m - |q|)^2,
// and the right-hand side decreases in m.
double ratio_bound(double re_p, double abs_p, double re_q, double abs_q, double n) {
    const double P = 2.0 * std::fabs(re_p - re_q);
    const double Q = std::max(0.0, abs_p * abs_p - abs_q * abs_q);
    const double d = n - abs_q;
    return std::sqrt(1.0 + (P * n + Q) / (d * d));
}

long top_exp(mpfr_srcptr v) {
    return mpfr_zero_p(v) ? std::numeric_limits<long>::min() / 4 : static_cast<long>(mpfr_get_exp(v));
}

struct Pass {
    mpfr_prec_t prec;
    mpfr_t ar, ai, br, bi, cr, ci, y;
    mpfr_t tr, ti, sr, si;
    mpfr_t pr, pim, dr, di, qr, qi, nd, t1, t2;

    explicit Pass(mpfr_prec_t p) : prec(p) {
        for (mpfr_ptr v : all()) mpfr_init2(v, p);
    }
    ~Pass() {
        for (mpfr_ptr v : all()) mpfr_clear(v);
    }
    Pass(const Pass&) = delete;
    Pass& operator=(const Pass&) = delete;

    std::array<mpfr_ptr, 20> all() {
        return {ar, ai, br, bi, cr, ci, y, tr, ti, sr, si, pr, pim, dr, di, qr, qi, nd, t1, t2};
    }
};

struct PassResult {
    long terms = 0;
    double tail_log10 = 0.0;
    double cancellation = 0.0;
};

PassResult run_pass(Pass& s, int target_digits, double abs_a, double re_a, double abs_b, double re_b,
                    double abs_c, double re_c, double yabs) {
    constexpr mpfr_rnd_t R = MPFR_RNDN;
    mpfr_set_ui(s.tr, 1, R);
    mpfr_set_ui(s.ti, 0, R);
    mpfr_set_ui(s.sr, 1, R);
    mpfr_set_ui(s.si, 0, R);

    const double target_log2 = target_digits / kLog10_2;
    long max_sum = 1;
    PassResult res;
    const double n_min = std::max(abs_c, 1.0) + 2.0;

    for (long n = 0; n < kOracleMaxTerms; ++n) {
        // (a+n)(b+n)
        mpfr_mul(s.pr, s.ar, s.br, R);
        mpfr_mul(s.t1, s.ai, s.bi, R);
        mpfr_sub(s.pr, s.pr, s.t1, R);
        mpfr_mul(s.pim, s.ar, s.bi, R);
        mpfr_mul(s.t1, s.ai, s.br, R);
        mpfr_add(s.pim, s.pim, s.t1, R);
        // (c+n)(n+1)
        mpfr_mul_ui(s.dr, s.cr, static_cast<unsigned long>(n + 1), R);
        mpfr_mul_ui(s.di, s.ci, static_cast<unsigned long>(n + 1), R);
        // num * conj(den) * y / |den|^2
        mpfr_mul(s.qr, s.pr, s.dr, R);
        mpfr_mul(s.t1, s.pim, s.di, R);
        mpfr_add(s.qr, s.qr, s.t1, R);
        mpfr_mul(s.qi, s.pim, s.dr, R);
        mpfr_mul(s.t1, s.pr, s.di, R);
        mpfr_sub(s.qi, s.qi, s.t1, R);
        mpfr_sqr(s.nd, s.dr, R);
        mpfr_sqr(s.t1, s.di, R);
        mpfr_add(s.nd, s.nd, s.t1, R);
        mpfr_div(s.nd, s.y, s.nd, R);
        mpfr_mul(s.qr, s.qr, s.nd, R);
        mpfr_mul(s.qi, s.qi, s.nd, R);
        // term *= ratio
        mpfr_mul(s.t1, s.tr, s.qr, R);
        mpfr_mul(s.t2, s.ti, s.qi, R);
        mpfr_sub(s.t1, s.t1, s.t2, R);
        mpfr_mul(s.t2, s.tr, s.qi, R);
        mpfr_mul(s.ti, s.ti, s.qr, R);
        mpfr_add(s.ti, s.ti, s.t2, R);
        mpfr_swap(s.tr, s.t1);
        mpfr_add(s.sr, s.sr, s.tr, R);
        mpfr_add(s.si, s.si, s.ti, R);
        // advance a, b, c by one
        mpfr_add_ui(s.ar, s.ar, 1, R);
        mpfr_add_ui(s.br, s.br, 1, R);
        mpfr_add_ui(s.cr, s.cr, 1, R);

        const long se = std::max(top_exp(s.sr), top_exp(s.si));
        max_sum = std::max(max_sum, se);

        const double m = static_cast<double>(n + 1); // index of the term just added
        if ((n + 1) % kCheckEvery != 0 || m < n_min) continue;
        if (mpfr_zero_p(s.tr) && mpfr_zero_p(s.ti)) {
            res.terms = n + 2;
            res.tail_log10 = -std::numeric_limits<double>::infinity();
            break;
        }
        const double rho = yabs * ratio_bound(re_a, abs_a, re_c, abs_c, m) * ratio_bound(re_b, abs_b, 1.0, 1.0, m);
        if (rho >= 1.0) continue;
        const double term_log2 = static_cast<double>(std::max(top_exp(s.tr), top_exp(s.ti))) + 0.5;
        const double tail_log2 = term_log2 + std::log2(rho / (1.0 - rho));
        if (tail_log2 < static_cast<double>(se - 1) - target_log2) {
            res.terms = n + 2;
            res.tail_log10 = tail_log2 * kLog10_2;
            break;
        }
    }
    if (res.terms == 0)
        throw ResourceError("Gauss series did not reach its tail bound within the term budget",
                            target_digits);
    const long fe = std::max(top_exp(s.sr), top_exp(s.si));
    res.cancellation = std::max(0.0, static_cast<double>(max_sum - fe + 1) * kLog10_2);
    return res;
}

} // namespace

OracleValue gauss_2f1_series(const BigComplex& a, const BigComplex& b, const BigComplex& c, const BigReal& y,
                             const PrecisionContext& ctx) {
    const double yabs = std::fabs(y.to_double());
    if (!(yabs < 1.0)) throw DomainError("Gauss series needs |y| < 1");
    const double cr = c.re().to_double(), ci = c.im().to_double();
    if (ci == 0.0 && cr <= 0.0 && cr == std::floor(cr)) throw DomainError("Gauss series: c is a non-positive integer");

    const int target = ctx.digits();
    const double abs_a = a.abs().to_double(), abs_b = b.abs().to_double(), abs_c = c.abs().to_double();
    const double re_a = a.re().to_double(), re_b = b.re().to_double();

    // Terms decay like |y|^n once n exceeds the parameters; refuse up front
    // when that alone would blow the term budget.
    if (yabs > 0.0) {
        const double n_est = std::max({abs_a, abs_b, abs_c}) + target * std::log(10.0) / -std::log(yabs);
        if (n_est > static_cast<double>(kOracleMaxTerms))
            throw ResourceError("Gauss series would need about " + std::to_string(static_cast<long long>(n_est)) +
                                    " terms at |y| = " + std::to_string(yabs),
                                target);
    }

    int working = target + kRestartMargin;
    for (int attempt = 0; attempt < 8; ++attempt) {
        const PrecisionContext wctx = big_eval_context(working);
        Pass s(wctx.bits());
        mpfr_set(s.ar, a.re().raw(), MPFR_RNDN);
        mpfr_set(s.ai, a.im().raw(), MPFR_RNDN);
        mpfr_set(s.br, b.re().raw(), MPFR_RNDN);
        mpfr_set(s.bi, b.im().raw(), MPFR_RNDN);
        mpfr_set(s.cr, c.re().raw(), MPFR_RNDN);
        mpfr_set(s.ci, c.im().raw(), MPFR_RNDN);
        mpfr_set(s.y, y.raw(), MPFR_RNDN);

        if (y.is_zero()) {
            OracleValue out{BigComplex(1.0, 0.0, wctx), 1, BigReal(wctx), 0.0, working};
            return out;
        }

        const PassResult pr = run_pass(s, target, abs_a, re_a, abs_b, re_b, abs_c, cr, yabs);
        const int needed = target + static_cast<int>(std::ceil(pr.cancellation)) + kGuardDigits;
        if (needed <= working) {
            BigReal re(wctx), im(wctx);
            mpfr_set(re.raw(), s.sr, MPFR_RNDN);
            mpfr_set(im.raw(), s.si, MPFR_RNDN);
            BigReal tail(wctx);
            if (std::isfinite(pr.tail_log10)) {
                BigReal ten(10L, wctx), e(pr.tail_log10, wctx);
                tail = pow(ten, e);
            }
            return OracleValue{BigComplex(std::move(re), std::move(im)), pr.terms, tail, pr.cancellation, working};
        }
        const int next = target + static_cast<int>(std::ceil(pr.cancellation)) + kRestartMargin;
        if (next > kOracleMaxDigits)
            throw ResourceError("Gauss series needs more working precision than the cap allows", next);
        working = next;
    }
    throw NumericalError("Gauss series: working precision did not stabilise");
}

OracleValue hyp2f1_oracle(const Params& p, const BigReal& y, const PrecisionContext& ctx) {
    const BigReal r(p.r, ctx), al(p.alpha, ctx), one(1L, ctx), quarter(0.25, ctx);
    const BigComplex a(quarter, r * (one - al));
    const BigComplex b(quarter, -(r * (one + al)));
    const BigComplex c(0.5, 0.0, ctx);
    return gauss_2f1_series(a, b, c, y, ctx);
}

OracleValue f2_oracle(const Params& p, const PrecisionContext& ctx) {
    validate(p);
    OracleValue s = hyp2f1_oracle(p, BigReal(p.y, ctx), ctx);
    const BigComplex logpre = log_gamma_prefactor(p.r, p.alpha, ctx.widened(10));
    s.value = s.value * exp(logpre);
    s.tail_bound = s.tail_bound * exp(logpre.re());
    return s;
}

BigComplex y_transform(const Params& p, const BigComplex& f2, const PrecisionContext& ctx) {
    const BigComplex pre = exp(log_gamma_prefactor(p.r, p.alpha, ctx.widened(10)));
    const BigReal y(p.y, ctx), one(1L, ctx);
    const BigReal l1y = log(one - y);
    // y^{1/4} (1-y)^{1/2} e^{-i r alpha log(1-y)}
    const BigReal mag = exp(log(y) * 0.25 + l1y * 0.5);
    const BigComplex phase = unit_phase(-(l1y * BigReal(p.r, ctx) * BigReal(p.alpha, ctx)));
    return (f2 / pre) * phase * mag;
}

BigReal ode_f(double alpha, const BigReal& y, const PrecisionContext& ctx) {
    const BigReal one(1L, ctx), a(alpha, ctx);
    const BigReal omy = one - y;
    return (one - a * a - y) / (y * omy * omy * 4.0);
}

BigReal ode_g(const BigReal& y, const PrecisionContext& ctx) {
    const BigReal one(1L, ctx);
    const BigReal omy = one - y;
    return -(one / (omy * omy * 4.0)) - BigReal(3L, ctx) / (y * y * omy * 16.0);
}

double ode_residual(const Params& p, double y0, double h, const PrecisionContext& ctx) {
    if (!(h > 0.0) || !(y0 - 2 * h > 0.0) || !(y0 + 2 * h < 1.0))
        throw DomainError("ode_residual: stencil must lie inside (0, 1)");
    const BigReal by0(y0, ctx), bh(h, ctx), one(1L, ctx);
    const BigReal l_alpha = BigReal(p.r, ctx) * BigReal(p.alpha, ctx);

    auto Y = [&](int k) {
        BigReal yk = by0 + bh * static_cast<double>(k);
        const OracleValue F = hyp2f1_oracle(p, yk, ctx);
        const BigReal l1y = log(one - yk);
        const BigReal mag = exp(log(yk) * 0.25 + l1y * 0.5);
        return F.value * unit_phase(-(l1y * l_alpha)) * mag;
    };
    const BigComplex ym2 = Y(-2), ym1 = Y(-1), y00 = Y(0), yp1 = Y(1), yp2 = Y(2);

    const BigReal sixteen(16L, ctx), thirty(30L, ctx);
    BigComplex d2 = (ym1 + yp1) * sixteen - (ym2 + yp2) - y00 * thirty;
    const BigReal denom = bh * bh * 12.0;
    d2 = d2 * (one / denom);

    const BigReal f = ode_f(p.alpha, by0, ctx);
    const BigReal g = ode_g(by0, ctx);
    const BigReal br(p.r, ctx);
    const BigReal four_r2 = br * br * 4.0;
    const BigReal coef = four_r2 * f + g;
    const BigComplex defect = d2 - y00 * coef;
    const BigReal scale = (four_r2 * abs(f) + abs(g)) * y00.abs();
    return (defect.abs() / scale).to_double();
}

} // namespace hypasym
