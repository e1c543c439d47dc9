#include "hypasym/bigfloat.hpp"

#include "hypasym/errors.hpp"

#include <cmath>
#include <memory>
#include <utility>

namespace hypasym {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

mpfr_prec_t max_prec(const BigReal& a, const BigReal& b) {
    return std::max(a.precision(), b.precision());
}

// Re-rounds `x` in place to at least precision p.
void promote(BigReal& x, mpfr_prec_t p) {
    if (x.precision() < p) mpfr_prec_round(x.raw(), p, kRnd);
}

} // namespace

PrecisionContext::PrecisionContext(int digits)
    : digits_(digits),
      bits_(static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8) {}

PrecisionContext big_eval_context(int digits) {
    if (digits < kMinBigDigits)
        throw ConfigError("extended precision requires at least " + std::to_string(kMinBigDigits) +
                          " digits (got " + std::to_string(digits) + ")");
    return PrecisionContext(digits);
}

BigReal::BigReal(const PrecisionContext& ctx) {
    mpfr_init2(v_, ctx.bits());
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(double v, const PrecisionContext& ctx) {
    mpfr_init2(v_, ctx.bits());
    mpfr_set_d(v_, v, kRnd);
}

BigReal::BigReal(long v, const PrecisionContext& ctx) {
    mpfr_init2(v_, ctx.bits());
    mpfr_set_si(v_, v, kRnd);
}

BigReal::BigReal(const std::string& decimal, const PrecisionContext& ctx) {
    mpfr_init2(v_, ctx.bits());
    if (mpfr_set_str(v_, decimal.c_str(), 10, kRnd) != 0) {
        mpfr_clear(v_);
        throw DomainError("BigReal: cannot parse '" + decimal + "'");
    }
}

BigReal::BigReal(const BigReal& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, kRnd);
}

BigReal::BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, kRnd);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

double BigReal::log10_abs() const {
    if (is_zero()) return -HUGE_VAL;
    long e2;
    const double m = mpfr_get_d_2exp(&e2, v_, kRnd);
    return std::log10(std::fabs(m)) + static_cast<double>(e2) * 0.30102999566398120;
}

std::string BigReal::to_string(int digits) const {
    char* buf = nullptr;
    const std::string fmt = "%." + std::to_string(digits - 1) + "Re";
    mpfr_asprintf(&buf, fmt.c_str(), v_);
    std::string out(buf ? buf : "");
    mpfr_free_str(buf);
    return out;
}

BigReal BigReal::operator-() const {
    BigReal r(*this);
    mpfr_neg(r.v_, r.v_, kRnd);
    return r;
}

BigReal& BigReal::operator+=(const BigReal& o) {
    promote(*this, o.precision());
    mpfr_add(v_, v_, o.v_, kRnd);
    return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
    promote(*this, o.precision());
    mpfr_sub(v_, v_, o.v_, kRnd);
    return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
    promote(*this, o.precision());
    mpfr_mul(v_, v_, o.v_, kRnd);
    return *this;
}

BigReal& BigReal::operator/=(const BigReal& o) {
    promote(*this, o.precision());
    mpfr_div(v_, v_, o.v_, kRnd);
    return *this;
}

BigReal operator*(BigReal a, double b) {
    mpfr_mul_d(a.v_, a.v_, b, kRnd);
    return a;
}

BigReal operator+(BigReal a, double b) {
    mpfr_add_d(a.v_, a.v_, b, kRnd);
    return a;
}

#define HYPASYM_UNARY(name, fn)                 \
    BigReal name(const BigReal& x) {            \
        BigReal r(x);                           \
        fn(r.raw(), x.raw(), kRnd);             \
        return r;                               \
    }

HYPASYM_UNARY(abs, mpfr_abs)
HYPASYM_UNARY(sqrt, mpfr_sqrt)
HYPASYM_UNARY(exp, mpfr_exp)
HYPASYM_UNARY(log, mpfr_log)
HYPASYM_UNARY(sin, mpfr_sin)
HYPASYM_UNARY(cos, mpfr_cos)
HYPASYM_UNARY(atan, mpfr_atan)

#undef HYPASYM_UNARY

BigReal pow(const BigReal& x, const BigReal& p) {
    BigReal r(x);
    promote(r, p.precision());
    mpfr_pow(r.raw(), x.raw(), p.raw(), kRnd);
    return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
    BigReal r(y);
    promote(r, max_prec(x, y));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), kRnd);
    return r;
}

BigReal big_pi(const PrecisionContext& ctx) {
    BigReal r(ctx);
    mpfr_const_pi(r.raw(), kRnd);
    return r;
}

BigReal ulp(const BigReal& x) {
    BigReal r(x);
    if (x.is_zero()) {
        mpfr_set_ui_2exp(r.raw(), 1, mpfr_get_emin(), kRnd);
        return r;
    }
    mpfr_set_ui_2exp(r.raw(), 1, mpfr_get_exp(x.raw()) - x.precision(), kRnd);
    return r;
}

ScaledReal to_scaled(const BigReal& x) {
    if (x.is_zero()) return ScaledReal();
    // k = floor(log|x|) evaluated at extended precision, then x e^{-k} in [1, e).
    BigReal l = log(abs(x));
    const double k = std::floor(l.to_double());
    BigReal kk(k, big_eval_context(kMinBigDigits));
    BigReal m = x * exp(-kk);
    return ScaledReal(m.to_double(), static_cast<std::int64_t>(k));
}

BigReal BigComplex::norm() const { return re_ * re_ + im_ * im_; }

BigReal BigComplex::abs() const {
    BigReal r(re_);
    promote(r, im_.precision());
    mpfr_hypot(r.raw(), re_.raw(), im_.raw(), kRnd);
    return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
    BigReal re = re_ * o.re_ - im_ * o.im_;
    BigReal im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
    const BigReal d = o.norm();
    BigReal re = (re_ * o.re_ + im_ * o.im_) / d;
    BigReal im = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& o) {
    re_ *= o;
    im_ *= o;
    return *this;
}

BigComplex unit_phase(const BigReal& theta) {
    BigReal s(theta), c(theta);
    mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), kRnd);
    return BigComplex(std::move(c), std::move(s));
}

BigComplex exp(const BigComplex& z) { return unit_phase(z.im()) * exp(z.re()); }

BigComplex log(const BigComplex& z) { return BigComplex(log(z.abs()), z.arg()); }

ScaledComplex to_scaled(const BigComplex& z) {
    if (z.is_zero()) return ScaledComplex();
    const BigReal a = z.abs();
    const double k = std::floor(log(a).to_double());
    BigReal scale(-k, big_eval_context(kMinBigDigits));
    scale = exp(scale);
    const double re = (z.re() * scale).to_double();
    const double im = (z.im() * scale).to_double();
    return ScaledComplex({re, im}, static_cast<std::int64_t>(k));
}

} // namespace hypasym
