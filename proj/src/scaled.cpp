#include "hypasym/scaled.hpp"

#include "hypasym/errors.hpp"

#include <cmath>
#include <numbers>

namespace hypasym {

namespace {

constexpr double kE = std::numbers::e;

// Beyond this exponent gap the smaller addend is below double resolution.
constexpr std::int64_t kAddGap = 40;

// x * e^{-k} without overflowing the intermediate for |k| up to ~1400.
double scale_down(double x, double k) {
    const double half = std::trunc(k / 2.0);
    return x * std::exp(-half) * std::exp(-(k - half));
}

// Brings |s| into [1, e) adjusting e; returns false for zero/non-finite.
bool canonicalize(double magnitude, double& factor, std::int64_t& shift) {
    factor = 1.0;
    shift = 0;
    if (magnitude == 0.0 || !std::isfinite(magnitude)) return false;
    if (magnitude >= 1.0 && magnitude < kE) return true;
    const double k = std::floor(std::log(magnitude));
    double m = scale_down(magnitude, k);
    factor = scale_down(1.0, k);
    shift = static_cast<std::int64_t>(k);
    while (m >= kE) {
        m /= kE;
        factor /= kE;
        ++shift;
    }
    while (m < 1.0) {
        m *= kE;
        factor *= kE;
        --shift;
    }
    return true;
}

double exp_to_double(double sig, std::int64_t e) {
    if (sig == 0.0) return 0.0;
    if (e > 800) return std::copysign(HUGE_VAL, sig);
    if (e < -800) return std::copysign(0.0, sig);
    if (e < -700) return sig * std::exp(static_cast<double>(e + 60)) * std::exp(-60.0);
    return sig * std::exp(static_cast<double>(e));
}

} // namespace

ScaledReal::ScaledReal(double significand, std::int64_t exponent)
    : sig_(significand), exp_(exponent) {
    *this = normalize(*this);
}

ScaledReal normalize(const ScaledReal& x) {
    if (x.sig_ == 0.0) return ScaledReal();
    double factor;
    std::int64_t shift;
    if (!canonicalize(std::fabs(x.sig_), factor, shift)) return x;
    if (shift == 0 && factor == 1.0) return x;
    return ScaledReal(x.sig_ * factor, x.exp_ + shift, ScaledReal::raw_tag{});
}

ScaledReal ScaledReal::from_log(double logmag, int sign) {
    if (!std::isfinite(logmag)) {
        if (logmag == -HUGE_VAL) return ScaledReal();
        throw DomainError("ScaledReal::from_log: non-finite log-magnitude");
    }
    const double k = std::floor(logmag);
    return ScaledReal((sign < 0 ? -1.0 : 1.0) * std::exp(logmag - k), static_cast<std::int64_t>(k));
}

double ScaledReal::log_abs() const {
    if (sig_ == 0.0) return -HUGE_VAL;
    return std::log(std::fabs(sig_)) + static_cast<double>(exp_);
}

double ScaledReal::to_double() const { return exp_to_double(sig_, exp_); }

ScaledReal operator*(const ScaledReal& a, const ScaledReal& b) {
    if (a.is_zero() || b.is_zero()) return ScaledReal();
    return ScaledReal(a.sig_ * b.sig_, a.exp_ + b.exp_);
}

ScaledReal operator/(const ScaledReal& a, const ScaledReal& b) {
    if (b.is_zero()) throw DomainError("ScaledReal: division by zero");
    if (a.is_zero()) return ScaledReal();
    return ScaledReal(a.sig_ / b.sig_, a.exp_ - b.exp_);
}

ScaledReal operator+(const ScaledReal& a, const ScaledReal& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const ScaledReal& hi = a.exp_ >= b.exp_ ? a : b;
    const ScaledReal& lo = a.exp_ >= b.exp_ ? b : a;
    const std::int64_t gap = hi.exp_ - lo.exp_;
    if (gap > kAddGap) return hi;
    return ScaledReal(hi.sig_ + lo.sig_ * std::exp(-static_cast<double>(gap)), hi.exp_);
}

ScaledReal ScaledReal::pow_abs(double p) const {
    if (sig_ == 0.0) {
        if (p > 0) return ScaledReal();
        throw DomainError("ScaledReal::pow_abs: zero to non-positive power");
    }
    // Split p*exp into an integer part and a small remainder to keep precision.
    const double pe = p * static_cast<double>(exp_);
    const double pe_int = std::floor(pe);
    const double rest = (pe - pe_int) + p * std::log(std::fabs(sig_));
    return ScaledReal::from_log(rest) * ScaledReal(1.0, static_cast<std::int64_t>(pe_int));
}

int compare(const ScaledReal& a, const ScaledReal& b) {
    const int sa = a.sign();
    const int sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    int mag;
    if (a.exp_ != b.exp_) {
        mag = a.exp_ < b.exp_ ? -1 : 1;
    } else {
        const double fa = std::fabs(a.sig_);
        const double fb = std::fabs(b.sig_);
        mag = (fa > fb) - (fa < fb);
    }
    return sa > 0 ? mag : -mag;
}

ScaledComplex::ScaledComplex(std::complex<double> significand, std::int64_t exponent)
    : sig_(significand), exp_(exponent) {
    if (sig_ == std::complex<double>{}) {
        exp_ = 0;
        return;
    }
    double factor;
    std::int64_t shift;
    if (!canonicalize(std::abs(sig_), factor, shift)) return;
    sig_ *= factor;
    exp_ += shift;
}

ScaledComplex::ScaledComplex(const ScaledReal& re) : ScaledComplex(re.significand(), re.exponent()) {}

ScaledComplex::ScaledComplex(const ScaledReal& re, const ScaledReal& im) {
    if (re.is_zero() && im.is_zero()) return;
    const std::int64_t e = re.is_zero() ? im.exponent()
                           : im.is_zero() ? re.exponent()
                                          : std::max(re.exponent(), im.exponent());
    auto part = [e](const ScaledReal& v) {
        if (v.is_zero() || e - v.exponent() > kAddGap) return 0.0;
        return v.significand() * std::exp(static_cast<double>(v.exponent() - e));
    };
    *this = ScaledComplex({part(re), part(im)}, e);
}

ScaledComplex ScaledComplex::polar_log(double logmag, double phase) {
    const ScaledReal m = ScaledReal::from_log(logmag);
    return ScaledComplex(std::polar(m.significand(), phase), m.exponent());
}

ScaledReal ScaledComplex::norm() const { return ScaledReal(std::norm(sig_), 2 * exp_); }

double ScaledComplex::log_abs() const {
    if (is_zero()) return -HUGE_VAL;
    return std::log(std::abs(sig_)) + static_cast<double>(exp_);
}

std::complex<double> ScaledComplex::to_complex() const {
    return {exp_to_double(sig_.real(), exp_), exp_to_double(sig_.imag(), exp_)};
}

ScaledComplex operator*(const ScaledComplex& a, const ScaledComplex& b) {
    if (a.is_zero() || b.is_zero()) return ScaledComplex();
    return ScaledComplex(a.sig_ * b.sig_, a.exp_ + b.exp_);
}

ScaledComplex operator/(const ScaledComplex& a, const ScaledComplex& b) {
    if (b.is_zero()) throw DomainError("ScaledComplex: division by zero");
    if (a.is_zero()) return ScaledComplex();
    return ScaledComplex(a.sig_ / b.sig_, a.exp_ - b.exp_);
}

ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const ScaledComplex& hi = a.exp_ >= b.exp_ ? a : b;
    const ScaledComplex& lo = a.exp_ >= b.exp_ ? b : a;
    const std::int64_t gap = hi.exp_ - lo.exp_;
    if (gap > kAddGap) return hi;
    return ScaledComplex(hi.sig_ + lo.sig_ * std::exp(-static_cast<double>(gap)), hi.exp_);
}

ScaledComplex scaled_from_log(double logmag, double phase) {
    if (!std::isfinite(logmag) || !std::isfinite(phase))
        throw DomainError("scaled_from_log: non-finite input");
    return ScaledComplex::polar_log(logmag, phase);
}

} // namespace hypasym
