#pragma once

#include "hypasym/scaled.hpp"

#include <mpfr.h>

#include <string>

namespace hypasym {

// Working precision for extended-precision computations. Passed explicitly
// to every oracle-side call; there is no process-wide default.
class PrecisionContext {
public:
    int digits() const noexcept { return digits_; }
    mpfr_prec_t bits() const noexcept { return bits_; }

    // Same context with `extra` more decimal digits.
    PrecisionContext widened(int extra) const { return PrecisionContext(digits_ + extra); }

private:
    explicit PrecisionContext(int digits);
    friend PrecisionContext big_eval_context(int digits);

    int digits_;
    mpfr_prec_t bits_;
};

inline constexpr int kMinBigDigits = 50;

// Throws ConfigError for digits < 50.
PrecisionContext big_eval_context(int digits);

// Extended-precision real. Thin RAII owner of an mpfr_t; every operation
// rounds to nearest at the larger of the operand precisions.
class BigReal {
public:
    explicit BigReal(const PrecisionContext& ctx);
    BigReal(double v, const PrecisionContext& ctx);
    BigReal(long v, const PrecisionContext& ctx);
    BigReal(const std::string& decimal, const PrecisionContext& ctx);
    BigReal(const BigReal& o);
    BigReal(BigReal&& o) noexcept;
    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept;
    ~BigReal();

    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
    mpfr_ptr raw() noexcept { return v_; }
    mpfr_srcptr raw() const noexcept { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    // log10|x|, -inf at zero.
    double log10_abs() const;
    std::string to_string(int digits) const;

    BigReal operator-() const;
    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);

    friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
    friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
    friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
    friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
    friend BigReal operator*(BigReal a, double b);
    friend BigReal operator+(BigReal a, double b);

    friend int compare(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const BigReal& a, const BigReal& b) { return compare(a, b) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return compare(a, b) > 0; }

private:
    mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& p);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal big_pi(const PrecisionContext& ctx);
// One unit in the last place of x at its own precision.
BigReal ulp(const BigReal& x);

ScaledReal to_scaled(const BigReal& x);

// Extended-precision complex number as a pair of BigReal parts.
class BigComplex {
public:
    explicit BigComplex(const PrecisionContext& ctx) : re_(ctx), im_(ctx) {}
    BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
    BigComplex(double re, double im, const PrecisionContext& ctx) : re_(re, ctx), im_(im, ctx) {}

    const BigReal& re() const noexcept { return re_; }
    const BigReal& im() const noexcept { return im_; }
    BigReal& re() noexcept { return re_; }
    BigReal& im() noexcept { return im_; }

    BigReal norm() const; // re^2 + im^2
    BigReal abs() const;
    BigReal arg() const { return atan2(im_, re_); }
    BigComplex conj() const { return BigComplex(re_, -im_); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    BigComplex operator-() const { return BigComplex(-re_, -im_); }
    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);
    BigComplex& operator*=(const BigReal& o);

    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
    friend BigComplex operator*(BigComplex a, const BigReal& b) { return a *= b; }

private:
    BigReal re_;
    BigReal im_;
};

// Principal branch.
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);
// e^{i theta}.
BigComplex unit_phase(const BigReal& theta);

ScaledComplex to_scaled(const BigComplex& z);

} // namespace hypasym
