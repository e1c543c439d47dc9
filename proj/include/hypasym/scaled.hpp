#pragma once

#include <complex>
#include <cstdint>

namespace hypasym {

// A real number stored as significand * e^exponent.
//
// After normalize() the significand satisfies 1 <= |s| < e (or s == 0 with
// exponent 0). Products of factors such as e^{pi r} and K_{i nu}(x) ~ e^{-x}
// stay representable for any |log value| up to ~1e15.
class ScaledReal {
public:
    constexpr ScaledReal() = default;
    ScaledReal(double significand, std::int64_t exponent);
    explicit ScaledReal(double value) : ScaledReal(value, 0) {}

    static ScaledReal from_log(double logmag, int sign = 1);
    static ScaledReal zero() { return ScaledReal(); }

    double significand() const noexcept { return sig_; }
    std::int64_t exponent() const noexcept { return exp_; }

    bool is_zero() const noexcept { return sig_ == 0.0; }
    int sign() const noexcept { return (sig_ > 0) - (sig_ < 0); }

    // log|x|; -inf for zero.
    double log_abs() const;
    // Nearest double; overflows to +-inf / underflows to 0 outside range.
    double to_double() const;

    ScaledReal abs() const { return ScaledReal(sig_ < 0 ? -sig_ : sig_, exp_, raw_tag{}); }
    ScaledReal operator-() const { return ScaledReal(-sig_, exp_, raw_tag{}); }

    friend ScaledReal operator*(const ScaledReal& a, const ScaledReal& b);
    friend ScaledReal operator/(const ScaledReal& a, const ScaledReal& b);
    friend ScaledReal operator+(const ScaledReal& a, const ScaledReal& b);
    friend ScaledReal operator-(const ScaledReal& a, const ScaledReal& b) { return a + (-b); }

    ScaledReal& operator*=(const ScaledReal& o) { return *this = *this * o; }
    ScaledReal& operator/=(const ScaledReal& o) { return *this = *this / o; }
    ScaledReal& operator+=(const ScaledReal& o) { return *this = *this + o; }

    // |x|^p for x != 0; sign dropped.
    ScaledReal pow_abs(double p) const;

    // Three-way ordering on the represented values.
    friend int compare(const ScaledReal& a, const ScaledReal& b);
    friend bool operator<(const ScaledReal& a, const ScaledReal& b) { return compare(a, b) < 0; }
    friend bool operator<=(const ScaledReal& a, const ScaledReal& b) { return compare(a, b) <= 0; }
    friend bool operator>(const ScaledReal& a, const ScaledReal& b) { return compare(a, b) > 0; }
    friend bool operator>=(const ScaledReal& a, const ScaledReal& b) { return compare(a, b) >= 0; }

    // Bitwise equality of the stored fields.
    friend bool operator==(const ScaledReal& a, const ScaledReal& b) = default;

private:
    struct raw_tag {};
    ScaledReal(double s, std::int64_t e, raw_tag) : sig_(s), exp_(e) {}

    friend ScaledReal normalize(const ScaledReal& x);

    double sig_ = 0.0;
    std::int64_t exp_ = 0;
};

// Canonical form: 1 <= |significand| < e, zero as (0, 0). Idempotent.
ScaledReal normalize(const ScaledReal& x);

// A complex number stored as significand * e^exponent with a complex
// significand, 1 <= |significand| < e after normalization. Real and
// imaginary parts share the exponent.
class ScaledComplex {
public:
    ScaledComplex() = default;
    ScaledComplex(std::complex<double> significand, std::int64_t exponent);
    explicit ScaledComplex(const ScaledReal& re);
    ScaledComplex(const ScaledReal& re, const ScaledReal& im);

    // e^{logmag + i phase}.
    static ScaledComplex polar_log(double logmag, double phase);

    std::complex<double> significand() const noexcept { return sig_; }
    std::int64_t exponent() const noexcept { return exp_; }

    ScaledReal re() const { return ScaledReal(sig_.real(), exp_); }
    ScaledReal im() const { return ScaledReal(sig_.imag(), exp_); }
    ScaledReal abs() const { return ScaledReal(std::abs(sig_), exp_); }
    ScaledReal norm() const; // |z|^2
    double arg() const { return std::arg(sig_); }
    double log_abs() const;
    bool is_zero() const noexcept { return sig_ == std::complex<double>{}; }

    std::complex<double> to_complex() const;

    ScaledComplex conj() const { return ScaledComplex(std::conj(sig_), exp_); }
    ScaledComplex operator-() const { return ScaledComplex(-sig_, exp_); }

    friend ScaledComplex operator*(const ScaledComplex& a, const ScaledComplex& b);
    friend ScaledComplex operator/(const ScaledComplex& a, const ScaledComplex& b);
    friend ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b);
    friend ScaledComplex operator-(const ScaledComplex& a, const ScaledComplex& b) { return a + (-b); }
    friend ScaledComplex operator*(const ScaledComplex& a, const ScaledReal& b) { return a * ScaledComplex(b); }

    friend bool operator==(const ScaledComplex& a, const ScaledComplex& b) = default;

private:
    std::complex<double> sig_{};
    std::int64_t exp_ = 0;
};

// e^{logmag} e^{i phase}; throws DomainError for non-finite input.
ScaledComplex scaled_from_log(double logmag, double phase);

} // namespace hypasym
