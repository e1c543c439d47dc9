#include "hypasym/airy.hpp"

#include "hypasym/bigfloat.hpp"
#include "hypasym/errors.hpp"

#include <cmath>
#include <numbers>

namespace hypasym {

const char* to_string(AiryMethod m) {
    switch (m) {
    case AiryMethod::maclaurin: return "maclaurin";
    case AiryMethod::asymptotic_positive: return "asymptotic-positive";
    case AiryMethod::asymptotic_negative: return "asymptotic-negative";
    }
    return "?";
}

namespace detail {

// Ai = c1 f(x) - c2 g(x) with
//   f = sum 3^k (1/3)_k x^{3k} / (3k)!,  g = sum 3^k (2/3)_k x^{3k+1} / (3k+1)!.
// The two series cancel for large |x|, so they are summed at 50 digits.
double airy_ai_maclaurin(double x) {
    const PrecisionContext ctx = big_eval_context(kMinBigDigits);
    const BigReal bx(x, ctx);
    const BigReal x3 = bx * bx * bx;

    BigReal third(1L, ctx), two_thirds(2L, ctx), three(3L, ctx);
    third /= three;
    two_thirds /= three;

    BigReal g13(ctx), g23(ctx);
    mpfr_gamma(g13.raw(), third.raw(), MPFR_RNDN);
    mpfr_gamma(g23.raw(), two_thirds.raw(), MPFR_RNDN);
    const BigReal c1 = pow(three, -two_thirds) / g23;
    const BigReal c2 = pow(three, -third) / g13;

    BigReal f(1L, ctx), g(bx);
    BigReal tf(1L, ctx), tg(bx);
    BigReal tol(1.0, ctx);
    mpfr_div_2ui(tol.raw(), tol.raw(), static_cast<unsigned long>(ctx.bits()), MPFR_RNDN);
    for (long k = 1; k < 10000; ++k) {
        tf *= x3;
        tf /= BigReal((3 * k - 1) * (3 * k), ctx);
        tg *= x3;
        tg /= BigReal((3 * k) * (3 * k + 1), ctx);
        f += tf;
        g += tg;
        if (abs(tf) < tol && abs(tg) < tol) break;
    }
    return (c1 * f - c2 * g).to_double();
}

namespace {

// u_k of the large-argument expansions, via
//   u_k = u_{k-1} (6k-5)(6k-3)(6k-1) / ((2k-1) 216 k).
// u_k / zeta^k from u_{k-1} / zeta^{k-1}; the ratio form keeps both factors
// from overflowing when zeta is large.
double next_term(double term, int k, double zeta) {
    return term * (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) / ((2.0 * k - 1) * 216.0 * k * zeta);
}

// Ai(x) e^{zeta} for x > 0, zeta = (2/3) x^{3/2}; optimal truncation.
double positive_reduced(double x, double zeta) {
    using std::numbers::pi;
    double term = 1.0, sum = 0.0, last = HUGE_VAL;
    for (int k = 0; k < 400; ++k) {
        if (k > 0) term = next_term(term, k, zeta);
        if (term > last || term < 1e-17 * std::fabs(sum)) break;
        sum += (k % 2 == 0) ? term : -term;
        last = term;
    }
    return sum / (2.0 * std::sqrt(pi) * std::sqrt(std::sqrt(x)));
}

double negative_value(double z, double zeta) {
    using std::numbers::pi;
    double term = 1.0, even = 0.0, odd = 0.0, last = HUGE_VAL;
    for (int k = 0; k < 400; ++k) {
        if (k > 0) term = next_term(term, k, zeta);
        if (term > last || term < 1e-17 * (std::fabs(even) + std::fabs(odd))) break;
        const double signed_term = ((k / 2) % 2 == 0) ? term : -term;
        if (k % 2 == 0)
            even += signed_term;
        else
            odd += signed_term;
        last = term;
    }
    const double phase = zeta - pi / 4.0;
    return (std::cos(phase) * even + std::sin(phase) * odd) / (std::sqrt(pi) * std::sqrt(std::sqrt(z)));
}

} // namespace

double airy_ai_asymptotic(double x) {
    const double z = std::fabs(x);
    if (z == 0.0) throw DomainError("airy asymptotic expansion needs x != 0");
    const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
    if (x > 0) return std::exp(-zeta) * positive_reduced(z, zeta);
    return negative_value(z, zeta);
}

} // namespace detail

AiryValue airy_ai(double x) {
    if (!std::isfinite(x)) throw DomainError("airy_ai: non-finite argument");
    if (std::fabs(x) <= kAirySwitch) return {detail::airy_ai_maclaurin(x), AiryMethod::maclaurin};
    if (x > 0) return {detail::airy_ai_asymptotic(x), AiryMethod::asymptotic_positive};
    return {detail::airy_ai_asymptotic(x), AiryMethod::asymptotic_negative};
}

ScaledReal airy_ai_scaled(double x) {
    if (!std::isfinite(x)) throw DomainError("airy_ai: non-finite argument");
    if (x <= kAirySwitch) return ScaledReal(airy_ai(x).value);
    const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    return ScaledReal::from_log(-zeta) * ScaledReal(detail::positive_reduced(x, zeta));
}

} // namespace hypasym
