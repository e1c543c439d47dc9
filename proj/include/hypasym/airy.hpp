#pragma once

#include "hypasym/scaled.hpp"

namespace hypasym {

enum class AiryMethod { maclaurin, asymptotic_positive, asymptotic_negative };

const char* to_string(AiryMethod m);

struct AiryValue {
    double value = 0.0;
    AiryMethod method = AiryMethod::maclaurin;
};

// |x| at and below which the Maclaurin series (summed at extended precision)
// is used; beyond it the large-argument expansions with optimal truncation.
inline constexpr double kAirySwitch = 7.0;

// Airy function Ai(x) for real x.
AiryValue airy_ai(double x);

// Same value in scaled form; stays representable for large positive x where
// Ai(x) ~ e^{-(2/3) x^{3/2}} underflows a double.
ScaledReal airy_ai_scaled(double x);

namespace detail {
// Forces one evaluation path; used by the overlap tests.
double airy_ai_maclaurin(double x);
double airy_ai_asymptotic(double x);
} // namespace detail

} // namespace hypasym
