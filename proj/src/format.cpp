#include "hypasym/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace hypasym {

std::string format_sci(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, v);
    return buf;
}

std::string format_sci(const ScaledReal& v, int digits) {
    if (v.is_zero()) return format_sci(0.0, digits);
    const double d = v.to_double();
    if (std::isfinite(d) && std::fabs(d) >= std::numeric_limits<double>::min()) return format_sci(d, digits);

    const double l10 = v.log_abs() / std::log(10.0);
    double e10 = std::floor(l10);
    double mant = std::pow(10.0, l10 - e10);
    // rounding may carry the mantissa to 10
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits - 1, mant);
    if (std::atof(buf) >= 10.0) {
        mant /= 10.0;
        e10 += 1.0;
        std::snprintf(buf, sizeof buf, "%.*f", digits - 1, mant);
    }
    char out[96];
    std::snprintf(out, sizeof out, "%s%se%+03lld", v.sign() < 0 ? "-" : "", buf, static_cast<long long>(e10));
    return out;
}

std::string format_csv(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_complex(const ScaledComplex& z, int digits) {
    const ScaledReal im = z.im();
    std::string s = format_sci(z.re(), digits);
    s += im.sign() < 0 ? " - " : " + ";
    s += format_sci(im.abs(), digits);
    s += "i";
    return s;
}

} // namespace hypasym
