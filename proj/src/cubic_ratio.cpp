#include "hypasym/cubic_ratio.hpp"

#include <cmath>

namespace hypasym {

// p - atan p = sum_{k>=1} (-1)^{k+1} p^{2k+1} / (2k+1)
double atan_cubic_ratio(double p) {
    if (std::fabs(p) >= 0.1) return 3.0 * (p - std::atan(p)) / (p * p * p);
    const double p2 = p * p;
    double sum = 0.0, pw = 1.0;
    for (int k = 1; k <= 12; ++k) {
        sum += ((k % 2) ? 1.0 : -1.0) * pw / (2 * k + 1);
        pw *= p2;
    }
    return 3.0 * sum;
}

// atanh q - q = sum_{k>=1} q^{2k+1} / (2k+1)
double atanh_cubic_ratio(double q) {
    if (std::fabs(q) >= 0.1) return 3.0 * (std::atanh(q) - q) / (q * q * q);
    const double q2 = q * q;
    double sum = 0.0, pw = 1.0;
    for (int k = 1; k <= 12; ++k) {
        sum += pw / (2 * k + 1);
        pw *= q2;
    }
    return 3.0 * sum;
}

} // namespace hypasym
