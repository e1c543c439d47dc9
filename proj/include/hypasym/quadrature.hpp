#pragma once

#include <functional>

namespace hypasym {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0; // |difference| between the last two levels
    int levels = 0;
};

// Double-exponential (tanh-sinh) quadrature on [a, b], refined level by level
// until successive estimates agree to rel_tol (or differ by less than
// abs_tol). The integrand is never evaluated at the endpoints, so integrable
// endpoint singularities are fine.
QuadResult tanh_sinh(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-15, double abs_tol = 0.0, int max_level = 12);

// Splits [a, b] into `panels` equal pieces and sums tanh_sinh over them;
// used for oscillatory integrands.
QuadResult tanh_sinh_panels(const std::function<double(double)>& f, double a, double b, int panels,
                            double rel_tol = 1e-15, double abs_tol = 0.0, int max_level = 12);

} // namespace hypasym
