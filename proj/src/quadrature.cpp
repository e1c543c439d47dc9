#include "hypasym/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hypasym {

namespace {

// Beyond |t| = 4 the weights fall below 1e-40 relative to the centre.
constexpr double kTMax = 4.0;

// Adds the nodes t = j h, j odd (or all j at level 0), for the given level.
// Returns the weighted sum over those nodes (without the factor h).
double level_sum(const std::function<double(double)>& f, double mid, double half, double h, bool all) {
    using std::numbers::pi;
    double sum = 0.0;
    const int jmax = static_cast<int>(std::ceil(kTMax / h));
    for (int j = 1; j <= jmax; j += all ? 1 : 2) {
        const double t = j * h;
        const double s = 0.5 * pi * std::sinh(t);
        const double cs = std::cosh(s);
        const double w = 0.5 * pi * std::cosh(t) / (cs * cs);
        if (w == 0.0) break;
        // distance from the endpoint: half * (1 - tanh s), without cancellation
        const double d = half * 2.0 / (std::exp(2.0 * s) + 1.0);
        if (d == 0.0) break;
        const double hi = mid + half - d;
        const double lo = mid - half + d;
        // a node that rounds onto an endpoint carries negligible weight
        if (hi != mid + half) sum += w * f(hi);
        if (lo != mid - half) sum += w * f(lo);
    }
    return sum;
}

} // namespace

QuadResult tanh_sinh(const std::function<double(double)>& f, double a, double b, double rel_tol,
                     double abs_tol, int max_level) {
    using std::numbers::pi;
    if (a == b) return {};
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double h = 1.0;
    double sum = 0.5 * pi * f(mid) + level_sum(f, mid, half, h, true);
    double estimate = half * h * sum;
    QuadResult res{estimate, std::fabs(estimate), 0};
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        sum += level_sum(f, mid, half, h, false);
        const double next = half * h * sum;
        res.error_estimate = std::fabs(next - estimate);
        res.value = next;
        res.levels = level;
        estimate = next;
        if (level >= 3 && res.error_estimate <= std::max(rel_tol * std::fabs(next), abs_tol)) break;
    }
    return res;
}

QuadResult tanh_sinh_panels(const std::function<double(double)>& f, double a, double b, int panels,
                            double rel_tol, double abs_tol, int max_level) {
    panels = std::max(panels, 1);
    QuadResult total;
    const double w = (b - a) / panels;
    for (int i = 0; i < panels; ++i) {
        const double lo = a + i * w;
        const double hi = (i + 1 == panels) ? b : lo + w;
        const QuadResult q = tanh_sinh(f, lo, hi, rel_tol, abs_tol, max_level);
        total.value += q.value;
        total.error_estimate += q.error_estimate;
        total.levels = std::max(total.levels, q.levels);
    }
    return total;
}

} // namespace hypasym
