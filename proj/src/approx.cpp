#include "hypasym/approx.hpp"

#include "hypasym/airy.hpp"
#include "hypasym/bessel.hpp"
#include "hypasym/bigfloat.hpp"
#include "hypasym/errors.hpp"
#include "hypasym/gamma.hpp"
#include "hypasym/oracle.hpp"

#include <cmath>
#include <numbers>

namespace hypasym {

using std::numbers::pi;

const char* to_string(Method m) {
    switch (m) {
    case Method::automatic: return "auto";
    case Method::cor1: return "cor1";
    case Method::cor2: return "cor2";
    case Method::cor3: return "cor3";
    case Method::bessel: return "bessel";
    case Method::oracle: return "oracle";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view s) {
    for (Method m : {Method::automatic, Method::cor1, Method::cor2, Method::cor3, Method::bessel, Method::oracle})
        if (s == to_string(m)) return m;
    return std::nullopt;
}

const char* to_string(PrefactorMode m) {
    return m == PrefactorMode::exact_gamma ? "exact-gamma" : "stirling-leading";
}

namespace {

constexpr double kLeadingTurningGuard = 1e-6;

double turning_offset(const Params& p) { return p.y - (1.0 - p.alpha * p.alpha); }

void require_below(const Params& p, const char* what) {
    if (!(turning_offset(p) < 0.0))
        throw DomainError(std::string(what) + " requires y < 1 - alpha^2 (regime: " +
                          to_string(classify_regime(p.r, p.alpha, p.y, p.delta)) + ")");
}

void require_above(const Params& p, const char* what) {
    if (!(turning_offset(p) > 0.0))
        throw DomainError(std::string(what) + " requires y > 1 - alpha^2 (regime: " +
                          to_string(classify_regime(p.r, p.alpha, p.y, p.delta)) + ")");
}

} // namespace

ScaledComplex theorem_leading_2f1(const Params& p) {
    validate(p);
    const double w = turning_offset(p);
    if (std::fabs(w) < kLeadingTurningGuard)
        throw DomainError("Bessel leading form is not evaluated within 1e-6 of the turning point");
    const ZetaPoint zp = zeta_for_y(p.alpha, p.y);
    const double a2 = p.alpha * p.alpha;
    const double zeta = zp.zeta;

    // (zeta - alpha^2) and (1 - alpha^2 - y) change sign together.
    const double ratio = (zeta - a2) / (-w);
    const double Q = (1.0 - a2) * ratio * p.r * p.r / (zeta * zeta);

    const double nu = 2.0 * p.r * p.alpha;
    const double x = 2.0 * p.r * std::sqrt(zeta);
    const BesselPair bp = bessel_pair(nu, x);
    const ScaledReal sz(std::sqrt(zeta));
    const ScaledReal bracket = ScaledReal::from_log(pi * p.r) * ScaledReal(2.0) * sz * bp.k +
                               ScaledReal::from_log(-pi * p.r + 2.0 * pi * p.r * p.alpha) * sz * bp.i_tilde;

    const double logmag = 0.25 * std::log(Q) - std::log(2.0 * std::sqrt(pi));
    const double phase = p.r * p.alpha * std::log1p(-p.y);
    return ScaledComplex::polar_log(logmag, phase) * bracket;
}

ScaledReal cor1_envelope(const Params& p) {
    validate(p);
    require_below(p, "the exponential envelope");
    const double a = a0(p.alpha, p.y);
    return ScaledReal::from_log(-pi * p.r * p.alpha - 2.0 * p.r * a - 0.5 * std::log(p.r) -
                                0.25 * std::log(-turning_offset(p)));
}

ScaledComplex cor2_f2(const Params& p) {
    validate(p);
    require_above(p, "the cosine form");
    const double a = a1(p.alpha, p.y);
    const double logmag = std::log(2.0 * std::sqrt(pi)) - pi * p.r * p.alpha - 0.5 * std::log(p.r) -
                          0.25 * std::log(turning_offset(p));
    return ScaledComplex::polar_log(logmag, p.r * l2_phase(p.r, p.alpha, p.y)) *
           ScaledReal(std::cos(2.0 * p.r * a - pi / 4.0));
}

ScaledComplex cor3_f2(const Params& p) {
    validate(p);
    const double nu = 2.0 * p.r * p.alpha;
    const double zh = zeta_hat(p.alpha, p.y);
    const double ratio = zeta_hat_ratio(p.alpha, p.y);
    const double logmag = 1.5 * std::log(2.0) + std::log(pi) - pi * p.r * p.alpha - std::log(nu) / 3.0 +
                          0.25 * std::log(ratio);
    const ScaledReal ai = airy_ai_scaled(-std::cbrt(nu * nu) * zh);
    return ScaledComplex::polar_log(logmag, p.r * l2_phase(p.r, p.alpha, p.y)) * ai;
}

ApproxResult evaluate(const Params& p, Method method, const ApproxOptions& opts) {
    validate(p);
    ApproxResult res;
    res.regime = classify_regime(p.r, p.alpha, p.y, p.delta);
    res.zeta_point = zeta_for_y(p.alpha, p.y);
    res.method = method;
    if (auto w = regime_warning(p)) res.warnings.push_back(*w);

    auto zone_warning = [&](Regime wanted) {
        if (res.regime != wanted)
            res.warnings.push_back(std::string("point lies in the ") + to_string(res.regime) +
                                   " zone; the formula is stated for the " + to_string(wanted) + " regime");
    };

    switch (method) {
    case Method::automatic:
        res.method = Method::cor3;
        res.value = cor3_f2(p);
        if (res.regime == Regime::monotonic) res.envelope = cor1_envelope(p);
        if (res.regime == Regime::oscillatory) res.cor2 = cor2_f2(p);
        break;
    case Method::cor1:
        res.envelope = cor1_envelope(p);
        res.value = ScaledComplex(*res.envelope);
        zone_warning(Regime::monotonic);
        break;
    case Method::cor2:
        res.value = cor2_f2(p);
        zone_warning(Regime::oscillatory);
        break;
    case Method::cor3:
        res.value = cor3_f2(p);
        break;
    case Method::bessel: {
        res.prefactor_mode = opts.prefactor;
        const ScaledComplex pre = opts.prefactor == PrefactorMode::exact_gamma
                                      ? gamma_prefactor(p.r, p.alpha)
                                      : stirling_prefactor_leading(p.r, p.alpha);
        res.value = theorem_leading_2f1(p) * pre;
        break;
    }
    case Method::oracle: {
        const OracleValue o = f2_oracle(p, big_eval_context(opts.oracle_digits));
        res.value = to_scaled(o.value);
        break;
    }
    }
    return res;
}

} // namespace hypasym
