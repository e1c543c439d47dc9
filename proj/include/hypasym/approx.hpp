#pragma once

#include "hypasym/scaled.hpp"
#include "hypasym/zeta_map.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hypasym {

enum class Method { automatic, cor1, cor2, cor3, bessel, oracle };

const char* to_string(Method m);
// Accepts "auto", "cor1", "cor2", "cor3", "bessel", "oracle".
std::optional<Method> parse_method(std::string_view s);

enum class PrefactorMode { exact_gamma, stirling_leading };

const char* to_string(PrefactorMode m);

struct ApproxOptions {
    PrefactorMode prefactor = PrefactorMode::exact_gamma; // used by Method::bessel
    int oracle_digits = 60;
};

struct ApproxResult {
    ScaledComplex value;            // F2 estimate (the envelope itself for cor1)
    std::optional<ScaledReal> envelope; // cor1 envelope, when defined at this point
    std::optional<ScaledComplex> cor2;  // cosine form, attached in the oscillatory regime
    Method method = Method::cor3;
    Regime regime = Regime::turning;
    ZetaPoint zeta_point;
    PrefactorMode prefactor_mode = PrefactorMode::exact_gamma;
    std::vector<std::string> warnings;
};

// Leading order of the uniform Bessel expansion of 2F1 (not F2):
//   (1-y)^{i r alpha} / (2 sqrt(pi)) ((1-alpha^2)(zeta-alpha^2) r^2 / (zeta^2 (1-alpha^2-y)))^{1/4}
//   * [2 e^{pi r} sqrt(zeta) K_{2 r alpha}(2 r sqrt(zeta))
//      + e^{-pi r + 2 pi r alpha} sqrt(zeta) I~_{2 r alpha}(2 r sqrt(zeta))]
// Throws DomainError within 1e-6 of the turning point.
ScaledComplex theorem_leading_2f1(const Params& p);

// e^{-pi r alpha} e^{-2 r a0} / (sqrt(r) (1-alpha^2-y)^{1/4}), an upper
// envelope for |F2| below the turning point.
ScaledReal cor1_envelope(const Params& p);

// 2 sqrt(pi) e^{i r l2} e^{-pi r alpha} cos(2 r a1 - pi/4) / (sqrt(r) (y-1+alpha^2)^{1/4}),
// above the turning point.
ScaledComplex cor2_f2(const Params& p);

// e^{i r l2} 2^{3/2} pi e^{-pi r alpha} (2 r alpha)^{-1/3}
//   * (alpha^2 zeta_hat / (y-1+alpha^2))^{1/4} Ai(-(2 r alpha)^{2/3} zeta_hat),
// uniform through the turning point.
ScaledComplex cor3_f2(const Params& p);

// Dispatcher. Automatic mode returns the Airy form everywhere, with the cor1
// envelope attached in the monotonic regime and the cosine form in the
// oscillatory regime. cor1 and cor2 throw DomainError on the wrong side of
// the turning point and warn when inside the turning zone.
ApproxResult evaluate(const Params& p, Method method, const ApproxOptions& opts = {});

} // namespace hypasym
