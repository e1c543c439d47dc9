#include "hypasym/approx.hpp"
#include "hypasym/bigfloat.hpp"
#include "hypasym/errors.hpp"
#include "hypasym/gamma.hpp"
#include "hypasym/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <tuple>
#include <numbers>

using namespace hypasym;
using std::numbers::pi;

namespace {

ScaledComplex oracle_f2(const Params& p) {
    static std::map<std::tuple<double, double, double>, ScaledComplex> cache;
    const auto key = std::make_tuple(p.r, p.alpha, p.y);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, to_scaled(f2_oracle(p, big_eval_context(60)).value)).first;
    return it->second;
}

double rel(const ScaledComplex& a, const ScaledComplex& b) { return ((a - b).abs() / b.abs()).to_double(); }

} // namespace

TEST_CASE("method names") {
    for (Method m : {Method::automatic, Method::cor1, Method::cor2, Method::cor3, Method::bessel, Method::oracle})
        CHECK(parse_method(to_string(m)) == m);
    CHECK_FALSE(parse_method("cor4").has_value());
    CHECK(std::string(to_string(PrefactorMode::stirling_leading)) == "stirling-leading");
}

TEST_CASE("reference relative errors") {
    const Params t1{100, 0.1, 0.9999}, t2{100, 0.1, 0.991};
    CHECK(rel(cor3_f2(t1), oracle_f2(t1)) == doctest::Approx(0.0409179003).epsilon(1e-6));
    CHECK(rel(cor2_f2(t1), oracle_f2(t1)) == doctest::Approx(0.068890994).epsilon(1e-6));
    CHECK(rel(cor2_f2(t2), oracle_f2(t2)) == doctest::Approx(0.211610836).epsilon(1e-6));
}

TEST_CASE("automatic dispatch") {
    const ApproxResult a = evaluate(Params{100, 0.1, 0.9999}, Method::automatic);
    CHECK(a.method == Method::cor3);
    CHECK(a.regime == Regime::oscillatory);
    CHECK(a.cor2.has_value());
    CHECK_FALSE(a.envelope.has_value());
    CHECK(rel(a.value, oracle_f2(Params{100, 0.1, 0.9999})) == doctest::Approx(0.0409).epsilon(1e-3));

    const ApproxResult m = evaluate(Params{100, 0.1, 0.5}, Method::automatic);
    CHECK(m.regime == Regime::monotonic);
    CHECK(m.envelope.has_value());
    CHECK_FALSE(m.cor2.has_value());

    const ApproxResult t = evaluate(Params{100, 0.1, 0.99}, Method::automatic);
    CHECK(t.regime == Regime::turning);
    CHECK(std::isfinite(t.value.log_abs()));
}

TEST_CASE("branch preconditions") {
    CHECK_THROWS_AS(evaluate(Params{100, 0.1, 0.5}, Method::cor2), DomainError);
    CHECK_THROWS_AS(cor1_envelope(Params{100, 0.1, 0.995}), DomainError);
    CHECK_THROWS_AS(theorem_leading_2f1(Params{100, 0.1, 0.99 + 5e-7}), DomainError);
    // inside the turning zone but on the right side: evaluated with a warning
    const ApproxResult w = evaluate(Params{100, 0.1, 0.991}, Method::cor2);
    CHECK_FALSE(w.warnings.empty());
}

TEST_CASE("Bessel leading form against the oracle") {
    for (double y : {0.5, 0.9, 0.97, 0.995}) {
        const Params p{100, 0.1, y};
        CAPTURE(y);
        const ApproxResult exact = evaluate(p, Method::bessel, ApproxOptions{PrefactorMode::exact_gamma});
        CHECK(rel(exact.value, oracle_f2(p)) <= 1e-2);
        const ApproxResult st = evaluate(p, Method::bessel, ApproxOptions{PrefactorMode::stirling_leading});
        CHECK(st.prefactor_mode == PrefactorMode::stirling_leading);
        CHECK(rel(st.value, exact.value) <= 0.05);
    }
}

TEST_CASE("oracle method") {
    const Params p{5, 0.3, 0.5};
    const ApproxResult o = evaluate(p, Method::oracle, ApproxOptions{PrefactorMode::exact_gamma, 50});
    CHECK(o.method == Method::oracle);
    CHECK(rel(o.value, to_scaled(f2_oracle(p, big_eval_context(50)).value)) < 1e-15);
}

TEST_CASE("cosine and Airy forms agree away from the turning point") {
    const double r = 100, alpha = 0.1, T = 1 - alpha * alpha;
    const double delta = regime_width(r, alpha, kDefaultDelta);
    for (int i = 0; i <= 8; ++i) {
        const double w = (2.0 + i) * delta;
        if (T + w >= 1.0) break;
        const Params p{r, alpha, T + w};
        const double env = 2.0 * std::sqrt(pi) * std::exp(-pi * r * alpha) / (std::sqrt(r) * std::pow(w, 0.25));
        CAPTURE(w);
        CHECK((cor2_f2(p) - cor3_f2(p)).abs().to_double() / env <= 0.3);
    }
}

TEST_CASE("Airy form improves with r") {
    const double e100 = rel(cor3_f2(Params{100, 0.1, 0.991}), oracle_f2(Params{100, 0.1, 0.991}));
    const double e200 = rel(cor3_f2(Params{200, 0.1, 0.991}), oracle_f2(Params{200, 0.1, 0.991}));
    CHECK(e200 < e100);
}

TEST_CASE("phase factor has unit modulus") {
    for (double y : {0.2, 0.9999})
        CHECK(std::fabs(ScaledComplex::polar_log(0.0, 100 * l2_phase(100, 0.1, y)).abs().to_double() - 1.0) < 1e-15);
}

TEST_CASE("leading-order estimates are nearly real after the Y transform") {
    for (auto [r, alpha, y] : {std::tuple{100.0, 0.1, 0.9999}, std::tuple{100.0, 0.1, 0.993}, std::tuple{100.0, 0.02, 0.9997},
                               std::tuple{100.0, 0.1, 0.9}}) {
        const Params p{r, alpha, y};
        const ScaledComplex f = evaluate(p, Method::automatic).value / gamma_prefactor(r, alpha);
        const ScaledComplex yv = f * ScaledComplex::polar_log(0.25 * std::log(y) + 0.5 * std::log1p(-y),
                                                              -r * alpha * std::log1p(-y));
        CAPTURE(y);
        CHECK((yv.im().abs() / yv.abs()).to_double() <= 0.2);
    }
}

TEST_CASE("envelope increases towards the turning point") {
    double prev = -INFINITY;
    for (double y = 0.05; y < 0.985; y += 0.01) {
        const double e = cor1_envelope(Params{100, 0.1, y}).log_abs();
        CHECK(std::isfinite(e));
        CHECK(e > prev);
        prev = e;
    }
}
