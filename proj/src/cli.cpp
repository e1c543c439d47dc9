#include "hypasym/cli.hpp"

#include "hypasym/bigfloat.hpp"
#include "hypasym/errors.hpp"
#include "hypasym/format.hpp"
#include "hypasym/oracle.hpp"
#include "hypasym/selftest.hpp"
#include "hypasym/table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <sstream>

namespace hypasym {

namespace {

Params params_of(const RunConfig& cfg) {
    Params p{cfg.r, cfg.alpha, cfg.y, cfg.delta};
    validate(p);
    return p;
}

void print_warnings(const std::vector<std::string>& ws, std::ostream& diag) {
    for (const auto& w : ws) diag << "warning: " << w << '\n';
}

double rel_error(const ScaledComplex& approx, const ScaledComplex& exact) {
    return ((approx - exact).abs() / exact.abs()).to_double();
}

std::string g10(double v) {
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
}

double log10_abs(const ScaledComplex& z) { return z.log_abs() / std::log(10.0); }

} // namespace

int default_oracle_digits() {
    const char* env = std::getenv("HYPASYM_DIGITS");
    if (!env || !*env) return kDefaultOracleDigits;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < kMinBigDigits || v > kOracleMaxDigits)
        throw ConfigError(std::string("HYPASYM_DIGITS must be an integer in [") + std::to_string(kMinBigDigits) +
                          ", " + std::to_string(kOracleMaxDigits) + "], got '" + env + "'");
    return static_cast<int>(v);
}

void cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
    const Params p = params_of(cfg);
    const ApproxResult res = evaluate(p, cfg.method, ApproxOptions{cfg.prefactor, cfg.digits});
    print_warnings(res.warnings, diag);

    std::optional<ScaledComplex> oracle;
    if (cfg.compare_oracle) oracle = to_scaled(f2_oracle(p, big_eval_context(cfg.digits)).value);
    const ZetaPoint& zp = res.zeta_point;

    if (cfg.output == OutputFormat::csv) {
        out << "method,regime,re,im,zeta,zeta_hat,a_value,map_residual";
        if (oracle) out << ",oracle_re,oracle_im,rel_error";
        out << '\n';
        out << to_string(res.method) << ',' << to_string(res.regime) << ',' << format_csv(res.value.re().to_double())
            << ',' << format_csv(res.value.im().to_double()) << ',' << format_csv(zp.zeta) << ','
            << format_csv(zp.zeta_hat) << ',' << format_csv(zp.a_value) << ',' << format_csv(zp.residual);
        if (oracle)
            out << ',' << format_csv(oracle->re().to_double()) << ',' << format_csv(oracle->im().to_double()) << ','
                << format_csv(rel_error(res.value, *oracle));
        out << '\n';
        return;
    }

    if (res.method == Method::cor1)
        out << "cor1_bound   " << format_sci(*res.envelope) << '\n';
    else
        out << "F2           " << format_complex(res.value) << '\n';
    out << "method       " << to_string(res.method);
    if (res.method == Method::bessel) out << " (" << to_string(res.prefactor_mode) << ")";
    out << '\n';
    out << "regime       " << to_string(res.regime) << '\n';
    out << "zeta         " << format_sci(zp.zeta) << '\n';
    out << "zeta_hat     " << format_sci(zp.zeta_hat) << '\n';
    out << (zp.regime == Regime::oscillatory ? "a1           " : "a0           ") << format_sci(zp.a_value) << '\n';
    out << "map_residual " << format_sci(zp.residual, 3) << '\n';
    if (res.envelope && res.method != Method::cor1) out << "cor1_bound   " << format_sci(*res.envelope) << '\n';
    if (res.cor2) out << "cor2         " << format_complex(*res.cor2) << '\n';
    if (oracle) {
        out << "oracle       " << format_complex(*oracle) << '\n';
        out << "rel_error    " << g10(rel_error(res.value, *oracle)) << '\n';
    }
}

void cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
    const TableReport rep = reproduce_table(cfg.table_case, cfg.digits);
    print_warnings(rep.warnings, diag);
    const ReferenceCase& ref = *rep.ref;

    if (cfg.output == OutputFormat::csv) {
        out << "quantity,re,im,rel_error\n";
        for (const TableRow& row : rep.rows) {
            const std::complex<double> v = row.value.to_complex();
            out << row.quantity << ',' << format_csv(v.real()) << ',' << format_csv(v.imag()) << ','
                << (row.rel_error ? format_csv(*row.rel_error) : std::string()) << '\n';
        }
        return;
    }

    out << "case " << ref.id << ": r = " << g10(ref.r) << ", alpha = " << g10(ref.alpha) << ", y = " << g10(ref.y)
        << '\n';
    out << std::left << std::setw(10) << "quantity" << std::setw(18) << "re" << std::setw(18) << "im"
        << "rel_error\n";
    for (const TableRow& row : rep.rows) {
        out << std::setw(10) << row.quantity << std::setw(18) << format_sci(row.value.re()) << std::setw(18)
            << format_sci(row.value.im()) << (row.rel_error ? g10(*row.rel_error) : std::string()) << '\n';
    }
    out << std::right;
}

void cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
    if (!(cfg.y_min > 0.0 && cfg.y_min < cfg.y_max && cfg.y_max < 1.0))
        throw DomainError("sweep requires 0 < y-min < y-max < 1");
    if (cfg.steps < 2) throw DomainError("sweep requires at least 2 steps");
    Params base{cfg.r, cfg.alpha, cfg.y_min, cfg.delta};
    validate(base);

    out << "y,regime,zeta,zeta_hat,log10_abs_f2,phase,method";
    if (cfg.with_envelope) out << ",log10_cor1_envelope";
    out << '\n';

    std::vector<std::string> seen;
    for (int i = 0; i < cfg.steps; ++i) {
        Params p = base;
        p.y = i + 1 == cfg.steps ? cfg.y_max : cfg.y_min + (cfg.y_max - cfg.y_min) * i / (cfg.steps - 1);
        const ApproxResult res = evaluate(p, cfg.method, ApproxOptions{cfg.prefactor, cfg.digits});
        for (const auto& w : res.warnings)
            if (std::find(seen.begin(), seen.end(), w) == seen.end()) seen.push_back(w);

        out << format_csv(p.y) << ',' << to_string(res.regime) << ',' << format_csv(res.zeta_point.zeta) << ','
            << format_csv(res.zeta_point.zeta_hat) << ',' << format_csv(log10_abs(res.value)) << ','
            << format_csv(res.value.is_zero() ? 0.0 : res.value.arg()) << ',' << to_string(res.method);
        if (cfg.with_envelope) {
            out << ',';
            if (p.y < 1.0 - p.alpha * p.alpha) out << format_csv(cor1_envelope(p).log_abs() / std::log(10.0));
        }
        out << '\n';
    }
    print_warnings(seen, diag);
}

bool cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const auto groups = run_selftest(SelftestOptions{cfg.digits, cfg.corrupt_group}, &out);
    int failed = 0;
    for (const auto& g : groups) failed += !g.passed;
    if (failed == 0) {
        out << "selftest: all " << groups.size() << " groups passed\n";
        return true;
    }
    out << "selftest: " << failed << " of " << groups.size() << " groups failed:";
    for (const auto& g : groups)
        if (!g.passed) out << ' ' << g.name;
    out << '\n';
    return false;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
    try {
        switch (cfg.command) {
        case Command::eval: cmd_eval(cfg, out, diag); break;
        case Command::table: cmd_table(cfg, out, diag); break;
        case Command::sweep: cmd_sweep(cfg, out, diag); break;
        case Command::selftest:
            return cmd_selftest(cfg, out, diag) ? exit_code::ok : exit_code::selftest_failed;
        }
        return exit_code::ok;
    } catch (const ResourceError& e) {
        diag << "numerical error: " << e.what() << " (about " << e.required_digits() << " digits required)\n";
        return exit_code::numerical;
    } catch (const NumericalError& e) {
        diag << "numerical error: " << e.what() << '\n';
        return exit_code::numerical;
    } catch (const DomainError& e) {
        diag << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const ConfigError& e) {
        diag << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::exception& e) {
        diag << "numerical error: " << e.what() << '\n';
        return exit_code::numerical;
    }
}

} // namespace hypasym
