#include "hypasym/cli.hpp"
#include "hypasym/errors.hpp"
#include "hypasym/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

using namespace hypasym;

int main(int argc, char** argv) {
    RunConfig cfg;
    try {
        cfg.digits = default_oracle_digits();
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code::usage;
    }

    CLI::App app{"Uniform asymptotics of F2(r, alpha, y) checked against an extended-precision series"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "Write results to this file instead of stdout");

    const std::map<std::string, Method> methods = {{"auto", Method::automatic}, {"cor1", Method::cor1},
                                                   {"cor2", Method::cor2},      {"cor3", Method::cor3},
                                                   {"bessel", Method::bessel},  {"oracle", Method::oracle}};
    const std::map<std::string, PrefactorMode> prefactors = {{"exact-gamma", PrefactorMode::exact_gamma},
                                                             {"stirling-leading", PrefactorMode::stirling_leading}};
    const std::map<std::string, OutputFormat> formats = {{"text", OutputFormat::text}, {"csv", OutputFormat::csv}};

    auto common = [&](CLI::App* sub, bool point) {
        sub->add_option("--r", cfg.r, "Large parameter r > 0")->capture_default_str();
        sub->add_option("--alpha", cfg.alpha, "alpha in (0, 1)")->capture_default_str();
        if (point) sub->add_option("--y", cfg.y, "y in (0, 1)")->capture_default_str();
        sub->add_option("--method", cfg.method, "auto, cor1, cor2, cor3, bessel or oracle")
            ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
        sub->add_option("--prefactor", cfg.prefactor, "Gamma prefactor for --method bessel")
            ->transform(CLI::CheckedTransformer(prefactors, CLI::ignore_case));
        sub->add_option("--delta", cfg.delta, "Turning-zone exponent delta")->capture_default_str();
    };
    auto digits = [&](CLI::App* sub) {
        sub->add_option("--digits", cfg.digits, "Oracle precision in decimal digits (env HYPASYM_DIGITS)")
            ->capture_default_str();
    };
    auto format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.output, "text or csv")->transform(CLI::CheckedTransformer(formats));
    };

    CLI::App* eval = app.add_subcommand("eval", "Evaluate F2 at one point");
    common(eval, true);
    digits(eval);
    format(eval);
    eval->add_flag("--compare-oracle", cfg.compare_oracle, "Also evaluate the series oracle and the relative error");
    eval->callback([&] { cfg.command = Command::eval; });

    CLI::App* table = app.add_subcommand("table", "Recompute one of the six reference cases");
    table->add_option("case", cfg.table_case, "Case number 1..6")->required()->check(CLI::Range(1, 6));
    digits(table);
    format(table);
    table->callback([&] { cfg.command = Command::table; });

    CLI::App* sweep = app.add_subcommand("sweep", "CSV profile of F2 over a y grid");
    common(sweep, false);
    digits(sweep);
    sweep->add_option("--y-min", cfg.y_min, "Lower end of the y grid")->required();
    sweep->add_option("--y-max", cfg.y_max, "Upper end of the y grid")->required();
    sweep->add_option("--steps", cfg.steps, "Number of grid points")->required();
    sweep->add_flag("--with-envelope", cfg.with_envelope, "Append the cor1 envelope below the turning point");
    sweep->callback([&] { cfg.command = Command::sweep; });

    CLI::App* selftest = app.add_subcommand("selftest", "Run the invariant battery");
    digits(selftest);
    selftest->add_option("--inject-fault", cfg.corrupt_group, "Perturb the reference constant of one group")
        ->check(CLI::IsMember(selftest_group_names()));
    selftest->callback([&] { cfg.command = Command::selftest; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_code::ok : exit_code::usage;
    }

    if (out_path.empty()) return run(cfg, std::cout, std::cerr);
    std::ofstream file(out_path);
    if (!file) {
        std::cerr << "error: cannot open " << out_path << '\n';
        return exit_code::usage;
    }
    return run(cfg, file, std::cerr);
}
