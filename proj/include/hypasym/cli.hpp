#pragma once

#include "hypasym/approx.hpp"

#include <optional>
#include <ostream>
#include <string>

namespace hypasym {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int selftest_failed = 1;
inline constexpr int usage = 2;
inline constexpr int numerical = 3;
} // namespace exit_code

enum class Command { eval, table, sweep, selftest };
enum class OutputFormat { text, csv };

inline constexpr int kDefaultOracleDigits = 60;

struct RunConfig {
    Command command = Command::eval;
    double r = 100.0;
    double alpha = 0.1;
    double y = 0.5;
    Method method = Method::automatic;
    PrefactorMode prefactor = PrefactorMode::exact_gamma;
    double delta = kDefaultDelta;
    int digits = kDefaultOracleDigits;
    OutputFormat output = OutputFormat::text;

    bool compare_oracle = false; // eval
    int table_case = 1;          // table
    double y_min = 0.0, y_max = 0.0; // sweep
    int steps = 0;
    bool with_envelope = false;
    std::string corrupt_group;   // selftest fault injection
};

// Oracle precision from HYPASYM_DIGITS, or the built-in default when unset.
// Throws ConfigError when the variable is not an integer >= 50.
int default_oracle_digits();

void cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
void cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
void cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
// Returns true when every group passes.
bool cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

// Dispatches cfg.command and maps library errors onto exit codes: domain and
// configuration errors give 2, numerical failures 3, a failed selftest 1.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

} // namespace hypasym
