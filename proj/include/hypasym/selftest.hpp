#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hypasym {

struct SelftestGroup {
    std::string name;
    bool passed = false;
    std::string detail; // worst measured value against its threshold
    double seconds = 0.0;
};

struct SelftestOptions {
    int oracle_digits = 60;
    // Name of a group whose reference constant is deliberately perturbed,
    // so that harnesses can check that a failure is detected and reported.
    std::string corrupt_group;
};

// wronskian, ode_residual, zeta_residuals, realness, airy_overlap, tables
const std::vector<std::string>& selftest_group_names();

// Runs every group in order. When `progress` is set, one line per group is
// written to it as soon as the group finishes.
std::vector<SelftestGroup> run_selftest(const SelftestOptions& opts, std::ostream* progress = nullptr);

} // namespace hypasym
