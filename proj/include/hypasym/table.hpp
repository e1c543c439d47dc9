#pragma once

#include "hypasym/oracle.hpp"
#include "hypasym/reference_tables.hpp"
#include "hypasym/scaled.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypasym {

struct TableRow {
    std::string quantity;            // "F2", "cor2" or "cor3"
    ScaledComplex value;
    std::optional<double> rel_error; // |approx - F2| / |F2|; empty for the F2 row
};

// Recomputed table for one reference case: the oracle F2 followed by each
// approximation the case lists.
struct TableReport {
    const ReferenceCase* ref = nullptr;
    OracleValue oracle;
    std::vector<TableRow> rows;
    std::vector<std::string> warnings;
};

TableReport reproduce_table(int id, int oracle_digits);

} // namespace hypasym
