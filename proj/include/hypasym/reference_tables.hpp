#pragma once

#include <array>
#include <complex>
#include <optional>

namespace hypasym {

// One published numerical example: parameters, the F2 value and the two
// closed-form approximations with their |relative error| columns.
struct ReferenceCell {
    std::complex<double> value;
    double rel_error = 0.0;
};

struct ReferenceCase {
    int id = 0;
    double r = 0.0;
    double alpha = 0.0;
    double y = 0.0;
    std::complex<double> f2;                 // as printed
    std::optional<std::complex<double>> f2_corrected; // set where the printed value has a typo
    std::optional<ReferenceCell> cor2;       // cosine form; absent in case 4
    ReferenceCell cor3;                      // Airy form

    std::complex<double> f2_best() const { return f2_corrected.value_or(f2); }
};

const std::array<ReferenceCase, 6>& reference_cases();

// Throws DomainError for ids outside 1..6.
const ReferenceCase& reference_case(int id);

} // namespace hypasym
