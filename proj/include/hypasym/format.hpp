#pragma once

#include "hypasym/scaled.hpp"

#include <string>

namespace hypasym {

// Scientific notation with `digits` significant digits, e.g. -6.008705138e-16.
// Values outside the double range are formatted from the scaled exponent.
std::string format_sci(const ScaledReal& v, int digits = 10);
std::string format_sci(double v, int digits = 10);

// Shortest lossless form for CSV (17 significant digits).
std::string format_csv(double v);

// "re + im i" / "re - |im| i" with `digits` significant digits.
std::string format_complex(const ScaledComplex& z, int digits = 10);

} // namespace hypasym
