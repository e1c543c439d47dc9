#pragma once

namespace hypasym {

// 3 (p - atan p) / p^3, equal to 1 at p = 0. Series below p = 0.1.
double atan_cubic_ratio(double p);

// 3 (atanh q - q) / q^3 for 0 <= q < 1, equal to 1 at q = 0. Series below q = 0.1.
double atanh_cubic_ratio(double q);

} // namespace hypasym
