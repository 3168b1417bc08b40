// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 aieplan contributors

#include "aieplan/rational.hpp"

#include <cmath>
#include <cstdio>

namespace aieplan {

std::string format_ratio(const Ratio& r, int decimals) {
    // Round half away from zero at the requested precision, exactly.
    std::int64_t scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    const Ratio scaled = r * scale;
    std::int64_t units = scaled.numerator() / scaled.denominator();
    const std::int64_t rem2 = 2 * std::llabs(scaled.numerator() % scaled.denominator());
    if (rem2 >= scaled.denominator()) units += (scaled.numerator() >= 0 ? 1 : -1);

    char buf[64];
    if (decimals == 0) {
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(units));
        return buf;
    }
    const char* sign = (units < 0) ? "-" : "";
    const std::int64_t mag = std::llabs(units);
    std::snprintf(buf, sizeof(buf), "%s%lld.%0*lld", sign, static_cast<long long>(mag / scale),
                  decimals, static_cast<long long>(mag % scale));
    return buf;
}

}  // namespace aieplan
