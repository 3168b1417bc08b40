// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 aieplan contributors

#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace aieplan {

// Exact rational cycle counts. The stream rate of a 128-bit PLIO clocked at
// 300 MHz against a 1.25 GHz core is 96/25 bytes per core cycle; keeping the
// ratio exact avoids drift when comparing compute/communication ratios.
using Ratio = boost::rational<std::int64_t>;

inline double to_double(const Ratio& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::int64_t ceil_to_int(const Ratio& r) {
    const auto n = r.numerator();
    const auto d = r.denominator();  // boost keeps d > 0
    return n >= 0 ? (n + d - 1) / d : n / d;
}

inline bool is_integer(const Ratio& r) { return r.denominator() == 1; }

// Fixed-point decimal rendering, exact for terminating expansions (all the
// denominators in this model divide a power of 10 after reduction by 96/25).
std::string format_ratio(const Ratio& r, int decimals);

}  // namespace aieplan
