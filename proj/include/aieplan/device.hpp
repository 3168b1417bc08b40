// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 aieplan contributors

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "aieplan/rational.hpp"

namespace aieplan {

// One blocked matrix-multiply primitive shape offered by the vendor API.
struct MmulTile {
    int m{};
    int k{};
    int n{};

    int elems() const { return m * k * n; }
    bool divides(int M, int K, int N) const { return M % m == 0 && K % k == 0 && N % n == 0; }
    std::string str() const;
    bool operator==(const MmulTile&) const = default;
};

struct PrecisionSpec {
    std::string name;        // "int8-int32", "int8-int16", "int8-int8", "bf16-bf16"
    int input_bytes{};       // sizeof one A/B element
    int output_bytes{};      // sizeof one C element
    int peak_macs{};         // MACs per core cycle at this input precision
    int accumulator_bits{32};
    std::vector<MmulTile> mmul_catalog;

    void validate() const;
};

// Parameterized target array. Defaults describe the VE2802 part; other AIE2
// grids are loaded from a profile file instead of being compiled in.
struct DeviceSpec {
    std::string name{"ve2802"};
    int rows{8};
    int cols{38};
    int aie_count{304};
    int plio_in{112};
    int plio_out{84};
    int plio_width_bits{128};
    int pl_freq{300};    // MHz
    int aie_freq{1250};  // MHz
    int aie_mem_bytes{65536};
    int banks_per_aie{4};
    int bank_bytes{16384};
    int cascade_width_bits{512};
    // Congestion proxy: vertical stream endpoints tolerated per column lane.
    // Calibrated between the staggered (20) and aligned (24) full-array peaks.
    int vertical_channel_capacity{22};
    std::vector<PrecisionSpec> precisions;

    void validate() const;  // throws ValidationError naming the bad field
    const PrecisionSpec& precision(std::string_view precision_name) const;

    static DeviceSpec ve2802();
};

enum class BandwidthModel {
    // PLIO bytes per *core* cycle: (plio_width/8) * pl_freq / aie_freq.
    FrequencyScaled,
    // Literal plio_width/8, ignoring the clock-domain crossing. Kept as a
    // comparison mode; it overstates stream bandwidth by aie_freq/pl_freq.
    RawPlioWidth,
};

// Bytes one PLIO stream moves per AIE clock cycle, exact. 3.84 for the
// default device under the frequency-scaled model.
Ratio effective_stream_bytes_per_aie_cycle(const DeviceSpec& dev,
                                           BandwidthModel model = BandwidthModel::FrequencyScaled);

DeviceSpec load_device(const std::filesystem::path& path);
DeviceSpec parse_device(const std::string& json_text);
std::string device_to_json(const DeviceSpec& dev);

// The bundled ve2802 profile as shipped in data/ve2802.json.
std::string builtin_device_json();

}  // namespace aieplan
