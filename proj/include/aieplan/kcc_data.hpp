// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 aieplan contributors

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "aieplan/device.hpp"

namespace aieplan {

struct GemmDims {
    int M{};
    int K{};
    int N{};
    bool operator==(const GemmDims&) const = default;
};

// How buffers were constrained when a cycle count was measured.
enum class PlacementStrategy { Unconstrained, Location, Address };

enum class KccLevel { Kernel, Pack };

// One externally measured kernel-compute-cycles figure. The toolchain never
// re-derives these; it consumes them (throughput estimation, tile selection)
// or approximates them with the micro-simulator.
struct KccEntry {
    KccLevel level{KccLevel::Kernel};
    std::string precision;
    GemmDims dims;  // kernel dims for Kernel level, whole-pack dims for Pack level
    int pack_size{1};
    MmulTile tile;
    PlacementStrategy placement{PlacementStrategy::Address};
    std::int64_t cycles{};
    std::string provenance;
};

struct KccTable {
    std::vector<KccEntry> entries;

    std::optional<KccEntry> lookup(KccLevel level, std::string_view precision, GemmDims dims,
                                   PlacementStrategy placement) const;
    // Best (lowest-cycle) measurement for a kernel shape and tile, any strategy.
    std::optional<std::int64_t> best_kernel_cycles(std::string_view precision, GemmDims dims,
                                                   const MmulTile& tile) const;
};

KccTable parse_kcc_table(const std::string& json_text);
KccTable load_kcc_table(const std::filesystem::path& path);

// Bundled measurements shipped in data/paper_kcc.json.
std::string builtin_kcc_json();
const KccTable& builtin_kcc_table();

std::string placement_strategy_name(PlacementStrategy s);

}  // namespace aieplan
