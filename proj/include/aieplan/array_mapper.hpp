// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 aieplan contributors

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aieplan/buffer_alloc.hpp"
#include "aieplan/pack_planner.hpp"

namespace aieplan {

struct KernelPlacement {
    int pack_row{};      // y index
    int pack_col{};      // x index
    int kernel_index{};  // position within the pack
    int row{};           // device grid coordinates
    int col{};
};

// One physical input PLIO reused across replicas. A-streams fan across the X
// column replicas of a pack row; B-streams fan down the Y row replicas.
struct BroadcastGroup {
    MatrixRole matrix{};
    int first_index{};   // y for A groups, g for B groups
    int second_index{};  // g for A groups, x for B groups
    std::vector<std::pair<int, int>> endpoints;  // (row, col)
};

struct OutputPort {
    int pack_row{};
    int pack_col{};
    std::pair<int, int> source;  // the pack's output-host tile
};

struct ResourceTallies {
    int aies_used{};
    int plio_in_used{};
    int plio_out_used{};
    int banks_used{};  // 8 KB bank segments claimed (8 per occupied AIE)
    double aie_util_pct{};
    double plio_in_util_pct{};
    double plio_out_util_pct{};
    double bank_util_pct{};
};

struct ArrayMapping {
    int y{};
    int g{};
    int x{};
    int stagger{0};
    std::vector<int> row_offsets;  // column offset per occupied row
    std::vector<KernelPlacement> placements;
    std::vector<BroadcastGroup> a_groups;  // Y*G of them, X endpoints each
    std::vector<BroadcastGroup> b_groups;  // G*X of them, Y endpoints each
    std::vector<OutputPort> outputs;       // Y*X
    int output_host_index{};
    ResourceTallies tallies;
};

// Aligned (stagger 0) placement of y*x packs of size g.
ArrayMapping build_mapping(const PackConfig& pack, const DeviceSpec& dev, int y, int x);

// Shift every odd row right by `stagger` columns. The first `stagger` tiles of
// those rows stay unused. Resource tallies are untouched, only coordinates
// move. Throws InfeasibleError when stagger + g*x exceeds the column count.
ArrayMapping staggered_layout(const ArrayMapping& mapping, int stagger);

struct CongestionReport {
    std::vector<int> column_demand;  // vertical stream endpoints per column
    int max_demand{};
    int capacity{};
    std::vector<int> hot_columns;  // demand above capacity
    // Host-clearance violations: output hosts of vertically adjacent rows in
    // the same or neighboring column, e.g. "rows 0/1 cols 2/3".
    std::vector<std::string> clearance_violations;
    bool pass{};
    std::string model_note;  // congestion results are model-based, not routed
};

// Per-column endpoint demand: an output-host tile terminates two input
// streams and originates the write-back (3), every other kernel terminates
// its two input streams (2). Fails when any column exceeds
// vertical_channel_capacity or the host clearance rule is violated.
CongestionReport congestion_check(const ArrayMapping& mapping, const DeviceSpec& dev);

enum class MappingObjective { MaxAies, MaxThroughput };

struct SolveOptions {
    std::optional<int> g_fixed;
    int stagger = 2;
    MappingObjective objective = MappingObjective::MaxAies;
    bool require_congestion_pass = true;
    // Scores a candidate for MaxThroughput (wired to the perf model by the
    // caller to keep this module free of a perf dependency).
    std::function<double(const ArrayMapping&)> throughput_score;
};

// Brute force over (Y, G, X) within the geometry bounds, keeping candidates
// that respect the PLIO/AIE budgets and pass the congestion check on the
// staggered layout. Ties: larger Y, then smaller G (pack efficiency drops
// with pack size), then larger X. Throws InfeasibleError("array-mapping")
// when nothing fits.
ArrayMapping solve_ygx(const KernelConfig& kernel, const DeviceSpec& dev,
                       const SolveOptions& opts = {});

std::string render_grid(const ArrayMapping& mapping, const DeviceSpec& dev);

}  // namespace aieplan
