// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 aieplan contributors

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aieplan/array_mapper.hpp"
#include "aieplan/buffer_alloc.hpp"
#include "aieplan/kernel_dse.hpp"
#include "aieplan/pack_planner.hpp"
#include "aieplan/perf_model.hpp"

namespace aieplan {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kPlanSchema = "aieplan-plan/1";

struct PlanOptions {
    std::string precision;
    std::optional<GemmDims> dims_override;  // skip the search, evaluate these dims
    std::optional<int> g;                   // pack size; default chosen by the solver
    int stagger = 2;
    KccSource kcc_source = KccSource::MeasuredInput;
    bool single_aie = false;  // stop after the single-kernel placement
    bool allow_compute_bound = false;
    BandwidthModel bandwidth = BandwidthModel::FrequencyScaled;
};

struct Provenance {
    std::string tool_version;
    std::string device_hash;  // fnv1a-64 of the device profile JSON
    std::string kcc_hash;
    std::string kcc_source;
};

struct PlanDocument {
    std::string schema;
    DeviceSpec device;
    std::string precision;
    KernelConfig kernel;
    MemoryMap kernel_map;
    std::optional<PackConfig> pack;
    std::vector<MemoryMap> pack_maps;  // per-AIE, output hosting applied
    std::optional<ArrayMapping> mapping;
    std::optional<CongestionReport> congestion;
    PerfEstimate perf;
    Provenance provenance;
};

// End-to-end pipeline: search -> place -> pack -> solve (Y,G,X) -> stagger ->
// congestion -> throughput. Infeasibility surfaces as InfeasibleError with
// the failing stage name.
PlanDocument plan(const PlanOptions& opts, const DeviceSpec& dev, const KccTable& kcc);

std::string plan_to_json(const PlanDocument& doc);        // byte-stable
PlanDocument plan_from_json(const std::string& json_text);

// Vendor-style placement constraints: a location<kernel> line per kernel and
// a two-address location<buffer> line per buffer, sorted by pack, kernel and
// allocation order. `align` rounds start addresses up (bounds re-validated).
std::string emit_constraints(const PlanDocument& doc, int align = 32);

// Parsed-back view of the constraint text, for round-trip validation.
struct ConstraintLine {
    std::string kind;  // "kernel" or "buffer"
    std::string name;
    int row{};
    int col{};
    std::vector<std::int64_t> addrs;  // empty for kernel lines
};
std::vector<ConstraintLine> parse_constraints(const std::string& text);

enum class ReportFormat { Text, Csv, Json };

std::string render_plan_report(const PlanDocument& doc, ReportFormat format);

// Reference-kernel summary across every precision in the profile (shape,
// gamma, memory use) in the layout of the device's shipped defaults.
std::string render_kernel_table(const DeviceSpec& dev, const KccTable& kcc, ReportFormat format);

// Pack-size sweep with simulated efficiency, as plot-ready CSV or text.
std::string render_pack_sweep(const DeviceSpec& dev, const KccTable& kcc,
                              const std::string& precision, double threshold,
                              ReportFormat format);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace aieplan
