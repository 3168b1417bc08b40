// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 aieplan contributors

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aieplan/array_mapper.hpp"
#include "aieplan/buffer_alloc.hpp"
#include "aieplan/kernel_dse.hpp"
#include "aieplan/pack_planner.hpp"

namespace aieplan {

enum class KccSource { Theoretical, MeasuredInput, Simulated };

// A kernel-compute-cycles figure with its provenance. Reports always print
// where the number came from.
struct KccRecord {
    KccSource source{KccSource::Theoretical};
    Ratio cycles;
    std::string note;
};

struct StallBreakdown {
    std::int64_t memory_stalls{};   // bank-conflict cycles charged to the core
    std::int64_t cascade_stalls{};  // producer backpressure pushing partial sums
};

struct PerfEstimate {
    Ratio kcc_effective;    // bottleneck cycles per pack iteration
    double throughput_tops{};  // tera-(b)ops/s, 2 ops per MAC
    double te_pct{};           // of whole-device peak
    double kce_pct{};          // theoretical / effective kernel cycles
    StallBreakdown stalls;
    KccSource kcc_source{KccSource::Theoretical};
    std::string kcc_note;
};

// Steady-state bottleneck model: each pack iteration costs
// max(kcc, comm_a, comm_b, comm_c) core cycles, during which the array
// completes a (Y*M) x (G*K) x (X*N) GEMM.
PerfEstimate array_throughput(const ArrayMapping& mapping, const KernelConfig& kernel,
                              const KccRecord& kcc, const DeviceSpec& dev);

// Whole-device peak in TOPS (2 ops per MAC).
double device_peak_tops(const DeviceSpec& dev, const PrecisionSpec& prec);

// Kernel compute efficiency: theoretical over measured, reported capped at 100.
double kce_percent(const Ratio& theoretical, const Ratio& measured);

struct SimOptions {
    bool dma_enabled = true;
    std::optional<std::int64_t> cascade_width_bits;  // overrides the device value
};

struct KernelSimResult {
    KccRecord kcc;  // source = Simulated
    StallBreakdown stalls;
    std::int64_t base_cycles{};  // theoretical core-busy cycles for the tile schedule
};

// Deterministic discrete-time proxy of one kernel iteration. The core issues
// an A and a B operand load each cycle plus queued C stores; DMA agents fill
// the pong inputs and drain the pong output at the PLIO stream rate. Agents
// hitting the same bank in a cycle arbitrate round-robin and the losers
// stall. Returned cycles cover the core's active window (stream wait is
// accounted at the array level, not here).
KernelSimResult simulate_kernel(const MemoryMap& map, GemmDims dims, const PrecisionSpec& prec,
                                MmulTile tile, const DeviceSpec& dev, const SimOptions& opts = {});

struct PackSimResult {
    std::vector<KernelSimResult> per_aie;
    Ratio average_kcc;
    double average_kce_pct{};
    std::int64_t cascade_stalls_total{};
};

// Extends the kernel simulation with the cascade: each forwarded partial-sum
// tile moves m*n accumulators over the channel and charges the producer
// ceil(bits/width) - 1 cycles beyond the overlapped budget. The pack's
// output host additionally absorbs the tail's store traffic and the output
// DMA drain. g = 1 degenerates to simulate_kernel.
PackSimResult simulate_pack(GemmDims kernel_dims, const PrecisionSpec& prec, MmulTile tile,
                            int g, const DeviceSpec& dev, const SimOptions& opts = {});

std::string kcc_source_name(KccSource source);

}  // namespace aieplan
