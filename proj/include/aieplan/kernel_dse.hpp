// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 aieplan contributors

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aieplan/device.hpp"
#include "aieplan/kcc_data.hpp"
#include "aieplan/rational.hpp"

namespace aieplan {

// A single-AIE GEMM candidate with its analytical cost figures.
struct KernelConfig {
    GemmDims dims;
    std::string precision;
    MmulTile tile;
    Ratio compute_cycles;
    Ratio comm_a;
    Ratio comm_b;
    Ratio comm_c;
    Ratio gamma;
    std::int64_t mem_usage{};
    bool placeable{false};

    Ratio comm_bottleneck() const;
    double mem_utilization_pct(const DeviceSpec& dev) const;
};

// Theoretical compute cycles: M*K*N / peak_macs.
Ratio compute_cycles(GemmDims dims, const PrecisionSpec& prec);

struct CommCycles {
    Ratio a;  // stream-in cycles for the A matrix
    Ratio b;  // stream-in cycles for the B matrix
    Ratio c;  // stream-out cycles for the C matrix
};

CommCycles comm_cycles(GemmDims dims, const PrecisionSpec& prec, const DeviceSpec& dev,
                       BandwidthModel model = BandwidthModel::FrequencyScaled);

// Compute-to-communication ratio. < 1 means the kernel is stream-bound,
// > 1 compute-bound.
Ratio gamma(GemmDims dims, const PrecisionSpec& prec, const DeviceSpec& dev,
            BandwidthModel model = BandwidthModel::FrequencyScaled);

// Double-buffered footprint of A, B and C: 2*(M*K*in + K*N*in + M*N*out).
std::int64_t mem_usage_bytes(GemmDims dims, const PrecisionSpec& prec);
bool fits_aie_memory(GemmDims dims, const PrecisionSpec& prec, const DeviceSpec& dev);

struct SearchBounds {
    int max_m = 256;
    int max_n = 256;
    std::optional<int> max_k;  // default: aie_mem_bytes / (2*min(M,N)*input_bytes)
    // Admit compute-bound (gamma > 1) shapes. Off by default: the selected
    // kernels keep the stream the bottleneck so compute slack can absorb
    // measured inefficiency.
    bool allow_compute_bound = false;
};

// Exhaustive search over tile-multiple (M, K, N). A candidate is feasible when
// it fits memory (with double buffering) and the bank placer accepts it.
// Ranking: gamma desc, K desc, mem_usage desc, M desc, N desc.
std::vector<KernelConfig> search_kernel_sizes(const PrecisionSpec& prec, const DeviceSpec& dev,
                                              const SearchBounds& bounds = {},
                                              const KccTable* kcc = nullptr);

// Evaluate one explicit shape (bypassing the search) into a KernelConfig.
KernelConfig evaluate_kernel(GemmDims dims, const PrecisionSpec& prec, const DeviceSpec& dev,
                             const KccTable* kcc = nullptr,
                             BandwidthModel model = BandwidthModel::FrequencyScaled);

// Tile with the lowest known measured cycles for these dims; ties broken by
// larger m*k*n, then catalog order. Without data, catalog order decides.
MmulTile select_tile(const PrecisionSpec& prec, GemmDims dims, const KccTable* kcc = nullptr);

// Candidate lattice step per dimension: every catalog tile must divide a
// candidate so the MMUL sweep stays well-defined (lcm of tile m/k/n).
struct LatticeStep {
    int m{}, k{}, n{};
};
LatticeStep search_lattice_step(const PrecisionSpec& prec);

std::string dse_csv(const std::vector<KernelConfig>& ranked, const DeviceSpec& dev);

}  // namespace aieplan
