// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 aieplan contributors

#pragma once

#include <string>
#include <vector>

#include "aieplan/kernel_dse.hpp"

namespace aieplan {

// Position of a kernel inside a cascade chain. Head reads two streams and
// pushes partial sums; middles pass them along; the tail produces C.
enum class KernelRole { Head, Middle, Tail };

enum class PartialSumTransport { Cascade, ViaSwitch, NeighborBuffer };

// A horizontal chain of G kernels jointly computing one (M, G*K, N) GEMM with
// the K reduction carried over the cascade.
struct PackConfig {
    int g{};
    std::vector<KernelRole> roles;  // [Head, Middle*(G-2), Tail]
    GemmDims kernel_dims;
    GemmDims pack_dims;       // (M, G*K, N)
    int plio_in_per_pack{};   // 2*G
    int plio_out_per_pack{};  // 1 — only the pack's output host writes back
    int output_host_index{};  // G-2: the tail's C buffers and write port live here
    int cascade_links{};      // G-1 directed links i -> i+1
    PartialSumTransport transport{PartialSumTransport::Cascade};
};

// Via-switch and neighbor-buffer transports exist in the type system but are
// rejected here: the 512-bit cascade is the only transport the planner emits.
PackConfig build_pack(const KernelConfig& kernel, int g, const DeviceSpec& dev,
                      PartialSumTransport transport = PartialSumTransport::Cascade);

enum class PlioBound { Input, Output, None };

struct ScalabilityRecord {
    int g{};
    int max_aies{};
    int y{};  // replication keeps the full column height (y = device rows)
    int x{};
    int plio_in_used{};
    int plio_out_used{};
    bool scalable{};
    PlioBound bound{PlioBound::None};
};

// For each pack size, the widest full-height replication that respects the
// PLIO and geometry budgets. `bound` reports which PLIO budget clips the
// unconstrained (y=rows, x=floor(cols/g)) point.
std::vector<ScalabilityRecord> scalability_sweep(const KernelConfig& kernel, const DeviceSpec& dev,
                                                 int g_min, int g_max, double threshold = 0.75);

std::string role_name(KernelRole role);
std::string bound_name(PlioBound bound);

}  // namespace aieplan
