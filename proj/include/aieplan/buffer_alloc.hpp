// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 aieplan contributors

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aieplan/device.hpp"
#include "aieplan/kcc_data.hpp"
#include "aieplan/pack_planner.hpp"

namespace aieplan {

enum class MatrixRole { A, B, C };
enum class BufferPhase { Ping, Pong };

struct BufferSpec {
    MatrixRole matrix{};
    BufferPhase phase{};
    std::int64_t size{};

    std::string label() const;  // "ping_A", "pong_C", ...
};

struct BufferPlacement {
    BufferSpec spec;
    std::int64_t start_addr{};
    std::int64_t end_addr{};  // exclusive
    int start_bank{};         // the bank the allocator assigned, not addr/bank_bytes
};

struct MemoryMap {
    std::vector<BufferPlacement> entries;  // allocation order
    std::int64_t total_used{};
    double utilization_pct{};

    const BufferPlacement* find(MatrixRole m, BufferPhase p) const;
};

// The six ping/pong buffers of one kernel, in the significant allocation
// order ping_A, pong_A, ping_B, pong_B, ping_C, pong_C. With
// include_output=false only the four input buffers are produced.
std::vector<BufferSpec> kernel_buffer_specs(GemmDims dims, const PrecisionSpec& prec,
                                            bool include_output = true);

// Bank-aware first-fit placement:
//   - A/B buffers claim an empty bank whose neighbors hold no buffer of the
//     same matrix (ping and pong never share or neighbor a bank).
//   - C buffers take the second spot of a bank already holding an input
//     buffer, under the same ping/pong separation rules.
//   - A bank's content may spill past its end; every later start address
//     shifts by the spill so ranges stay disjoint (spills can chain).
// Throws MemoryOverflowError when the sizes exceed local memory and
// PlacementError when no bank assignment works.
MemoryMap place_buffer_list(std::span<const BufferSpec> buffers, const DeviceSpec& dev);

MemoryMap place_buffers(GemmDims dims, const PrecisionSpec& prec, const DeviceSpec& dev);

// Unoptimized reference layout: buffers packed back-to-back from address 0 in
// allocation order. Emulates what an unconstrained allocator may produce;
// typically violates the separation rules. Used as a stall baseline.
MemoryMap sequential_map(GemmDims dims, const PrecisionSpec& prec, const DeviceSpec& dev);

struct RuleReport {
    bool ping_pong_bank_ok{};       // (a) same-matrix ping/pong in distinct banks
    bool ping_pong_adjacency_ok{};  // (b) ... and not in neighboring banks
    bool input_banks_disjoint_ok{}; // (c) A banks and B banks never meet
    bool ranges_disjoint_ok{};
    bool within_memory_ok{};
    std::vector<std::string> failures;

    bool all_pass() const;
};

// Placement-independent rule checker, usable as an oracle over arbitrary maps.
RuleReport validate_rules(const MemoryMap& map, const DeviceSpec& dev);

// Relocates the tail kernel's output buffers into the pack's host AIE
// (index G-2) and re-places the host with the full six-buffer algorithm.
// Input: the naive per-AIE maps (tail holding its own C); output: host with
// six buffers, everyone else with their four input buffers.
std::vector<MemoryMap> pack_output_hosting(const std::vector<MemoryMap>& naive_maps,
                                           const PackConfig& pack, const DeviceSpec& dev);

// Convenience: build the hosted per-AIE maps straight from the kernel shape.
std::vector<MemoryMap> plan_pack_memory(GemmDims dims, const PrecisionSpec& prec,
                                        const PackConfig& pack, const DeviceSpec& dev);

std::string render_memory_map(const MemoryMap& map, const DeviceSpec& dev);
std::string matrix_role_name(MatrixRole role);

}  // namespace aieplan
