// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 aieplan contributors

#include "aieplan/device.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "aieplan/errors.hpp"

namespace aieplan {

using ordered_json = nlohmann::ordered_json;

std::string MmulTile::str() const {
    return std::to_string(m) + "x" + std::to_string(k) + "x" + std::to_string(n);
}

void PrecisionSpec::validate() const {
    auto bad = [&](const std::string& field, const std::string& why) {
        throw ValidationError("precision '" + name + "': " + field + " " + why);
    };
    if (name.empty()) bad("name", "must not be empty");
    if (input_bytes != 1 && input_bytes != 2 && input_bytes != 4)
        bad("input_bytes", "must be 1, 2 or 4");
    if (output_bytes != 1 && output_bytes != 2 && output_bytes != 4)
        bad("output_bytes", "must be 1, 2 or 4");
    if (peak_macs <= 0) bad("peak_macs", "must be positive");
    if (accumulator_bits <= 0) bad("accumulator_bits", "must be positive");
    if (mmul_catalog.empty()) bad("mmul_catalog", "must not be empty");
    for (const auto& t : mmul_catalog)
        if (t.m < 1 || t.k < 1 || t.n < 1) bad("mmul_catalog", "holds a tile with m,k,n < 1");
}

void DeviceSpec::validate() const {
    auto bad = [&](const std::string& field, const std::string& why) {
        throw ValidationError("device '" + name + "': " + field + " " + why);
    };
    auto positive = [&](const char* field, long long v) {
        if (v <= 0) bad(field, "must be strictly positive");
    };
    positive("rows", rows);
    positive("cols", cols);
    positive("aie_count", aie_count);
    positive("plio_in", plio_in);
    positive("plio_out", plio_out);
    positive("plio_width_bits", plio_width_bits);
    positive("pl_freq", pl_freq);
    positive("aie_freq", aie_freq);
    positive("aie_mem_bytes", aie_mem_bytes);
    positive("banks_per_aie", banks_per_aie);
    positive("bank_bytes", bank_bytes);
    positive("cascade_width_bits", cascade_width_bits);
    positive("vertical_channel_capacity", vertical_channel_capacity);
    if (aie_count != rows * cols) bad("aie_count", "must equal rows * cols");
    if (banks_per_aie * bank_bytes != aie_mem_bytes)
        bad("bank_bytes", "banks_per_aie * bank_bytes must equal aie_mem_bytes");
    for (const auto& p : precisions) p.validate();
}

const PrecisionSpec& DeviceSpec::precision(std::string_view precision_name) const {
    for (const auto& p : precisions)
        if (p.name == precision_name) return p;
    throw ValidationError("device '" + name + "': unknown precision '" +
                          std::string(precision_name) + "'");
}

Ratio effective_stream_bytes_per_aie_cycle(const DeviceSpec& dev, BandwidthModel model) {
    const Ratio raw(dev.plio_width_bits, 8);
    if (model == BandwidthModel::RawPlioWidth) return raw;
    return raw * Ratio(dev.pl_freq, dev.aie_freq);
}

namespace {

MmulTile tile_from_json(const ordered_json& j) {
    if (!j.is_array() || j.size() != 3)
        throw ParseError("mmul_catalog entries must be 3-integer arrays");
    return MmulTile{j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

template <typename T>
void read_field(const ordered_json& j, const char* key, T& out, bool required) {
    if (j.contains(key)) {
        try {
            out = j.at(key).get<T>();
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("device field '") + key + "': " + e.what());
        }
    } else if (required) {
        throw ParseError(std::string("device profile is missing field '") + key + "'");
    }
}

}  // namespace

DeviceSpec parse_device(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("device profile: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("device profile must be a JSON object");

    DeviceSpec dev;
    dev.precisions.clear();
    read_field(j, "name", dev.name, false);
    read_field(j, "rows", dev.rows, true);
    read_field(j, "cols", dev.cols, true);
    dev.aie_count = dev.rows * dev.cols;
    read_field(j, "aie_count", dev.aie_count, false);
    read_field(j, "plio_in", dev.plio_in, true);
    read_field(j, "plio_out", dev.plio_out, true);
    read_field(j, "plio_width_bits", dev.plio_width_bits, true);
    read_field(j, "pl_freq", dev.pl_freq, true);
    read_field(j, "aie_freq", dev.aie_freq, true);
    read_field(j, "aie_mem_bytes", dev.aie_mem_bytes, true);
    read_field(j, "banks_per_aie", dev.banks_per_aie, true);
    read_field(j, "bank_bytes", dev.bank_bytes, true);
    read_field(j, "cascade_width_bits", dev.cascade_width_bits, true);
    read_field(j, "vertical_channel_capacity", dev.vertical_channel_capacity, false);

    if (j.contains("precisions")) {
        if (!j["precisions"].is_array()) throw ParseError("'precisions' must be an array");
        for (const auto& pj : j["precisions"]) {
            PrecisionSpec p;
            read_field(pj, "name", p.name, true);
            read_field(pj, "input_bytes", p.input_bytes, true);
            read_field(pj, "output_bytes", p.output_bytes, true);
            read_field(pj, "peak_macs", p.peak_macs, true);
            read_field(pj, "accumulator_bits", p.accumulator_bits, false);
            if (!pj.contains("mmul_catalog"))
                throw ParseError("precision '" + p.name + "' is missing mmul_catalog");
            for (const auto& tj : pj.at("mmul_catalog")) p.mmul_catalog.push_back(tile_from_json(tj));
            dev.precisions.push_back(std::move(p));
        }
    }

    dev.validate();
    return dev;
}

DeviceSpec load_device(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open device profile: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_device(buf.str());
}

std::string device_to_json(const DeviceSpec& dev) {
    ordered_json j;
    j["schema"] = "aieplan-device/1";
    j["name"] = dev.name;
    j["rows"] = dev.rows;
    j["cols"] = dev.cols;
    j["aie_count"] = dev.aie_count;
    j["plio_in"] = dev.plio_in;
    j["plio_out"] = dev.plio_out;
    j["plio_width_bits"] = dev.plio_width_bits;
    j["pl_freq"] = dev.pl_freq;
    j["aie_freq"] = dev.aie_freq;
    j["aie_mem_bytes"] = dev.aie_mem_bytes;
    j["banks_per_aie"] = dev.banks_per_aie;
    j["bank_bytes"] = dev.bank_bytes;
    j["cascade_width_bits"] = dev.cascade_width_bits;
    j["vertical_channel_capacity"] = dev.vertical_channel_capacity;
    j["precisions"] = ordered_json::array();
    for (const auto& p : dev.precisions) {
        ordered_json pj;
        pj["name"] = p.name;
        pj["input_bytes"] = p.input_bytes;
        pj["output_bytes"] = p.output_bytes;
        pj["peak_macs"] = p.peak_macs;
        pj["accumulator_bits"] = p.accumulator_bits;
        pj["mmul_catalog"] = ordered_json::array();
        for (const auto& t : p.mmul_catalog)
            pj["mmul_catalog"].push_back(ordered_json::array({t.m, t.k, t.n}));
        j["precisions"].push_back(std::move(pj));
    }
    return j.dump(2) + "\n";
}

DeviceSpec DeviceSpec::ve2802() {
    DeviceSpec dev;  // grid/PLIO/memory defaults are the VE2802 numbers
    dev.precisions = {
        // Catalog order puts the measured-best tile first; it is the
        // fallback choice when no cycle data distinguishes the candidates.
        {"int8-int32", 1, 4, 256, 32, {{4, 8, 8}, {8, 8, 4}, {4, 4, 4}}},
        {"int8-int16", 1, 2, 256, 32, {{4, 8, 8}, {8, 8, 4}, {4, 4, 4}}},
        {"int8-int8", 1, 1, 256, 32, {{4, 8, 8}, {8, 8, 4}, {4, 4, 4}}},
        // bf16 peak of 128 MACs/cycle is fixed by the shipped reference
        // kernel's theoretical cycle count (64*96*64 / 3072).
        {"bf16-bf16", 2, 2, 128, 32, {{8, 8, 4}, {4, 8, 8}, {4, 4, 4}}},
    };
    dev.validate();
    return dev;
}

std::string builtin_device_json() { return device_to_json(DeviceSpec::ve2802()); }

}  // namespace aieplan
