// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 aieplan contributors

#pragma once

#include <stdexcept>
#include <string>

namespace aieplan {

// Malformed input file (bad JSON, wrong schema).
class ParseError : public std::runtime_error {
   public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input violating an invariant; message names the field.
class ValidationError : public std::runtime_error {
   public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A requested configuration cannot be realized on the device. `stage`
// identifies the pipeline step that rejected it ("dse", "buffer-placement",
// "pack", "array-mapping", "congestion").
class InfeasibleError : public std::runtime_error {
   public:
    InfeasibleError(std::string stage, const std::string& what)
        : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}

    const std::string& stage() const { return stage_; }

   private:
    std::string stage_;
};

// Buffer sizes exceed local AIE memory (the pre-placement overflow exit).
class MemoryOverflowError : public InfeasibleError {
   public:
    explicit MemoryOverflowError(const std::string& what)
        : InfeasibleError("buffer-placement", what) {}
};

// No bank assignment satisfies the placement rules.
class PlacementError : public InfeasibleError {
   public:
    explicit PlacementError(const std::string& what)
        : InfeasibleError("buffer-placement", what) {}
};

}  // namespace aieplan
