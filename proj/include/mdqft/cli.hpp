// Copyright 2026 The mdqft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Subcommands of the `mdqft` tool, callable in-process.
 *
 * Exit codes: 0 success, 2 input or validation error, 3 degenerate input
 * (all-zero array), 4 internal consistency failure.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mdqft/circuit.hpp"
#include "mdqft/encoding.hpp"

namespace mdq::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kDegenerateInput = 3,
    kConsistencyFailure = 4,
};

struct TransformOptions {
    std::string input;
    std::string output;
    bool no_swap = false;
    ScaleConvention convention = ScaleConvention::Classical;
    bool inverse = false;
};

struct SampleOptions {
    std::string input;
    std::string output;
    std::uint64_t shots = std::uint64_t{1} << 14;
    std::uint64_t seed = 7;
    bool no_swap = false;
};

struct VerifyOptions {
    std::string input;
    std::optional<std::string> expected;
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
};

struct ExportOptions {
    std::string dims;
    bool no_swap = false;
    std::string output;
};

struct Figure2Options {
    std::uint64_t shots = std::uint64_t{1} << 14;
    std::uint64_t seed = 7;
    std::string output_dir = "figure2";
};

struct GatecountOptions {
    std::vector<std::string> layouts;
    /// When > 0, also tabulate d = 1..4 equal-extent layouts with M = 2^sweep_log2m.
    int sweep_log2m = 0;
};

int cmd_transform(const TransformOptions &opts, std::ostream &out, std::ostream &err);
int cmd_sample(const SampleOptions &opts, std::ostream &out, std::ostream &err);
int cmd_verify(const VerifyOptions &opts, std::ostream &out, std::ostream &err);
int cmd_export(const ExportOptions &opts, std::ostream &out, std::ostream &err);
int cmd_figure2(const Figure2Options &opts, std::ostream &out, std::ostream &err);
int cmd_gatecount(const GatecountOptions &opts, std::ostream &out, std::ostream &err);

using GateCounter = std::function<GateCounts(const ArrayLayout &)>;

/// Prints the gate-count table; returns kConsistencyFailure if `actual` disagrees with the formula.
int report_gate_counts(const std::vector<ArrayLayout> &layouts, const GateCounter &actual, std::ostream &out);

/// Equal-extent layouts with M = 2^log2m for every d in 1..4 dividing log2m.
std::vector<ArrayLayout> sweep_layouts(int log2m);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace mdq::cli
