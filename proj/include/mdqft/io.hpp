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
 * Text file formats.
 *
 * Array file (JSON):
 *
 *     {"dims": [N1, ..., Nd], "data": [[re, im], ...]}
 *
 * with `data` flat, dimension 1 fastest. Writers emit one element per line
 * and shortest round-trip decimals, so output is byte-stable.
 *
 * Histogram file (CSV):
 *
 *     shots,<n>
 *     outcome_index,k1,...,kd,count,frequency
 *     <rows sorted by outcome_index>
 */
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mdqft/encoding.hpp"
#include "mdqft/simulator.hpp"

namespace mdq::io {

MdArray read_array(std::istream &in);
MdArray read_array_file(const std::filesystem::path &path);

std::string format_array(const MdArray &array);
void write_array_file(const std::filesystem::path &path, const MdArray &array);

/// "8,8" -> {8, 8}. Extents are not validated here; ArrayLayout does that.
std::vector<std::size_t> parse_dims(const std::string &text);

/// All 2^q rows when include_zero_rows, otherwise only observed outcomes.
std::string format_histogram(const SampleHistogram &hist, const ArrayLayout &layout, bool include_zero_rows);

void write_text_file(const std::filesystem::path &path, const std::string &text);
std::string read_text_file(const std::filesystem::path &path);

} // namespace mdq::io
