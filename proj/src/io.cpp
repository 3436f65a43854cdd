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

#include "mdqft/io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

namespace mdq::io {

using nlohmann::json;

MdArray read_array(std::istream &in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception &e) {
        throw ParseError(std::string("array file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dims") || !doc.contains("data")) {
        throw ParseError("array file needs \"dims\" and \"data\" fields");
    }
    const json &jd = doc["dims"];
    const json &jv = doc["data"];
    if (!jd.is_array() || !jv.is_array()) {
        throw ParseError("\"dims\" and \"data\" must be arrays");
    }
    std::vector<std::size_t> dims;
    for (const json &d : jd) {
        if (!d.is_number_unsigned()) {
            throw ParseError("dims entries must be positive integers");
        }
        dims.push_back(d.get<std::size_t>());
    }
    ArrayLayout layout(std::move(dims));
    if (jv.size() != layout.total_elements()) {
        throw ParseError(fmt::format("\"data\" has {} entries, dims {} need {}", jv.size(), layout.to_string(),
                                     layout.total_elements()));
    }
    CVector data(static_cast<Eigen::Index>(jv.size()));
    for (std::size_t i = 0; i < jv.size(); ++i) {
        const json &e = jv[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw ParseError(fmt::format("data[{}] must be [re, im]", i));
        }
        data(static_cast<Eigen::Index>(i)) = {e[0].get<double>(), e[1].get<double>()};
    }
    return MdArray(std::move(layout), std::move(data));
}

MdArray read_array_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    return read_array(in);
}

std::string format_array(const MdArray &array) {
    std::string out = "{\n  \"dims\": [";
    const auto &dims = array.layout().dims();
    for (std::size_t i = 0; i < dims.size(); ++i) {
        out += fmt::format("{}{}", i ? ", " : "", dims[i]);
    }
    out += "],\n  \"data\": [\n";
    const CVector &d = array.data();
    for (Eigen::Index i = 0; i < d.size(); ++i) {
        // + 0.0 folds -0 into 0
        out += fmt::format("    [{}, {}]{}\n", d(i).real() + 0.0, d(i).imag() + 0.0, i + 1 < d.size() ? "," : "");
    }
    out += "  ]\n}\n";
    return out;
}

void write_array_file(const std::filesystem::path &path, const MdArray &array) {
    write_text_file(path, format_array(array));
}

std::vector<std::size_t> parse_dims(const std::string &text) {
    std::vector<std::size_t> dims;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 12) {
            throw ParseError("bad dimension list '" + text + "'");
        }
        dims.push_back(std::stoull(item));
    }
    if (dims.empty()) {
        throw ParseError("empty dimension list");
    }
    return dims;
}

std::string format_histogram(const SampleHistogram &hist, const ArrayLayout &layout, bool include_zero_rows) {
    if (hist.num_qubits != layout.total_qubits()) {
        throw LayoutError("histogram width does not match layout " + layout.to_string());
    }
    std::string out = fmt::format("shots,{}\noutcome_index", hist.shots);
    for (std::size_t i = 0; i < layout.rank(); ++i) {
        out += fmt::format(",k{}", i + 1);
    }
    out += ",count,frequency\n";
    auto row = [&](std::uint64_t outcome, std::uint64_t count) {
        out += fmt::format("{}", outcome);
        for (std::size_t k : unflatten(outcome, layout)) {
            out += fmt::format(",{}", k);
        }
        out += fmt::format(",{},{}\n", count, static_cast<double>(count) / static_cast<double>(hist.shots));
    };
    if (include_zero_rows) {
        for (std::uint64_t i = 0; i < layout.total_elements(); ++i) {
            row(i, hist.count(i));
        }
    } else {
        for (const auto &[outcome, count] : hist.counts) {
            row(outcome, count);
        }
    }
    return out;
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw ParseError("write failed for " + path.string());
    }
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace mdq::io
