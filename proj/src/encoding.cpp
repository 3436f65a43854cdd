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

#include "mdqft/encoding.hpp"

#include <cmath>
#include <numeric>

namespace mdq {

ArrayLayout::ArrayLayout(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) {
        throw ValidationError("layout needs at least one dimension");
    }
    qubits_.reserve(dims_.size());
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        const std::size_t n = dims_[i];
        if (n < 2 || (n & (n - 1)) != 0) {
            throw ValidationError("dimension " + std::to_string(i + 1) + " has extent " +
                                  std::to_string(n) + ", expected a power of two >= 2");
        }
        int q = 0;
        while ((std::size_t{1} << q) < n) {
            ++q;
        }
        qubits_.push_back(q);
        total_qubits_ += q;
        if (total_qubits_ > max_qubits()) {
            throw CapacityError("layout " + to_string() + " exceeds the qubit cap of " +
                                std::to_string(max_qubits()));
        }
    }
}

std::size_t ArrayLayout::lower_extent(std::size_t dim) const {
    std::size_t p = 1;
    for (std::size_t j = 0; j < dim; ++j) {
        p *= dims_.at(j);
    }
    return p;
}

std::size_t ArrayLayout::upper_extent(std::size_t dim) const {
    std::size_t p = 1;
    for (std::size_t j = dim + 1; j < dims_.size(); ++j) {
        p *= dims_[j];
    }
    return p;
}

std::string ArrayLayout::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        s += (i ? "," : "") + std::to_string(dims_[i]);
    }
    return s + ")";
}

RegisterMap register_map(const ArrayLayout &layout) {
    RegisterMap map;
    int next = 0;
    for (int n : layout.qubit_counts()) {
        map.spans.push_back({next, n});
        next += n;
    }
    return map;
}

std::size_t flat_index(std::span<const std::size_t> indices, const ArrayLayout &layout) {
    if (indices.size() != layout.rank()) {
        throw BoundsError("expected " + std::to_string(layout.rank()) + " indices, got " +
                          std::to_string(indices.size()));
    }
    std::size_t flat = 0;
    std::size_t stride = 1;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= layout.extent(i)) {
            throw BoundsError("index " + std::to_string(indices[i]) + " out of range for dimension " +
                              std::to_string(i + 1));
        }
        flat += indices[i] * stride;
        stride *= layout.extent(i);
    }
    return flat;
}

std::vector<std::size_t> unflatten(std::size_t flat, const ArrayLayout &layout) {
    if (flat >= layout.total_elements()) {
        throw BoundsError("flat index " + std::to_string(flat) + " out of range");
    }
    std::vector<std::size_t> k(layout.rank());
    for (std::size_t i = 0; i < k.size(); ++i) {
        k[i] = flat % layout.extent(i);
        flat /= layout.extent(i);
    }
    return k;
}

MdArray::MdArray(ArrayLayout layout, CVector data) : layout_(std::move(layout)), data_(std::move(data)) {
    if (static_cast<std::size_t>(data_.size()) != layout_.total_elements()) {
        throw LayoutError("data length " + std::to_string(data_.size()) + " does not match layout " +
                          layout_.to_string());
    }
    if (!all_finite(data_)) {
        throw ValidationError("array contains non-finite entries");
    }
}

MdArray MdArray::zeros(ArrayLayout layout) {
    const auto m = static_cast<Eigen::Index>(layout.total_elements());
    return MdArray(std::move(layout), CVector::Zero(m));
}

std::complex<double> &MdArray::at(std::span<const std::size_t> indices) {
    return data_(static_cast<Eigen::Index>(flat_index(indices, layout_)));
}

std::complex<double> MdArray::at(std::span<const std::size_t> indices) const {
    return data_(static_cast<Eigen::Index>(flat_index(indices, layout_)));
}

ScaleConvention parse_convention(const std::string &name) {
    if (name == "raw" || name == "RAW") return ScaleConvention::Raw;
    if (name == "classical" || name == "CLASSICAL") return ScaleConvention::Classical;
    if (name == "unitary" || name == "UNITARY") return ScaleConvention::Unitary;
    throw ValidationError("unknown scale convention '" + name + "'");
}

std::string to_string(ScaleConvention c) {
    switch (c) {
    case ScaleConvention::Raw:
        return "raw";
    case ScaleConvention::Classical:
        return "classical";
    case ScaleConvention::Unitary:
        return "unitary";
    }
    return "?";
}

EncodedState encode(const MdArray &array) {
    const double factor = array.data().norm();
    if (!(factor > 0.0)) {
        throw DegenerateInputError("cannot amplitude-encode an all-zero array");
    }
    CVector amps = array.data() / factor;
    return {Statevector::from_amplitudes(std::move(amps)), factor};
}

MdArray decode(const Statevector &state, double norm_factor, const ArrayLayout &layout,
               ScaleConvention convention, Direction direction) {
    if (state.num_qubits() != layout.total_qubits()) {
        throw LayoutError("statevector has " + std::to_string(state.num_qubits()) +
                          " qubits, layout " + layout.to_string() + " needs " +
                          std::to_string(layout.total_qubits()));
    }
    double scale = 1.0;
    switch (convention) {
    case ScaleConvention::Raw:
        break;
    case ScaleConvention::Unitary:
        scale = norm_factor;
        break;
    case ScaleConvention::Classical: {
        const double root_m = std::sqrt(static_cast<double>(layout.total_elements()));
        scale = direction == Direction::Forward ? norm_factor * root_m : norm_factor / root_m;
        break;
    }
    }
    return MdArray(layout, state.amplitudes() * scale);
}

} // namespace mdq
