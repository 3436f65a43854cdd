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
 * d-dimensional arrays, their flat ordering, and amplitude encoding.
 *
 * Arrays are flattened with dimension 1 varying fastest:
 * m = k_1 + N_1 k_2 + N_1 N_2 k_3 + ...  Dimension i is carried by the
 * contiguous qubit span starting at n_1 + ... + n_{i-1}, so qubit group i
 * addresses exactly the digit k_i of m.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mdqft/state.hpp"

namespace mdq {

/// Extents N_1..N_d, each a power of two >= 2.
class ArrayLayout {
  public:
    explicit ArrayLayout(std::vector<std::size_t> dims);

    std::size_t rank() const { return dims_.size(); }
    const std::vector<std::size_t> &dims() const { return dims_; }
    std::size_t extent(std::size_t dim) const { return dims_.at(dim); }
    const std::vector<int> &qubit_counts() const { return qubits_; }
    int total_qubits() const { return total_qubits_; }
    std::size_t total_elements() const { return std::size_t{1} << total_qubits_; }

    /// N_1 * ... * N_{i-1}; 1 for the first dimension.
    std::size_t lower_extent(std::size_t dim) const;
    /// N_{i+1} * ... * N_d; 1 for the last dimension.
    std::size_t upper_extent(std::size_t dim) const;

    std::string to_string() const;

    friend bool operator==(const ArrayLayout &, const ArrayLayout &) = default;

  private:
    std::vector<std::size_t> dims_;
    std::vector<int> qubits_;
    int total_qubits_ = 0;
};

struct QubitSpan {
    int first = 0;
    int width = 0;

    int end() const { return first + width; }
    friend bool operator==(const QubitSpan &, const QubitSpan &) = default;
};

/// Per-dimension qubit spans; dimension 1 sits on the lowest qubits.
struct RegisterMap {
    std::vector<QubitSpan> spans;

    friend bool operator==(const RegisterMap &, const RegisterMap &) = default;
};

RegisterMap register_map(const ArrayLayout &layout);

std::size_t flat_index(std::span<const std::size_t> indices, const ArrayLayout &layout);
std::vector<std::size_t> unflatten(std::size_t flat, const ArrayLayout &layout);

/// Complex array with an attached layout, stored flat (dimension 1 fastest).
class MdArray {
  public:
    MdArray(ArrayLayout layout, CVector data);

    static MdArray zeros(ArrayLayout layout);

    const ArrayLayout &layout() const { return layout_; }
    const CVector &data() const { return data_; }
    CVector &data() { return data_; }

    std::complex<double> &at(std::span<const std::size_t> indices);
    std::complex<double> at(std::span<const std::size_t> indices) const;

  private:
    ArrayLayout layout_;
    CVector data_;
};

enum class ScaleConvention {
    Raw,       ///< amplitudes as-is
    Classical, ///< unnormalized transform, comparable to the classical DFT
    Unitary,   ///< norm_factor times the amplitudes
};

enum class Direction { Forward, Inverse };

ScaleConvention parse_convention(const std::string &name);
std::string to_string(ScaleConvention c);

struct EncodedState {
    Statevector state;
    double norm_factor;
};

/// Normalizes the flat data into a statevector. Throws DegenerateInputError on a zero array.
EncodedState encode(const MdArray &array);

/**
 * Rescales a statevector back into an array.
 *
 * Classical multiplies by norm_factor * sqrt(M) for a forward transform and
 * by norm_factor / sqrt(M) for an inverse one, which undoes the forward
 * Classical scaling.
 */
MdArray decode(const Statevector &state, double norm_factor, const ArrayLayout &layout,
               ScaleConvention convention, Direction direction = Direction::Forward);

} // namespace mdq
