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
 * Circuit builders for the 1-D QFT and the d-dimensional QFT.
 *
 * The d-dimensional transform is one textbook QFT per dimension, each on
 * that dimension's qubit span. The blocks act on disjoint qubits and
 * commute; they are emitted in ascending dimension order.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mdqft/circuit.hpp"
#include "mdqft/encoding.hpp"

namespace mdq {

/**
 * Maps a measured (raw) basis index to the index it would have had under
 * the full transform with swaps, so that logical[perm(r)] = raw[r].
 *
 * Computed on demand: bit-reversal inside each listed span, identity when
 * no spans are listed. Every such map is an involution.
 */
class OutputPermutation {
  public:
    OutputPermutation(std::size_t size, std::vector<QubitSpan> reversed_spans)
        : size_(size), reversed_(std::move(reversed_spans)) {}

    std::size_t operator()(std::size_t raw) const;
    std::size_t size() const { return size_; }
    bool is_identity() const { return reversed_.empty(); }
    std::vector<std::size_t> materialize() const;

  private:
    std::size_t size_;
    std::vector<QubitSpan> reversed_;
};

struct QftPlan {
    ArrayLayout layout;
    RegisterMap registers;
    Circuit circuit;
    OutputPermutation output_permutation;
    int batch_qubits = 0;

    bool swaps_elided() const { return !output_permutation.is_identity(); }
    int num_qubits() const { return circuit.num_qubits(); }
};

/// Appends a QFT on `span` to `circuit`, optionally without the terminal swaps.
void append_qft(Circuit &circuit, QubitSpan span, bool with_swaps = true);

/// QFT on `span`, inside a circuit of `num_qubits` (defaults to span.end()).
Circuit qft_register(QubitSpan span, int num_qubits = 0);

QftPlan mdqft(const ArrayLayout &layout);
QftPlan mdqft_no_swap(const ArrayLayout &layout);

/// Same transform with the per-dimension blocks emitted in `order`.
QftPlan mdqft_in_order(const ArrayLayout &layout, std::span<const std::size_t> order);

/**
 * Transform 2^batch_qubits arrays stacked one after another. The extra
 * qubits are the high-order ones and receive no gates, so the unitary is
 * I_{2^b} (x) U.
 */
QftPlan batched_mdqft(const ArrayLayout &layout, int batch_qubits, bool no_swap = false);

/// The QFT block of one dimension alone, on the layout's full qubit count.
Circuit dimension_block(const ArrayLayout &layout, std::size_t dim);

/// sum_i {H: n_i, ControlledPhase: n_i(n_i-1)/2, Swap: floor(n_i/2)}
GateCounts predicted_gate_count(const ArrayLayout &layout);

/// Bit-reversal of `width` bits starting at `first`, other bits unchanged.
std::size_t reverse_bits_in_span(std::size_t index, QubitSpan span);

/// Reorders raw amplitudes into logical order using the plan's permutation.
CVector to_logical_order(const QftPlan &plan, const CVector &raw);
/// Inverse of to_logical_order.
CVector to_raw_order(const QftPlan &plan, const CVector &logical);

} // namespace mdq
