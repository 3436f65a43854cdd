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
 * Gate-level circuit IR: H, X, Phase, ControlledPhase and Swap on indexed
 * qubits, with composition, adjoint, gate counting and OpenQASM 2.0 export.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mdq {

enum class GateKind { H, X, Phase, ControlledPhase, Swap };

std::string to_string(GateKind kind);

/**
 * One gate. `target` is always used; `control` only by ControlledPhase and
 * `second` only by Swap. `theta` is in radians and ignored by H, X and Swap.
 */
struct Gate {
    GateKind kind = GateKind::H;
    int target = 0;
    int control = -1;
    int second = -1;
    double theta = 0.0;

    static Gate h(int q) { return {GateKind::H, q}; }
    static Gate x(int q) { return {GateKind::X, q}; }
    static Gate phase(int q, double theta) { return {GateKind::Phase, q, -1, -1, theta}; }
    static Gate controlled_phase(int control, int target, double theta) {
        return {GateKind::ControlledPhase, target, control, -1, theta};
    }
    static Gate swap(int a, int b) { return {GateKind::Swap, a, -1, b}; }

    /// Largest qubit index touched.
    int max_qubit() const;
    Gate inverse() const;

    friend bool operator==(const Gate &, const Gate &) = default;
};

struct GateCounts {
    std::size_t h = 0;
    std::size_t x = 0;
    std::size_t phase = 0;
    std::size_t controlled_phase = 0;
    std::size_t swap = 0;

    std::size_t total() const { return h + x + phase + controlled_phase + swap; }

    GateCounts &operator+=(const GateCounts &o);
    friend GateCounts operator+(GateCounts a, const GateCounts &b) { return a += b; }
    friend bool operator==(const GateCounts &, const GateCounts &) = default;
};

std::string to_string(const GateCounts &counts);

class Circuit {
  public:
    explicit Circuit(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    /// Throws ValidationError if an operand is out of range or repeated.
    Circuit &append(const Gate &gate);
    Circuit &append(const Circuit &other);

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    int num_qubits_;
    std::vector<Gate> gates_;
};

/// a followed by b; both must act on the same number of qubits.
Circuit compose(const Circuit &a, const Circuit &b);

/// Reversed order with phase angles negated.
Circuit adjoint(const Circuit &circuit);

GateCounts gate_count(const Circuit &circuit);

/// Deterministic OpenQASM 2.0 text (LF newlines, one `q` register).
std::string export_qasm(const Circuit &circuit);

} // namespace mdq
