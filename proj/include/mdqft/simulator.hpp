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
 * In-place statevector kernels, outcome probabilities and shot sampling.
 *
 * Gates are applied by bit-strided index arithmetic over amplitude pairs;
 * no unitary is formed. dense_unitary_of_circuit builds one column at a time
 * through the same kernels and is meant for small verification problems only.
 */
#pragma once

#include <cstdint>
#include <map>
#include <numbers>
#include <vector>

#include "mdqft/circuit.hpp"
#include "mdqft/encoding.hpp"
#include "mdqft/qft.hpp"
#include "mdqft/state.hpp"

namespace mdq {

namespace kernels {

template <typename Real>
void check_operands(const Gate &gate, int num_qubits) {
    if (gate.target < 0 || gate.max_qubit() >= num_qubits ||
        (gate.kind == GateKind::ControlledPhase && gate.control < 0) ||
        (gate.kind == GateKind::Swap && gate.second < 0)) {
        throw ValidationError(to_string(gate.kind) + " operand outside a " + std::to_string(num_qubits) +
                              "-qubit state");
    }
}

/// Applies `gate` to a raw amplitude vector of 2^num_qubits entries.
template <typename Real>
void apply(ComplexVector<Real> &v, int num_qubits, const Gate &gate) {
    using C = std::complex<Real>;
    check_operands<Real>(gate, num_qubits);
    const Eigen::Index dim = v.size();
    const Eigen::Index tbit = Eigen::Index{1} << gate.target;

    switch (gate.kind) {
    case GateKind::H: {
        const Real s = Real(1) / std::numbers::sqrt2_v<Real>;
        for (Eigen::Index base = 0; base < dim; base += 2 * tbit) {
            for (Eigen::Index i = base; i < base + tbit; ++i) {
                const C a = v(i);
                const C b = v(i + tbit);
                v(i) = s * (a + b);
                v(i + tbit) = s * (a - b);
            }
        }
        break;
    }
    case GateKind::X:
        for (Eigen::Index base = 0; base < dim; base += 2 * tbit) {
            for (Eigen::Index i = base; i < base + tbit; ++i) {
                std::swap(v(i), v(i + tbit));
            }
        }
        break;
    case GateKind::Phase: {
        const C f = std::polar(Real(1), static_cast<Real>(gate.theta));
        for (Eigen::Index i = 0; i < dim; ++i) {
            if (i & tbit) {
                v(i) *= f;
            }
        }
        break;
    }
    case GateKind::ControlledPhase: {
        const C f = std::polar(Real(1), static_cast<Real>(gate.theta));
        const Eigen::Index mask = tbit | (Eigen::Index{1} << gate.control);
        for (Eigen::Index i = 0; i < dim; ++i) {
            if ((i & mask) == mask) {
                v(i) *= f;
            }
        }
        break;
    }
    case GateKind::Swap: {
        const Eigen::Index obit = Eigen::Index{1} << gate.second;
        for (Eigen::Index i = 0; i < dim; ++i) {
            // visit each exchanged pair once: target bit set, other bit clear
            if ((i & tbit) && !(i & obit)) {
                std::swap(v(i), v(i ^ tbit ^ obit));
            }
        }
        break;
    }
    }
}

template <typename Real>
void apply(ComplexVector<Real> &v, int num_qubits, const Circuit &circuit) {
    for (const Gate &g : circuit.gates()) {
        apply(v, num_qubits, g);
    }
}

} // namespace kernels

template <typename Real>
void apply_gate(BasicStatevector<Real> &state, const Gate &gate) {
    kernels::apply(state.amplitudes(), state.num_qubits(), gate);
}

/// Gates in order. The state may be wider than the circuit; extra high qubits are untouched.
template <typename Real>
void apply_circuit(BasicStatevector<Real> &state, const Circuit &circuit) {
    if (circuit.num_qubits() > state.num_qubits()) {
        throw ValidationError("circuit acts on " + std::to_string(circuit.num_qubits()) +
                              " qubits but the state has " + std::to_string(state.num_qubits()));
    }
    kernels::apply(state.amplitudes(), state.num_qubits(), circuit);
}

/**
 * Column j is the circuit applied to |j>. num_qubits may exceed the
 * circuit's width (identity on the extra high qubits) and is capped at 12.
 */
template <typename Real = double>
DenseMatrix<Real> dense_unitary_of_circuit(const Circuit &circuit, int num_qubits) {
    if (num_qubits > kDenseMaxQubits) {
        throw CapacityError("dense unitaries are limited to 12 qubits");
    }
    if (num_qubits < circuit.num_qubits()) {
        throw ValidationError("dense unitary narrower than the circuit");
    }
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    DenseMatrix<Real> u(dim, dim);
    ComplexVector<Real> col(dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        col.setZero();
        col(j) = Real(1);
        kernels::apply(col, num_qubits, circuit);
        u.col(j) = col;
    }
    return u;
}

template <typename Real>
std::vector<Real> probabilities(const BasicStatevector<Real> &state) {
    std::vector<Real> p(static_cast<std::size_t>(state.dim()));
    for (Eigen::Index i = 0; i < state.dim(); ++i) {
        p[static_cast<std::size_t>(i)] = std::norm(state[i]);
    }
    return p;
}

/// Shot counts per outcome index; outcomes never drawn are absent.
struct SampleHistogram {
    int num_qubits = 0;
    std::uint64_t shots = 0;
    std::map<std::uint64_t, std::uint64_t> counts;

    std::uint64_t count(std::uint64_t outcome) const {
        const auto it = counts.find(outcome);
        return it == counts.end() ? 0 : it->second;
    }
    double frequency(std::uint64_t outcome) const {
        return static_cast<double>(count(outcome)) / static_cast<double>(shots);
    }

    friend bool operator==(const SampleHistogram &, const SampleHistogram &) = default;
};

/**
 * Draws `shots` iid outcomes from |amplitude|^2.
 *
 * The generator is std::mt19937_64 seeded with `seed`; each draw takes the
 * top 53 bits as a uniform in [0, 1) and inverts the cumulative
 * distribution by binary search. Both steps are fully specified, so a given
 * (state, shots, seed) yields the same histogram on every platform.
 */
SampleHistogram sample(const Statevector &state, std::uint64_t shots, std::uint64_t seed);

/// Re-keys outcomes through the plan's output permutation.
SampleHistogram to_logical_order(const QftPlan &plan, const SampleHistogram &raw);

struct MdqftRun {
    Statevector state; ///< raw circuit output; apply the plan permutation for logical order
    QftPlan plan;
    double norm_factor;
};

struct RunOptions {
    bool no_swap = false;
};

/// encode -> build plan -> simulate.
MdqftRun run_mdqft(const MdArray &array, RunOptions options = {});

/// Full pipeline output decoded in logical order under `convention`.
MdArray transform(const MdArray &array, ScaleConvention convention, RunOptions options = {});

/// Inverse transform via the adjoint circuit; undoes transform() for the same convention.
MdArray inverse_transform(const MdArray &spectrum, ScaleConvention convention, RunOptions options = {});

} // namespace mdq
