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

#include "mdqft/qft.hpp"

#include <numbers>
#include <numeric>

#include "mdqft/errors.hpp"

namespace mdq {

void append_qft(Circuit &circuit, QubitSpan span, bool with_swaps) {
    if (span.width < 1) {
        throw ValidationError("QFT span must contain at least one qubit");
    }
    if (span.first < 0 || span.end() > circuit.num_qubits()) {
        throw ValidationError("QFT span exceeds the circuit");
    }
    for (int target = span.end() - 1; target >= span.first; --target) {
        circuit.append(Gate::h(target));
        for (int control = target - 1; control >= span.first; --control) {
            const int k = target - control + 1;
            const double theta = 2.0 * std::numbers::pi / static_cast<double>(std::size_t{1} << k);
            circuit.append(Gate::controlled_phase(control, target, theta));
        }
    }
    if (with_swaps) {
        for (int i = 0; i < span.width / 2; ++i) {
            circuit.append(Gate::swap(span.first + i, span.end() - 1 - i));
        }
    }
}

Circuit qft_register(QubitSpan span, int num_qubits) {
    if (span.width < 1) {
        throw ValidationError("QFT span must contain at least one qubit");
    }
    Circuit c(num_qubits > 0 ? num_qubits : span.end());
    append_qft(c, span);
    return c;
}

namespace {

std::vector<std::size_t> ascending(const ArrayLayout &layout) {
    std::vector<std::size_t> order(layout.rank());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
}

QftPlan build(const ArrayLayout &layout, std::span<const std::size_t> order, int batch_qubits,
              bool with_swaps) {
    if (batch_qubits < 0) {
        throw ValidationError("batch qubit count must be >= 0");
    }
    const int total = layout.total_qubits() + batch_qubits;
    if (total > max_qubits()) {
        throw CapacityError("batched layout exceeds the qubit cap");
    }
    RegisterMap regs = register_map(layout);
    Circuit circuit(total);
    for (std::size_t d : order) {
        append_qft(circuit, regs.spans.at(d), with_swaps);
    }
    std::vector<QubitSpan> reversed;
    if (!with_swaps) {
        for (const QubitSpan &s : regs.spans) {
            if (s.width > 1) {
                reversed.push_back(s);
            }
        }
    }
    OutputPermutation perm(std::size_t{1} << total, std::move(reversed));
    return QftPlan{layout, std::move(regs), std::move(circuit), std::move(perm), batch_qubits};
}

} // namespace

QftPlan mdqft(const ArrayLayout &layout) { return build(layout, ascending(layout), 0, true); }

QftPlan mdqft_no_swap(const ArrayLayout &layout) { return build(layout, ascending(layout), 0, false); }

QftPlan mdqft_in_order(const ArrayLayout &layout, std::span<const std::size_t> order) {
    std::vector<bool> seen(layout.rank(), false);
    if (order.size() != layout.rank()) {
        throw ValidationError("block order must name every dimension once");
    }
    for (std::size_t d : order) {
        if (d >= layout.rank() || seen[d]) {
            throw ValidationError("block order must name every dimension once");
        }
        seen[d] = true;
    }
    return build(layout, order, 0, true);
}

QftPlan batched_mdqft(const ArrayLayout &layout, int batch_qubits, bool no_swap) {
    return build(layout, ascending(layout), batch_qubits, !no_swap);
}

Circuit dimension_block(const ArrayLayout &layout, std::size_t dim) {
    const RegisterMap regs = register_map(layout);
    return qft_register(regs.spans.at(dim), layout.total_qubits());
}

GateCounts predicted_gate_count(const ArrayLayout &layout) {
    GateCounts c;
    for (int n : layout.qubit_counts()) {
        const auto un = static_cast<std::size_t>(n);
        c.h += un;
        c.controlled_phase += un * (un - 1) / 2;
        c.swap += un / 2;
    }
    return c;
}

std::size_t reverse_bits_in_span(std::size_t index, QubitSpan span) {
    std::size_t out = index;
    for (int i = 0; i < span.width; ++i) {
        const std::size_t src = std::size_t{1} << (span.first + i);
        const std::size_t dst = std::size_t{1} << (span.end() - 1 - i);
        out = (index & src) ? (out | dst) : (out & ~dst);
    }
    return out;
}

std::size_t OutputPermutation::operator()(std::size_t raw) const {
    std::size_t out = raw;
    for (const QubitSpan &s : reversed_) {
        out = reverse_bits_in_span(out, s);
    }
    return out;
}

std::vector<std::size_t> OutputPermutation::materialize() const {
    std::vector<std::size_t> p(size_);
    for (std::size_t r = 0; r < size_; ++r) {
        p[r] = (*this)(r);
    }
    return p;
}

CVector to_logical_order(const QftPlan &plan, const CVector &raw) {
    const OutputPermutation &perm = plan.output_permutation;
    if (static_cast<std::size_t>(raw.size()) != perm.size()) {
        throw LayoutError("amplitude count does not match the plan");
    }
    if (perm.is_identity()) {
        return raw;
    }
    CVector out(raw.size());
    for (std::size_t r = 0; r < perm.size(); ++r) {
        out(static_cast<Eigen::Index>(perm(r))) = raw(static_cast<Eigen::Index>(r));
    }
    return out;
}

CVector to_raw_order(const QftPlan &plan, const CVector &logical) {
    const OutputPermutation &perm = plan.output_permutation;
    if (static_cast<std::size_t>(logical.size()) != perm.size()) {
        throw LayoutError("amplitude count does not match the plan");
    }
    if (perm.is_identity()) {
        return logical;
    }
    CVector out(logical.size());
    for (std::size_t r = 0; r < perm.size(); ++r) {
        out(static_cast<Eigen::Index>(r)) = logical(static_cast<Eigen::Index>(perm(r)));
    }
    return out;
}

} // namespace mdq
