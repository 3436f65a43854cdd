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

#include "mdqft/circuit.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "mdqft/errors.hpp"

namespace mdq {

std::string to_string(GateKind kind) {
    switch (kind) {
    case GateKind::H:
        return "H";
    case GateKind::X:
        return "X";
    case GateKind::Phase:
        return "Phase";
    case GateKind::ControlledPhase:
        return "ControlledPhase";
    case GateKind::Swap:
        return "Swap";
    }
    return "?";
}

int Gate::max_qubit() const {
    switch (kind) {
    case GateKind::ControlledPhase:
        return std::max(target, control);
    case GateKind::Swap:
        return std::max(target, second);
    default:
        return target;
    }
}

Gate Gate::inverse() const {
    Gate g = *this;
    if (kind == GateKind::Phase || kind == GateKind::ControlledPhase) {
        g.theta = -theta;
    }
    return g;
}

GateCounts &GateCounts::operator+=(const GateCounts &o) {
    h += o.h;
    x += o.x;
    phase += o.phase;
    controlled_phase += o.controlled_phase;
    swap += o.swap;
    return *this;
}

std::string to_string(const GateCounts &c) {
    return fmt::format("{{H:{}, X:{}, Phase:{}, ControlledPhase:{}, Swap:{}}}", c.h, c.x, c.phase,
                       c.controlled_phase, c.swap);
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1) {
        throw ValidationError("circuit needs at least one qubit");
    }
}

namespace {

void check_gate(const Gate &g, int num_qubits) {
    auto in_range = [&](int q) { return q >= 0 && q < num_qubits; };
    if (!in_range(g.target)) {
        throw ValidationError(fmt::format("{} target qubit {} outside [0, {})", to_string(g.kind),
                                          g.target, num_qubits));
    }
    if (g.kind == GateKind::ControlledPhase) {
        if (!in_range(g.control) || g.control == g.target) {
            throw ValidationError(fmt::format("invalid control qubit {}", g.control));
        }
    }
    if (g.kind == GateKind::Swap) {
        if (!in_range(g.second) || g.second == g.target) {
            throw ValidationError(fmt::format("invalid swap partner {}", g.second));
        }
    }
    if ((g.kind == GateKind::Phase || g.kind == GateKind::ControlledPhase) && !std::isfinite(g.theta)) {
        throw ValidationError("non-finite phase angle");
    }
}

} // namespace

Circuit &Circuit::append(const Gate &gate) {
    check_gate(gate, num_qubits_);
    gates_.push_back(gate);
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.num_qubits_ != num_qubits_) {
        throw ValidationError(fmt::format("cannot compose a {}-qubit circuit onto {} qubits",
                                          other.num_qubits_, num_qubits_));
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

Circuit compose(const Circuit &a, const Circuit &b) {
    Circuit out = a;
    out.append(b);
    return out;
}

Circuit adjoint(const Circuit &circuit) {
    Circuit out(circuit.num_qubits());
    const auto &gates = circuit.gates();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        out.append(it->inverse());
    }
    return out;
}

GateCounts gate_count(const Circuit &circuit) {
    GateCounts c;
    for (const Gate &g : circuit.gates()) {
        switch (g.kind) {
        case GateKind::H:
            ++c.h;
            break;
        case GateKind::X:
            ++c.x;
            break;
        case GateKind::Phase:
            ++c.phase;
            break;
        case GateKind::ControlledPhase:
            ++c.controlled_phase;
            break;
        case GateKind::Swap:
            ++c.swap;
            break;
        }
    }
    return c;
}

std::string export_qasm(const Circuit &circuit) {
    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out += fmt::format("qreg q[{}];\n", circuit.num_qubits());
    for (const Gate &g : circuit.gates()) {
        switch (g.kind) {
        case GateKind::H:
            out += fmt::format("h q[{}];\n", g.target);
            break;
        case GateKind::X:
            out += fmt::format("x q[{}];\n", g.target);
            break;
        case GateKind::Phase:
            out += fmt::format("p({}) q[{}];\n", g.theta, g.target);
            break;
        case GateKind::ControlledPhase:
            out += fmt::format("cp({}) q[{}],q[{}];\n", g.theta, g.control, g.target);
            break;
        case GateKind::Swap:
            out += fmt::format("swap q[{}],q[{}];\n", g.target, g.second);
            break;
        }
    }
    return out;
}

} // namespace mdq
