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

#include <catch_amalgamated.hpp>

#include <fstream>
#include <numbers>
#include <numeric>

#include "mdqft/io.hpp"
#include "mdqft/oracle.hpp"
#include "mdqft/qft.hpp"
#include "mdqft/simulator.hpp"
#include "test_support.hpp"

using namespace mdq;

namespace {

CMatrix identity(std::size_t n) {
    const auto d = static_cast<Eigen::Index>(n);
    return CMatrix::Identity(d, d);
}

/// I_{N_up} (x) QFT_{N_i} (x) I_{N_down}, assembled from kron and the Vandermonde oracle.
CMatrix block_unitary(const ArrayLayout &l, std::size_t dim) {
    return kron(identity(l.upper_extent(dim)), kron(qft_matrix(l.extent(dim)), identity(l.lower_extent(dim))));
}

Statevector simulate(const Circuit &c, const Statevector &in) {
    Statevector s = in;
    apply_circuit(s, c);
    return s;
}

} // namespace

TEST_CASE("qft_register small cases", "[qft]") {
    const Circuit one = qft_register({0, 1});
    REQUIRE(one.size() == 1);
    CHECK(one.gates()[0] == Gate::h(0));

    const Circuit two = qft_register({0, 2});
    REQUIRE(two.size() == 4);
    CHECK(two.gates()[0] == Gate::h(1));
    CHECK(two.gates()[1] == Gate::controlled_phase(0, 1, std::numbers::pi / 2));
    CHECK(two.gates()[2] == Gate::h(0));
    CHECK(two.gates()[3] == Gate::swap(0, 1));
    CHECK(max_abs_diff(dense_unitary_of_circuit(two, 2), vandermonde(4) / 2.0) < 1e-15);

    const GateCounts three = gate_count(qft_register({0, 3}));
    CHECK(three.h == 3);
    CHECK(three.controlled_phase == 3);
    CHECK(three.swap == 1);
    CHECK(three.total() == 7);

    CHECK_THROWS_AS(qft_register({0, 0}), ValidationError);
    Circuit small(2);
    CHECK_THROWS_AS(append_qft(small, {1, 2}), ValidationError);
}

TEST_CASE("qft_register matches the QFT matrix", "[qft]") {
    for (int n = 1; n <= 8; ++n) {
        const CMatrix u = dense_unitary_of_circuit(qft_register({0, n}), n);
        INFO("n = " << n);
        CHECK(max_abs_diff(u, qft_matrix(std::size_t{1} << n)) <= 1e-12);
    }
    // an offset span acts as I (x) QFT (x) I
    const CMatrix u = dense_unitary_of_circuit(qft_register({2, 3}, 7), 7);
    CHECK(max_abs_diff(u, kron(identity(4), kron(qft_matrix(8), identity(4)))) <= 1e-12);
}

TEST_CASE("mdqft structure", "[qft]") {
    const QftPlan p2 = mdqft(ArrayLayout({2}));
    REQUIRE(p2.circuit.size() == 1);
    CHECK(p2.circuit.gates()[0] == Gate::h(0));
    CHECK(p2.output_permutation.is_identity());

    const QftPlan p88 = mdqft(ArrayLayout({8, 8}));
    CHECK(p88.num_qubits() == 6);
    const auto &g = p88.circuit.gates();
    REQUIRE(g.size() == 14);
    // first block touches only qubits 0-2, second only 3-5
    CHECK(std::all_of(g.begin(), g.begin() + 7, [](const Gate &x) { return x.max_qubit() < 3; }));
    CHECK(std::all_of(g.begin() + 7, g.end(), [](const Gate &x) {
        return x.target >= 3 && (x.kind != GateKind::ControlledPhase || x.control >= 3) &&
               (x.kind != GateKind::Swap || x.second >= 3);
    }));
    CHECK(gate_count(p88.circuit) == GateCounts{6, 0, 0, 6, 2});

    // U2 U1 with U1 = I4 (x) QFT4 and U2 = QFT4 (x) I4
    const CMatrix q4 = qft_matrix(4);
    const CMatrix u1 = kron(identity(4), q4);
    const CMatrix u2 = kron(q4, identity(4));
    CHECK(max_abs_diff(dense_unitary_of_circuit(mdqft(ArrayLayout({4, 4})).circuit, 4), u2 * u1) <= 1e-12);
    CHECK(max_abs_diff(u2 * u1, kron(q4, q4)) <= 1e-12);
}

TEST_CASE("golden QASM for the 8x8 transform", "[qft][qasm]") {
    const std::string golden = io::read_text_file(std::string(MDQFT_GOLDEN_DIR) + "/mdqft_8x8.qasm");
    CHECK(export_qasm(mdqft(ArrayLayout({8, 8})).circuit) == golden);
    const std::string golden_ns = io::read_text_file(std::string(MDQFT_GOLDEN_DIR) + "/mdqft_8x8_no_swap.qasm");
    CHECK(export_qasm(mdqft_no_swap(ArrayLayout({8, 8})).circuit) == golden_ns);
}

TEST_CASE("tensor structure of every dimension block", "[qft][property]") {
    std::mt19937_64 rng(31);
    int checked = 0;
    while (checked < 200) {
        const ArrayLayout l = testing::random_layout(rng, 4, 10);
        for (std::size_t i = 0; i < l.rank() && checked < 200; ++i, ++checked) {
            const CMatrix u = dense_unitary_of_circuit(dimension_block(l, i), l.total_qubits());
            INFO(l.to_string() << " dim " << i);
            CHECK(max_abs_diff(u, block_unitary(l, i)) <= 1e-12);
        }
    }
}

TEST_CASE("mdqft_no_swap", "[qft]") {
    CHECK(mdqft_no_swap(ArrayLayout({2})).circuit == mdqft(ArrayLayout({2})).circuit);
    CHECK(mdqft_no_swap(ArrayLayout({2})).output_permutation.is_identity());

    std::mt19937_64 rng(5);
    const MdArray a = testing::random_array(ArrayLayout({4}), rng);
    const Statevector in = encode(a).state;
    const QftPlan with = mdqft(a.layout());
    const QftPlan without = mdqft_no_swap(a.layout());
    const CVector logical = to_logical_order(without, simulate(without.circuit, in).amplitudes());
    CHECK(max_abs_diff(logical, simulate(with.circuit, in).amplitudes()) <= 1e-13);

    const GateCounts full = gate_count(mdqft(ArrayLayout({8, 8})).circuit);
    const GateCounts ns = gate_count(mdqft_no_swap(ArrayLayout({8, 8})).circuit);
    CHECK(ns.swap == 0);
    CHECK(full.total() - ns.total() == 2);
}

TEST_CASE("output permutation is a bijection", "[qft][property]") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        const QftPlan p = mdqft_no_swap(testing::random_layout(rng, 3, 12));
        std::vector<std::size_t> perm = p.output_permutation.materialize();
        REQUIRE(perm.size() == p.layout.total_elements());
        for (std::size_t r = 0; r < perm.size(); ++r) {
            CHECK(p.output_permutation(perm[r]) == r);
        }
        std::sort(perm.begin(), perm.end());
        std::vector<std::size_t> iota(perm.size());
        std::iota(iota.begin(), iota.end(), std::size_t{0});
        CHECK(perm == iota);
    }
    CHECK(reverse_bits_in_span(0b000110, {1, 4}) == 0b011000);
}

TEST_CASE("swap elision, order invariance and round trip", "[qft][property]") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const ArrayLayout l = testing::random_layout(rng, 4, 12);
        const MdArray a = testing::random_array(l, rng);
        const Statevector in = encode(a).state;
        const QftPlan plan = mdqft(l);
        const Statevector out = simulate(plan.circuit, in);
        INFO(l.to_string());

        const QftPlan ns = mdqft_no_swap(l);
        CHECK(max_abs_diff(to_logical_order(ns, simulate(ns.circuit, in).amplitudes()), out.amplitudes()) <= 1e-13);

        std::vector<std::size_t> order(l.rank());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::shuffle(order.begin(), order.end(), rng);
        CHECK(max_abs_diff(simulate(mdqft_in_order(l, order).circuit, in).amplitudes(), out.amplitudes()) <= 1e-12);

        CHECK(max_abs_diff(simulate(adjoint(plan.circuit), out).amplitudes(), in.amplitudes()) <= 1e-12);
    }
    const std::vector<std::size_t> bad{0, 0};
    CHECK_THROWS_AS(mdqft_in_order(ArrayLayout({2, 2}), bad), ValidationError);
}

TEST_CASE("oracle equivalence on random arrays", "[qft][property]") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const ArrayLayout l = testing::random_layout(rng, 3, 12);
        const MdArray a = testing::random_array(l, rng);
        INFO(l.to_string());
        CHECK(compare_spectra(transform(a, ScaleConvention::Classical), md_dft(a, DftEngine::Naive), 1e-9, 1e-9).pass);
    }
}

TEST_CASE("batched_mdqft", "[qft]") {
    const ArrayLayout l4({4});
    CHECK(batched_mdqft(l4, 0).circuit == mdqft(l4).circuit);
    CHECK_THROWS_AS(batched_mdqft(l4, -1), ValidationError);

    // two stacked length-4 arrays, transformed independently
    std::mt19937_64 rng(9);
    const CVector stacked = testing::random_vector(8, rng);
    const double norm = stacked.norm();
    const QftPlan plan = batched_mdqft(l4, 1);
    CHECK(plan.num_qubits() == 3);
    Statevector s = Statevector::from_amplitudes(stacked / norm);
    apply_circuit(s, plan.circuit);
    for (Eigen::Index half = 0; half < 2; ++half) {
        const MdArray block(l4, stacked.segment(half * 4, 4));
        const CVector expected = md_dft(block, DftEngine::Naive).data();
        const CVector got = s.amplitudes().segment(half * 4, 4) * norm * 2.0;
        CHECK(max_abs_diff(got, expected) <= 1e-12);
    }

    // four Hadamards down the diagonal
    const CMatrix u = dense_unitary_of_circuit(batched_mdqft(ArrayLayout({2}), 2).circuit, 3);
    CHECK(max_abs_diff(u, kron(identity(4), qft_matrix(2))) <= 1e-15);
}

TEST_CASE("batched block-diagonal property", "[qft][property]") {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 200; ++trial) {
        const int b = trial % 3;
        const ArrayLayout l = testing::random_layout(rng, 3, 8 - b);
        const QftPlan plan = batched_mdqft(l, b, trial % 2 == 1);
        const int q = l.total_qubits() + b;
        const CMatrix single = dense_unitary_of_circuit(mdqft(l).circuit, l.total_qubits());
        CMatrix u = dense_unitary_of_circuit(plan.circuit, q);
        if (plan.swaps_elided()) {
            // P U: rows reindexed into logical order
            const CMatrix raw = u;
            for (Eigen::Index r = 0; r < raw.rows(); ++r) {
                u.row(static_cast<Eigen::Index>(plan.output_permutation(static_cast<std::size_t>(r)))) = raw.row(r);
            }
        }
        INFO(l.to_string() << " b=" << b);
        CHECK(max_abs_diff(u, kron(identity(std::size_t{1} << b), single)) <= 1e-12);
    }
}

TEST_CASE("predicted_gate_count", "[qft]") {
    const GateCounts c88 = predicted_gate_count(ArrayLayout({8, 8}));
    CHECK(c88 == GateCounts{6, 0, 0, 6, 2});
    CHECK(c88.total() == 14);
    CHECK(predicted_gate_count(ArrayLayout({2, 2, 2, 2})) == GateCounts{4, 0, 0, 0, 0});

    const std::vector<std::pair<std::vector<std::size_t>, std::size_t>> sweep{
        {{4096}, 66}, {{64, 64}, 30}, {{16, 16, 16}, 18}, {{8, 8, 8, 8}, 12}};
    for (const auto &[dims, cp] : sweep) {
        CHECK(predicted_gate_count(ArrayLayout(dims)).controlled_phase == cp);
    }

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const ArrayLayout l = testing::random_layout(rng, 6, 20);
        CHECK(predicted_gate_count(l) == gate_count(mdqft(l).circuit));
    }
}
