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
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <unistd.h>

#include <fmt/format.h>

#include "mdqft/cli.hpp"
#include "mdqft/experiment.hpp"
#include "mdqft/io.hpp"
#include "mdqft/oracle.hpp"
#include "mdqft/qft.hpp"
#include "mdqft/simulator.hpp"
#include "test_support.hpp"

using namespace mdq;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const std::string &name, bool pass, const std::string &detail) {
    std::cout << fmt::format("[{}] criterion {}: {} -- {}\n", pass ? "PASS" : "FAIL", id, name, detail);
    if (!pass) {
        ++failures;
    }
}

/// Layouts with d in {1,2,3}, every extent in {2,4,8}, M <= 4096.
ArrayLayout criterion1_layout(std::mt19937_64 &rng) { return testing::random_layout(rng, 3, 12); }

void oracle_equivalence() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(1001);
    constexpr int kCases = 100;
    int passed = 0;
    double worst_abs = 0.0;
    std::vector<int> rank_seen(4, 0);
    for (int i = 0; i < kCases; ++i) {
        const ArrayLayout l = criterion1_layout(rng);
        ++rank_seen[l.rank()];
        const MdArray a = testing::random_array(l, rng);
        const auto cmp = compare_spectra(transform(a, ScaleConvention::Classical), md_dft(a, DftEngine::Naive), 1e-9, 1e-9);
        passed += cmp.pass;
        worst_abs = std::max(worst_abs, cmp.max_abs_err);
    }
    const double elapsed = seconds_since(t0);
    const bool all_ranks = rank_seen[1] > 0 && rank_seen[2] > 0 && rank_seen[3] > 0;
    report(1, "simulator spectrum == md_dft (abs 1e-9 + rel 1e-9)", passed == kCases && all_ranks && elapsed < 30.0,
           fmt::format("{}/{} arrays, d=1/2/3 counts {}/{}/{}, max abs err {:.2e}, {:.3f} s", passed, kCases,
                       rank_seen[1], rank_seen[2], rank_seen[3], worst_abs, elapsed));
}

void figure2() {
    const experiment::Figure2Report rep = experiment::run_figure2(std::uint64_t{1} << 14, experiment::kDefaultSeed);
    const auto peaks = experiment::peak_indices();
    int nonzero = 0;
    double worst_peak = 0.0;
    double worst_off = 0.0;
    bool peaks_at_sites = true;
    for (std::size_t i = 0; i < rep.ideal_probabilities.size(); ++i) {
        const double p = rep.ideal_probabilities[i];
        const bool peak = std::find(peaks.begin(), peaks.end(), i) != peaks.end();
        if (peak) {
            worst_peak = std::max(worst_peak, std::abs(p - 0.25));
        } else {
            worst_off = std::max(worst_off, p);
        }
        if (p > 1e-12) {
            ++nonzero;
            const auto k = unflatten(i, rep.image.layout());
            peaks_at_sites = peaks_at_sites && (k[0] == 2 || k[0] == 6) && (k[1] == 2 || k[1] == 6);
        }
    }
    bool band = true;
    double lo = 1.0, hi = 0.0;
    for (std::size_t p : peaks) {
        const double f = rep.histogram.frequency(p);
        lo = std::min(lo, f);
        hi = std::max(hi, f);
        band = band && std::abs(f - 0.25) <= 0.015;
    }
    const bool ideal = nonzero == 4 && peaks_at_sites && worst_peak <= 1e-12;
    const bool sampled = band && rep.peak_check.offpeak_counts == 0;
    report(2, "figure-2 reproduction (ideal peaks 0.25 +- 1e-12, sampled 0.25 +- 0.015, no off-peak counts)",
           ideal && sampled,
           fmt::format("nonzero ideal probs {}, max peak err {:.1e}, max off-peak prob {:.1e}; {} shots: peak freq "
                       "[{:.4f}, {:.4f}], off-peak counts {}",
                       nonzero, worst_peak, worst_off, rep.shots, lo, hi, rep.peak_check.offpeak_counts));
}

void initialization() {
    const Circuit init = experiment::example_init_circuit();
    Statevector s = zero_state(6);
    apply_circuit(s, init);
    const double err = max_abs_diff(s.amplitudes(), encode(experiment::example_image()).state.amplitudes());
    const GateCounts n = gate_count(init);
    const bool inventory = n.h == 4 && n.x == 3 && n.total() == 7;
    report(3, "init circuit prepares encode(image) within 1e-15, 4 H + 3 X", err <= 1e-15 && inventory,
           fmt::format("max elementwise err {:.1e}, counts {}", err, to_string(n)));
}

void complexity() {
    std::mt19937_64 rng(1004);
    int tested = 0;
    bool all_equal = true;
    for (int i = 0; i < 300; ++i, ++tested) {
        const ArrayLayout l = testing::random_layout(rng, 6, 24);
        all_equal = all_equal && predicted_gate_count(l) == gate_count(mdqft(l).circuit);
    }
    std::vector<std::size_t> cps;
    bool classical_ok = true;
    for (const ArrayLayout &l : cli::sweep_layouts(12)) {
        ++tested;
        all_equal = all_equal && predicted_gate_count(l) == gate_count(mdqft(l).circuit);
        cps.push_back(gate_count(mdqft(l).circuit).controlled_phase);
        classical_ok = classical_ok && l.total_elements() * static_cast<std::size_t>(l.total_qubits()) == 49152;
    }
    const bool sweep = cps == std::vector<std::size_t>{66, 30, 18, 12};
    std::ostringstream table;
    const int rc = cli::report_gate_counts(
        cli::sweep_layouts(12), [](const ArrayLayout &l) { return gate_count(mdqft(l).circuit); }, table);
    std::cout << table.str();
    report(4, "predicted == actual gate counts; CP 66/30/18/12 at M = 2^12 vs M log2 M = 49152",
           all_equal && sweep && classical_ok && rc == cli::kOk,
           fmt::format("{} layouts consistent: {}, CP sweep {}/{}/{}/{}", tested, all_equal, cps.at(0), cps.at(1),
                       cps.at(2), cps.at(3)));
}

Statevector random_state(int q, std::mt19937_64 &rng) {
    const CVector v = testing::random_vector(Eigen::Index{1} << q, rng);
    return Statevector::from_amplitudes(v / v.norm());
}

CMatrix eye(std::size_t n) {
    const auto d = static_cast<Eigen::Index>(n);
    return CMatrix::Identity(d, d);
}

struct Suite {
    std::string name;
    int cases = 0;
    int passed = 0;
    double worst = 0.0;
    double tol = 0.0;

    void add(double err) {
        ++cases;
        worst = std::max(worst, err);
        passed += err <= tol;
    }
    bool ok() const { return cases >= 200 && passed == cases; }
};

void properties() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(1005);
    std::vector<Suite> suites;

    Suite unitarity{"unitarity / norm per gate", 0, 0, 0.0, 1e-12};
    for (int i = 0; i < 200; ++i) {
        const int q = 1 + i % 12;
        Statevector s = random_state(q, rng);
        const Gate g = testing::random_gate(q, rng);
        apply_gate(s, g);
        double err = std::abs(norm(s) - 1.0);
        if (q <= 4) {
            Circuit c(q);
            c.append(g);
            const CMatrix u = dense_unitary_of_circuit(c, q);
            err = std::max(err, max_abs_diff(u.adjoint() * u, eye(std::size_t{1} << q)));
        }
        unitarity.add(err);
    }
    suites.push_back(unitarity);

    Suite order{"register-order invariance", 0, 0, 0.0, 1e-12};
    Suite elision{"swap-elision equivalence", 0, 0, 0.0, 1e-13};
    Suite round{"mdqft then adjoint is identity", 0, 0, 0.0, 1e-12};
    for (int i = 0; i < 200; ++i) {
        const ArrayLayout l = testing::random_layout(rng, 4, 12);
        const Statevector in = random_state(l.total_qubits(), rng);
        const QftPlan plan = mdqft(l);
        Statevector out = in;
        apply_circuit(out, plan.circuit);

        std::vector<std::size_t> perm(l.rank());
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        Statevector shuffled = in;
        apply_circuit(shuffled, mdqft_in_order(l, perm).circuit);
        order.add(max_abs_diff(shuffled.amplitudes(), out.amplitudes()));

        const QftPlan ns = mdqft_no_swap(l);
        Statevector raw = in;
        apply_circuit(raw, ns.circuit);
        elision.add(max_abs_diff(to_logical_order(ns, raw.amplitudes()), out.amplitudes()));

        Statevector back = out;
        apply_circuit(back, adjoint(plan.circuit));
        round.add(max_abs_diff(back.amplitudes(), in.amplitudes()));
    }
    suites.push_back(order);
    suites.push_back(elision);
    suites.push_back(round);

    Suite tensor{"dense tensor structure per dimension (<= 10 qubits)", 0, 0, 0.0, 1e-12};
    while (tensor.cases < 200) {
        const ArrayLayout l = testing::random_layout(rng, 4, 10);
        for (std::size_t d = 0; d < l.rank(); ++d) {
            const CMatrix expected =
                kron(eye(l.upper_extent(d)), kron(qft_matrix(l.extent(d)), eye(l.lower_extent(d))));
            tensor.add(max_abs_diff(dense_unitary_of_circuit(dimension_block(l, d), l.total_qubits()), expected));
        }
    }
    suites.push_back(tensor);

    Suite batched{"batched block-diagonal (b <= 2)", 0, 0, 0.0, 1e-12};
    for (int i = 0; i < 200; ++i) {
        const int b = i % 3;
        const ArrayLayout l = testing::random_layout(rng, 3, 8 - b);
        const CMatrix single = dense_unitary_of_circuit(mdqft(l).circuit, l.total_qubits());
        const CMatrix u = dense_unitary_of_circuit(batched_mdqft(l, b).circuit, l.total_qubits() + b);
        batched.add(max_abs_diff(u, kron(eye(std::size_t{1} << b), single)));
    }
    suites.push_back(batched);

    Suite parseval{"Parseval on md_dft (relative)", 0, 0, 0.0, 1e-8};
    for (int i = 0; i < 200; ++i) {
        const ArrayLayout l = testing::random_layout(rng, 4, 12);
        const MdArray a = testing::random_array(l, rng);
        const double lhs = md_dft(a, DftEngine::Fft).data().squaredNorm();
        const double rhs = static_cast<double>(l.total_elements()) * a.data().squaredNorm();
        parseval.add(std::abs(lhs - rhs) / rhs);
    }
    suites.push_back(parseval);

    Suite fft{"fft_radix2 vs naive DFT, N <= 4096", 0, 0, 0.0, 1e-10};
    std::uniform_int_distribution<int> log_n(0, 12);
    for (int i = 0; i < 200; ++i) {
        // sweep every size once, then random sizes
        const int n = i <= 12 ? i : log_n(rng);
        const CVector x = testing::random_vector(Eigen::Index{1} << n, rng);
        fft.add(max_abs_diff(fft_radix2(x), dft_1d_naive(x)));
    }
    suites.push_back(fft);

    const double elapsed = seconds_since(t0);
    bool all = elapsed < 60.0;
    for (const Suite &s : suites) {
        std::cout << fmt::format("    {:<52} {:>3}/{:<3} worst {:.2e} (tol {:.0e})\n", s.name, s.passed, s.cases,
                                 s.worst, s.tol);
        all = all && s.ok();
    }
    report(5, "property suites (>= 200 cases each, < 60 s)", all,
           fmt::format("{} suites, {:.2f} s", suites.size(), elapsed));
}

void determinism() {
    const fs::path dir = fs::temp_directory_path() / ("mdqft_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::ostringstream sink;
    auto path = [&](const char *name) { return (dir / name).string(); };

    bool ok = true;
    ok &= cli::cmd_export({"8,8", false, path("a.qasm")}, sink, sink) == cli::kOk;
    ok &= cli::cmd_export({"8,8", false, path("b.qasm")}, sink, sink) == cli::kOk;
    ok &= cli::cmd_export({"8,8", true, path("c.qasm")}, sink, sink) == cli::kOk;
    ok &= cli::cmd_export({"8,8", true, path("d.qasm")}, sink, sink) == cli::kOk;
    const std::string golden = io::read_text_file(std::string(MDQFT_GOLDEN_DIR) + "/mdqft_8x8.qasm");
    const std::string golden_ns = io::read_text_file(std::string(MDQFT_GOLDEN_DIR) + "/mdqft_8x8_no_swap.qasm");
    const bool qasm = ok && io::read_text_file(path("a.qasm")) == golden && io::read_text_file(path("b.qasm")) == golden &&
                      io::read_text_file(path("c.qasm")) == golden_ns && io::read_text_file(path("d.qasm")) == golden_ns;

    io::write_array_file(path("image.json"), experiment::example_image());
    std::mt19937_64 rng(1006);
    io::write_array_file(path("rand.json"), testing::random_array(ArrayLayout({4, 8, 2}), rng));
    bool samples = true;
    for (const char *input : {"image.json", "rand.json"}) {
        samples &= cli::cmd_sample({path(input), path("s1.csv"), 16384, 7, false}, sink, sink) == cli::kOk;
        samples &= cli::cmd_sample({path(input), path("s2.csv"), 16384, 7, false}, sink, sink) == cli::kOk;
        samples &= io::read_text_file(path("s1.csv")) == io::read_text_file(path("s2.csv"));
    }
    fs::remove_all(dir);
    report(6, "export byte-identical to golden across runs; sample byte-identical for a fixed seed", qasm && samples,
           fmt::format("qasm {}, sample {}", qasm ? "identical" : "DIFFERS", samples ? "identical" : "DIFFERS"));
}

} // namespace

int main() {
    std::cout << "mdqft acceptance suite\n";
    oracle_equivalence();
    figure2();
    initialization();
    complexity();
    properties();
    determinism();
    std::cout << (failures == 0 ? "all criteria passed\n" : fmt::format("{} criteria failed\n", failures));
    return failures == 0 ? 0 : 1;
}
