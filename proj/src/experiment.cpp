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

#include "mdqft/experiment.hpp"

#include <algorithm>
#include <cmath>

#include "mdqft/oracle.hpp"
#include "mdqft/qft.hpp"

namespace mdq::experiment {

namespace {

// sin(pi t / 2) and cos(pi t / 2) at integer t, without rounding residue.
constexpr std::array<double, 4> kSinQuarter{0.0, 1.0, 0.0, -1.0};
constexpr std::array<double, 4> kCosQuarter{1.0, 0.0, -1.0, 0.0};

} // namespace

ArrayLayout image_layout() { return ArrayLayout({8, 8}); }

MdArray example_image() {
    MdArray img = MdArray::zeros(image_layout());
    for (std::size_t y = 0; y < 8; ++y) {
        for (std::size_t x = 0; x < 8; ++x) {
            const std::array<std::size_t, 2> k{x, y};
            img.at(k) = kSinQuarter[x % 4] * kCosQuarter[y % 4];
        }
    }
    return img;
}

Circuit example_init_circuit() {
    Circuit c(6);
    // x register (q0 least significant): odd x, sign from bit 1, bit 2 free
    c.append(Gate::x(0));
    c.append(Gate::x(1)).append(Gate::h(1));
    c.append(Gate::h(2));
    // y register: even y, sign from bit 1, bit 2 free
    c.append(Gate::x(4)).append(Gate::h(4));
    c.append(Gate::h(5));
    return c;
}

std::array<std::size_t, 4> peak_indices() {
    const ArrayLayout layout = image_layout();
    std::array<std::size_t, 4> out{};
    std::size_t i = 0;
    for (std::size_t ky : {2, 6}) {
        for (std::size_t kx : {2, 6}) {
            const std::array<std::size_t, 2> k{kx, ky};
            out[i++] = flat_index(k, layout);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Figure2Report run_figure2(std::uint64_t shots, std::uint64_t seed) {
    const ArrayLayout layout = image_layout();
    MdArray image = example_image();
    Circuit init = example_init_circuit();
    QftPlan plan = mdqft_no_swap(layout);

    Statevector state = zero_state(layout.total_qubits());
    apply_circuit(state, init);
    apply_circuit(state, plan.circuit);

    const Statevector logical = Statevector::from_amplitudes(to_logical_order(plan, state.amplitudes()));
    std::vector<double> ideal = probabilities(logical);
    SampleHistogram hist = to_logical_order(plan, sample(state, shots, seed));

    const double norm_factor = image.data().norm();
    MdArray quantum = decode(logical, norm_factor, layout, ScaleConvention::Classical);
    MdArray classical = md_dft(image, DftEngine::Fft);

    PeakCheck check;
    const auto peaks = peak_indices();
    auto is_peak = [&](std::size_t i) { return std::find(peaks.begin(), peaks.end(), i) != peaks.end(); };

    check.min_peak_freq = 1.0;
    for (std::size_t i = 0; i < ideal.size(); ++i) {
        if (is_peak(i)) {
            check.max_peak_error = std::max(check.max_peak_error, std::abs(ideal[i] - 0.25));
            const double f = hist.frequency(i);
            check.min_peak_freq = std::min(check.min_peak_freq, f);
            check.max_peak_freq = std::max(check.max_peak_freq, f);
        } else {
            check.max_offpeak_prob = std::max(check.max_offpeak_prob, ideal[i]);
            check.max_offpeak_freq = std::max(check.max_offpeak_freq, hist.frequency(i));
            check.offpeak_counts += hist.count(i);
        }
    }
    check.ideal_ok = check.max_peak_error <= kIdealTolerance && check.max_offpeak_prob <= kIdealTolerance;
    check.separated = check.min_peak_freq > check.max_offpeak_freq;
    check.within_band = std::abs(check.min_peak_freq - 0.25) <= kPeakBand &&
                        std::abs(check.max_peak_freq - 0.25) <= kPeakBand;

    const SpectrumComparison cmp = compare_spectra(quantum, classical, kClassicalTolerance, 0.0);
    check.classical_max_err = cmp.max_abs_err;
    check.classical_agrees = cmp.pass;

    return Figure2Report{shots,
                         seed,
                         std::move(image),
                         std::move(init),
                         std::move(plan),
                         std::move(ideal),
                         std::move(hist),
                         std::move(classical),
                         std::move(quantum),
                         check};
}

} // namespace mdq::experiment
