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
 * Noiseless reproduction of the 8x8 two-dimensional QFT example.
 *
 * The input image is f(x, y) = sin(pi x / 2) cos(pi y / 2) on {0..7}^2, with
 * x as dimension 1 (qubits 0-2) and y as dimension 2 (qubits 3-5). Its
 * spectrum has four peaks of equal weight at (k_x, k_y) in {2,6} x {2,6}.
 */
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mdqft/circuit.hpp"
#include "mdqft/encoding.hpp"
#include "mdqft/simulator.hpp"

namespace mdq::experiment {

inline constexpr std::uint64_t kDefaultShots = std::uint64_t{1} << 14;
inline constexpr std::uint64_t kDefaultSeed = 7;
inline constexpr double kIdealTolerance = 1e-12;
inline constexpr double kPeakBand = 0.015;
inline constexpr double kClassicalTolerance = 1e-10;

ArrayLayout image_layout();

/// f(x, y) sampled on the 8x8 grid; entries are exactly 0 or +-1.
MdArray example_image();

/// X/H preparation of the normalized image: 4 H and 3 X gates on 6 qubits.
Circuit example_init_circuit();

/// Flat indices of the four expected spectral peaks, ascending.
std::array<std::size_t, 4> peak_indices();

struct PeakCheck {
    double max_peak_error = 0.0;   ///< max |p - 1/4| over the four peaks, ideal
    double max_offpeak_prob = 0.0; ///< ideal
    bool ideal_ok = false;

    double min_peak_freq = 0.0;
    double max_peak_freq = 0.0;
    double max_offpeak_freq = 0.0;
    std::uint64_t offpeak_counts = 0;
    /// lowest sampled peak strictly above the highest off-peak frequency
    bool separated = false;
    /// every sampled peak within 1/4 +- kPeakBand
    bool within_band = false;

    double classical_max_err = 0.0;
    bool classical_agrees = false;

    bool pass() const { return ideal_ok && separated && classical_agrees; }
};

struct Figure2Report {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    MdArray image;
    Circuit init_circuit;
    QftPlan plan;
    std::vector<double> ideal_probabilities; ///< logical order
    SampleHistogram histogram;               ///< logical order
    MdArray classical_spectrum;              ///< oracle md_dft of the image
    MdArray quantum_spectrum;                ///< simulator output, classical scale
    PeakCheck peak_check;
};

/// Init circuit, swap-free 2D QFT, output permutation, sampling and checks.
Figure2Report run_figure2(std::uint64_t shots = kDefaultShots, std::uint64_t seed = kDefaultSeed);

} // namespace mdq::experiment
