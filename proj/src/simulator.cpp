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

#include "mdqft/simulator.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace mdq {

SampleHistogram sample(const Statevector &state, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw ValidationError("shot count must be >= 1");
    }
    const std::vector<double> p = probabilities(state);
    std::vector<double> cdf(p.size());
    std::partial_sum(p.begin(), p.end(), cdf.begin());
    const double total = cdf.back();
    std::size_t last_support = p.size() - 1;
    while (last_support > 0 && p[last_support] == 0.0) {
        --last_support;
    }

    std::mt19937_64 rng(seed);
    SampleHistogram hist{state.num_qubits(), shots, {}};
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
        // first cdf entry strictly above u, which always has p > 0
        auto idx = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        if (idx == cdf.size()) {
            idx = last_support;
        }
        ++hist.counts[idx];
    }
    return hist;
}

SampleHistogram to_logical_order(const QftPlan &plan, const SampleHistogram &raw) {
    SampleHistogram out{raw.num_qubits, raw.shots, {}};
    for (const auto &[outcome, count] : raw.counts) {
        out.counts[plan.output_permutation(outcome)] += count;
    }
    return out;
}

MdqftRun run_mdqft(const MdArray &array, RunOptions options) {
    EncodedState enc = encode(array);
    QftPlan plan = options.no_swap ? mdqft_no_swap(array.layout()) : mdqft(array.layout());
    apply_circuit(enc.state, plan.circuit);
    return {std::move(enc.state), std::move(plan), enc.norm_factor};
}

MdArray transform(const MdArray &array, ScaleConvention convention, RunOptions options) {
    const MdqftRun run = run_mdqft(array, options);
    const Statevector logical = Statevector::from_amplitudes(to_logical_order(run.plan, run.state.amplitudes()));
    return decode(logical, run.norm_factor, array.layout(), convention, Direction::Forward);
}

MdArray inverse_transform(const MdArray &spectrum, ScaleConvention convention, RunOptions options) {
    EncodedState enc = encode(spectrum);
    const QftPlan plan = options.no_swap ? mdqft_no_swap(spectrum.layout()) : mdqft(spectrum.layout());
    Statevector state = Statevector::from_amplitudes(to_raw_order(plan, enc.state.amplitudes()));
    apply_circuit(state, adjoint(plan.circuit));
    return decode(state, enc.norm_factor, spectrum.layout(), convention, Direction::Inverse);
}

} // namespace mdq
