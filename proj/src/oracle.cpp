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

#include "mdqft/oracle.hpp"

#include <numeric>

namespace mdq {

namespace {

void transform_along(CVector &data, const ArrayLayout &layout, std::size_t dim, DftEngine engine) {
    const std::size_t n = layout.extent(dim);
    const std::size_t stride = layout.lower_extent(dim);
    const std::size_t outer = layout.upper_extent(dim);
    CVector line(static_cast<Eigen::Index>(n));
    for (std::size_t hi = 0; hi < outer; ++hi) {
        for (std::size_t lo = 0; lo < stride; ++lo) {
            const std::size_t base = hi * stride * n + lo;
            for (std::size_t k = 0; k < n; ++k) {
                line(static_cast<Eigen::Index>(k)) = data(static_cast<Eigen::Index>(base + k * stride));
            }
            const CVector out = engine == DftEngine::Naive ? CVector(dft_1d_naive(line))
                                                           : CVector(fft_radix2(line));
            for (std::size_t k = 0; k < n; ++k) {
                data(static_cast<Eigen::Index>(base + k * stride)) = out(static_cast<Eigen::Index>(k));
            }
        }
    }
}

} // namespace

MdArray md_dft(const MdArray &array, DftEngine engine) {
    std::vector<std::size_t> order(array.layout().rank());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return md_dft(array, engine, order);
}

MdArray md_dft(const MdArray &array, DftEngine engine, std::span<const std::size_t> order) {
    const ArrayLayout &layout = array.layout();
    std::vector<bool> seen(layout.rank(), false);
    if (order.size() != layout.rank()) {
        throw ValidationError("dimension order must name every dimension once");
    }
    for (std::size_t d : order) {
        if (d >= layout.rank() || seen[d]) {
            throw ValidationError("dimension order must name every dimension once");
        }
        seen[d] = true;
    }
    CVector data = array.data();
    for (std::size_t d : order) {
        transform_along(data, layout, d, engine);
    }
    return MdArray(layout, std::move(data));
}

SpectrumComparison compare_spectra(const MdArray &candidate, const MdArray &reference, double abs_tol,
                                   double rel_tol) {
    if (candidate.layout() != reference.layout()) {
        throw LayoutError("cannot compare spectra with layouts " + candidate.layout().to_string() +
                          " and " + reference.layout().to_string());
    }
    SpectrumComparison report;
    const CVector &a = candidate.data();
    const CVector &b = reference.data();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const double err = std::abs(a(i) - b(i));
        const double mag = std::abs(b(i));
        report.max_abs_err = std::max(report.max_abs_err, err);
        if (mag > abs_tol) {
            report.max_rel_err = std::max(report.max_rel_err, err / mag);
        }
        if (!(err <= abs_tol + rel_tol * mag) && !report.first_failure) {
            report.first_failure = static_cast<std::size_t>(i);
        }
    }
    report.pass = !report.first_failure.has_value();
    return report;
}

} // namespace mdq
