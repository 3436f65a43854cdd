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
 * Classical reference transforms.
 *
 * Every routine here uses the forward kernel w_N = exp(+2*pi*j/N). Most
 * third-party FFT libraries use exp(-2*pi*j/N) for the forward pass, so
 * comparing against them needs a conjugation on input and output.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "mdqft/encoding.hpp"
#include "mdqft/state.hpp"

namespace mdq {

namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

template <typename Real>
std::complex<Real> root_of_unity(std::size_t n, std::size_t power) {
    // Reduce the exponent first; large products lose phase accuracy otherwise.
    const Real angle = Real(2) * std::numbers::pi_v<Real> * Real(power % n) / Real(n);
    return {std::cos(angle), std::sin(angle)};
}

} // namespace detail

/// V_N with entries w_N^{rc}.
template <typename Real = double>
DenseMatrix<Real> vandermonde(std::size_t n) {
    if (!detail::is_pow2(n)) {
        throw ValidationError("Vandermonde size must be a power of two");
    }
    if (n > (std::size_t{1} << kDenseMaxQubits)) {
        throw CapacityError("Vandermonde size exceeds 2^12");
    }
    const auto dim = static_cast<Eigen::Index>(n);
    DenseMatrix<Real> v(dim, dim);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            v(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                detail::root_of_unity<Real>(n, r * c);
        }
    }
    return v;
}

/// The unitary QFT matrix V_N / sqrt(N).
template <typename Real = double>
DenseMatrix<Real> qft_matrix(std::size_t n) {
    return vandermonde<Real>(n) / std::sqrt(Real(n));
}

/// O(N^2) evaluation of x_hat[k] = sum_m w^{km} x[m].
template <typename Derived>
auto dft_1d_naive(const Eigen::MatrixBase<Derived> &x) {
    using Scalar = typename Derived::Scalar;
    using Real = typename Scalar::value_type;
    const auto n = static_cast<std::size_t>(x.size());
    if (!detail::is_pow2(n)) {
        throw ValidationError("DFT length must be a power of two");
    }
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out(x.size());
    for (std::size_t k = 0; k < n; ++k) {
        Scalar acc(0);
        for (std::size_t m = 0; m < n; ++m) {
            acc += detail::root_of_unity<Real>(n, k * m) * x(static_cast<Eigen::Index>(m));
        }
        out(static_cast<Eigen::Index>(k)) = acc;
    }
    return out;
}

/// Iterative radix-2 decimation-in-time Cooley-Tukey, same sign as dft_1d_naive.
template <typename Derived>
auto fft_radix2(const Eigen::MatrixBase<Derived> &x) {
    using Scalar = typename Derived::Scalar;
    using Real = typename Scalar::value_type;
    const auto n = static_cast<std::size_t>(x.size());
    if (!detail::is_pow2(n)) {
        throw ValidationError("FFT length must be a power of two");
    }
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> a = x;

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(a(static_cast<Eigen::Index>(i)), a(static_cast<Eigen::Index>(j)));
        }
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        for (std::size_t start = 0; start < n; start += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const Scalar w = detail::root_of_unity<Real>(len, k);
                const auto lo = static_cast<Eigen::Index>(start + k);
                const auto hi = static_cast<Eigen::Index>(start + k + half);
                const Scalar t = w * a(hi);
                a(hi) = a(lo) - t;
                a(lo) = a(lo) + t;
            }
        }
    }
    return a;
}

enum class DftEngine { Naive, Fft };

/**
 * Row-column multidimensional DFT: the 1-D transform is applied along
 * dimension 1 for every fixed choice of the other indices, then along
 * dimension 2, and so on. `order` overrides the dimension sequence.
 */
MdArray md_dft(const MdArray &array, DftEngine engine = DftEngine::Fft);
MdArray md_dft(const MdArray &array, DftEngine engine, std::span<const std::size_t> order);

struct SpectrumComparison {
    double max_abs_err = 0.0;
    /// Over entries whose reference magnitude exceeds abs_tol.
    double max_rel_err = 0.0;
    /// First element outside abs_tol + rel_tol * |reference|.
    std::optional<std::size_t> first_failure;
    bool pass = true;
};

/// `reference` supplies the magnitude for the relative tolerance.
SpectrumComparison compare_spectra(const MdArray &candidate, const MdArray &reference, double abs_tol,
                                   double rel_tol);

} // namespace mdq
