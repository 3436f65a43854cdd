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
 * Statevector storage, norms and small dense-matrix helpers.
 *
 * Qubit 0 is the least significant bit of a basis index. Dense matrices are
 * a verification facility only and are capped at 12 qubits.
 */
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdlib>
#include <string>

#include "mdqft/errors.hpp"

namespace mdq {

template <typename Real>
using ComplexVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using DenseMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr int kDefaultMaxQubits = 26;
inline constexpr int kDenseMaxQubits = 12;

/// Upper bound on statevector size, read from MDQFT_MAX_QUBITS when set.
inline int max_qubits() {
    if (const char *env = std::getenv("MDQFT_MAX_QUBITS")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 30) {
            return static_cast<int>(v);
        }
    }
    return kDefaultMaxQubits;
}

/// Euclidean norm of any complex vector expression.
template <typename Derived>
auto norm(const Eigen::MatrixBase<Derived> &v) {
    return v.norm();
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived> &v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const auto z = v(i);
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

/**
 * Dense vector of 2^n complex amplitudes.
 *
 * Constructed states are unit-norm. Mutation goes through amplitudes(); the
 * simulator kernels are the only callers expected to use it.
 */
template <typename Real = double>
class BasicStatevector {
  public:
    using Scalar = std::complex<Real>;
    using Vector = ComplexVector<Real>;

    static constexpr Real kNormTolerance = Real(1e-10);

    /// |0...0> on num_qubits qubits.
    static BasicStatevector zero(int num_qubits) {
        check_qubits(num_qubits);
        BasicStatevector s;
        s.num_qubits_ = num_qubits;
        s.amps_ = Vector::Zero(Eigen::Index{1} << num_qubits);
        s.amps_(0) = Scalar(1);
        return s;
    }

    static BasicStatevector basis(int num_qubits, std::size_t index) {
        auto s = zero(num_qubits);
        if (index >= static_cast<std::size_t>(s.dim())) {
            throw BoundsError("basis index " + std::to_string(index) + " out of range");
        }
        s.amps_(0) = Scalar(0);
        s.amps_(static_cast<Eigen::Index>(index)) = Scalar(1);
        return s;
    }

    /// Takes ownership of amplitudes that must already be unit-norm.
    static BasicStatevector from_amplitudes(Vector amps) {
        const Eigen::Index n = amps.size();
        if (n < 2 || (n & (n - 1)) != 0) {
            throw ValidationError("amplitude count must be a power of two >= 2");
        }
        int q = 0;
        while ((Eigen::Index{1} << q) < n) {
            ++q;
        }
        check_qubits(q);
        if (!all_finite(amps)) {
            throw ValidationError("non-finite amplitude");
        }
        if (std::abs(amps.norm() - Real(1)) > kNormTolerance) {
            throw ValidationError("amplitudes are not unit-norm");
        }
        BasicStatevector s;
        s.num_qubits_ = q;
        s.amps_ = std::move(amps);
        return s;
    }

    int num_qubits() const { return num_qubits_; }
    Eigen::Index dim() const { return amps_.size(); }

    const Vector &amplitudes() const { return amps_; }
    Vector &amplitudes() { return amps_; }

    Scalar operator[](Eigen::Index i) const { return amps_(i); }

    static void check_qubits(int num_qubits) {
        const int cap = max_qubits();
        if (num_qubits < 1 || num_qubits > cap) {
            throw CapacityError("qubit count " + std::to_string(num_qubits) +
                                " outside [1, " + std::to_string(cap) + "]");
        }
    }

  private:
    BasicStatevector() = default;

    int num_qubits_ = 0;
    Vector amps_;
};

using Statevector = BasicStatevector<double>;
using CVector = ComplexVector<double>;
using CMatrix = DenseMatrix<double>;

inline Statevector zero_state(int num_qubits) { return Statevector::zero(num_qubits); }

inline double norm(const Statevector &s) { return s.amplitudes().norm(); }

/**
 * Kronecker product, (A (x) B)(i*rb + k, j*cb + l) = A(i,j) * B(k,l).
 *
 * With qubit 0 as the least significant bit, kron(I, U) acts on the low
 * qubits and kron(U, I) on the high ones.
 */
template <typename DA, typename DB>
auto kron(const Eigen::MatrixBase<DA> &a, const Eigen::MatrixBase<DB> &b) {
    using Scalar = typename DA::Scalar;
    using Result = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Eigen::Index rows = a.rows() * b.rows();
    const Eigen::Index cols = a.cols() * b.cols();
    constexpr Eigen::Index kMax = Eigen::Index{1} << kDenseMaxQubits;
    if (rows > kMax || cols > kMax) {
        throw CapacityError("kron result exceeds 2^12 x 2^12");
    }
    Result out(rows, cols);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// max_{ij} |a_ij - b_ij|
template <typename DA, typename DB>
double max_abs_diff(const Eigen::MatrixBase<DA> &a, const Eigen::MatrixBase<DB> &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw LayoutError("shape mismatch");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return static_cast<double>((a - b).cwiseAbs().maxCoeff());
}

} // namespace mdq
