// Copyright 2026 The qagency Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qagency/state.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qagency {

namespace {

std::size_t qubits_for(std::size_t dim) {
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("dimension " + std::to_string(dim) +
                                    " is not a qubit register");
    }
    return static_cast<std::size_t>(std::countr_zero(dim));
}

}  // namespace

PureState::PureState(ComplexMatrix amplitudes) : ket_(std::move(amplitudes)) {
    if (!ket_.is_column()) {
        throw std::invalid_argument("PureState expects a column vector");
    }
    num_qubits_ = qubits_for(ket_.rows());
    const double n = ket_.frobenius_norm();
    if (std::abs(n * n - 1) > kStructuralTolerance) {
        throw std::invalid_argument("PureState is not normalized (norm^2 = " +
                                    std::to_string(n * n) + ")");
    }
}

PureState::PureState(complex a0, complex a1) : PureState(ComplexMatrix{{a0}, {a1}}) {}

PureState PureState::normalized(ComplexMatrix amplitudes) {
    const double n = amplitudes.frobenius_norm();
    if (!(n > 0)) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    return PureState(amplitudes / n);
}

ComplexMatrix PureState::projector() const { return ket_ * dagger(ket_); }

ComplexMatrix PureState::tensor_power(std::size_t n) const {
    if (n == 0) {
        throw std::invalid_argument("tensor power must be positive");
    }
    ComplexMatrix out = ket_;
    for (std::size_t k = 1; k < n; ++k) {
        out = kron(out, ket_);
    }
    return out;
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    if (!matrix_.is_square()) {
        throw std::invalid_argument("density matrix must be square");
    }
    num_qubits_ = qubits_for(matrix_.rows());
    if (!is_hermitian(matrix_, kStructuralTolerance)) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    const complex t = matrix_.trace();
    if (std::abs(t - 1.0) > kStructuralTolerance) {
        throw std::invalid_argument("density matrix trace is " + std::to_string(t.real()));
    }
}

DensityMatrix::DensityMatrix(const PureState &psi) : DensityMatrix(psi.projector()) {}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    return DensityMatrix(ComplexMatrix::identity(dim) * (1.0 / static_cast<double>(dim)));
}

double DensityMatrix::purity() const {
    // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    const double f = matrix_.frobenius_norm();
    return f * f;
}

bool DensityMatrix::check_positive(double tol) const {
    return is_positive_semidefinite(matrix_, tol);
}

double BlochVector::length() const { return std::sqrt(x * x + y * y + z * z); }

namespace {

constexpr double kPureThreshold = 1e-10;

double det2(const ComplexMatrix &m) { return (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real(); }

// <phi|rho|phi> where phi spans the range of a pure density matrix.
double overlap_with_pure(const ComplexMatrix &pure, const ComplexMatrix &rho) {
    // tr(pure * rho) equals <phi|rho|phi> when pure = |phi><phi|.
    complex s{};
    const std::size_t n = pure.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            s += pure(i, j) * rho(j, i);
        }
    }
    return s.real();
}

}  // namespace

double fidelity(const DensityMatrix &rho, const DensityMatrix &sigma) {
    if (rho.dimension() != sigma.dimension()) {
        throw std::invalid_argument("fidelity: dimension mismatch");
    }
    double f;
    if (std::abs(sigma.purity() - 1) <= kPureThreshold) {
        f = overlap_with_pure(sigma.matrix(), rho.matrix());
    } else if (std::abs(rho.purity() - 1) <= kPureThreshold) {
        f = overlap_with_pure(rho.matrix(), sigma.matrix());
    } else if (rho.dimension() == 2) {
        const double cross = overlap_with_pure(rho.matrix(), sigma.matrix());
        const double dets = std::max(0.0, det2(rho.matrix())) * std::max(0.0, det2(sigma.matrix()));
        f = cross + 2 * std::sqrt(dets);
    } else {
        throw std::invalid_argument("fidelity: mixed-vs-mixed states are supported for one qubit only");
    }
    return std::clamp(f, 0.0, 1.0);
}

BlochVector to_bloch(const DensityMatrix &rho) {
    if (rho.num_qubits() != 1) {
        throw std::invalid_argument("to_bloch: expected a single-qubit state");
    }
    const auto &m = rho.matrix();
    // tr(rho X) = 2 Re rho01, tr(rho Y) = -2 Im rho01, tr(rho Z) = rho00 - rho11.
    return {2 * m(0, 1).real(), -2 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

BlochMetrics bloch_metrics(const DensityMatrix &rho, const BlochVector &reference) {
    const BlochVector v = to_bloch(rho);
    BlochMetrics out;
    out.length = v.length();
    if (out.length < kZeroLengthThreshold) {
        out.angle_error = std::numbers::pi / 2;
        out.direction_defined = false;
        return out;
    }
    const double c = v.dot(reference) / (out.length * reference.length());
    out.angle_error = std::acos(std::clamp(c, -1.0, 1.0));
    return out;
}

PureState pure_from_bloch(const BlochVector &v) {
    if (std::abs(v.length() - 1) > 1e-9) {
        throw std::invalid_argument("pure_from_bloch: Bloch vector is not unit length");
    }
    const double z = std::clamp(v.z, -1.0, 1.0);
    const double a = std::sqrt((1 + z) / 2);
    const double sin_half = std::sqrt((1 - z) / 2);
    const double rho = std::hypot(v.x, v.y);
    complex phase = 1.0;
    if (rho > 1e-15) {
        phase = complex{v.x, v.y} / rho;
    }
    return PureState::normalized(ComplexMatrix{{a}, {phase * sin_half}});
}

namespace {

std::vector<BlochVector> build_test_vectors() {
    std::array<std::vector<std::array<int, 3>>, 3> groups;
    for (int x = 1; x >= -1; --x) {
        for (int y = 1; y >= -1; --y) {
            for (int z = 1; z >= -1; --z) {
                const int nonzero = (x != 0) + (y != 0) + (z != 0);
                if (nonzero > 0) {
                    groups[nonzero - 1].push_back({x, y, z});
                }
            }
        }
    }
    std::vector<BlochVector> out;
    for (const auto &group : groups) {
        for (const auto &p : group) {
            const double n = std::sqrt(static_cast<double>(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]));
            out.push_back({p[0] / n, p[1] / n, p[2] / n});
        }
    }
    return out;
}

}  // namespace

std::vector<BlochVector> test_bloch_vectors() { return build_test_vectors(); }

const std::vector<PureState> &test_states() {
    static const std::vector<PureState> states = [] {
        std::vector<PureState> out;
        for (const auto &v : build_test_vectors()) {
            out.push_back(pure_from_bloch(v));
        }
        return out;
    }();
    return states;
}

}  // namespace qagency
