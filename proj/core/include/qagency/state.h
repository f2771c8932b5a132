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

#pragma once

#include <cstddef>
#include <vector>

#include "qagency/matrix.h"

namespace qagency {

/// Normalized ket on n qubits.
class PureState {
   public:
    /// Throws unless the length is a power of two and the norm is 1 within 1e-10.
    explicit PureState(ComplexMatrix amplitudes);
    PureState(complex a0, complex a1);

    static PureState zero() { return {1.0, 0.0}; }
    static PureState one() { return {0.0, 1.0}; }
    /// Normalizes before validation; rejects the zero vector.
    static PureState normalized(ComplexMatrix amplitudes);

    const ComplexMatrix &ket() const { return ket_; }
    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return ket_.rows(); }
    complex amplitude(std::size_t k) const { return ket_(k, 0); }

    ComplexMatrix projector() const;
    /// |psi>^{(x)n}
    ComplexMatrix tensor_power(std::size_t n) const;

   private:
    ComplexMatrix ket_;
    std::size_t num_qubits_ = 0;
};

/// Hermitian, unit-trace operator on n qubits. Positivity is not checked on
/// construction (it costs a factorization); see check_positive().
class DensityMatrix {
   public:
    explicit DensityMatrix(ComplexMatrix matrix);
    DensityMatrix(const PureState &psi);  // NOLINT(google-explicit-constructor)

    static DensityMatrix maximally_mixed(std::size_t num_qubits);

    const ComplexMatrix &matrix() const { return matrix_; }
    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return matrix_.rows(); }

    double purity() const;
    bool check_positive(double tol = 1e-8) const;

   private:
    ComplexMatrix matrix_;
    std::size_t num_qubits_ = 0;
};

struct BlochVector {
    double x = 0;
    double y = 0;
    double z = 0;

    double length() const;
    double dot(const BlochVector &o) const { return x * o.x + y * o.y + z * o.z; }
    BlochVector operator-() const { return {-x, -y, -z}; }
    bool operator==(const BlochVector &) const = default;
};

/// Uhlmann fidelity. Uses <phi|rho|phi> when either argument is pure and the
/// qubit closed form tr(rho sigma) + 2 sqrt(det rho det sigma) otherwise.
/// Mixed-vs-mixed on more than one qubit is rejected.
double fidelity(const DensityMatrix &rho, const DensityMatrix &sigma);

BlochVector to_bloch(const DensityMatrix &rho);

struct BlochMetrics {
    double length = 0;
    /// Angle to the reference direction, radians. pi/2 when the direction is
    /// undefined.
    double angle_error = 0;
    bool direction_defined = true;
};

inline constexpr double kZeroLengthThreshold = 1e-9;

/// Length of the Bloch vector and its angle from `reference` (default +z,
/// i.e. the target |0>).
BlochMetrics bloch_metrics(const DensityMatrix &rho, const BlochVector &reference = {0, 0, 1});

/// Unit Bloch vector to ket; the |0> amplitude is real and non-negative.
PureState pure_from_bloch(const BlochVector &v);

/// The 26 evaluation inputs: axes, then edges, then corners; inside each
/// group the integer patterns are sorted lexicographically descending by
/// (x, y, z) before normalization.
const std::vector<PureState> &test_states();
std::vector<BlochVector> test_bloch_vectors();

}  // namespace qagency
