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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qagency {

using complex = std::complex<double>;

/// Largest register the dense kernel will build. Every operand dimension is
/// capped at 2^kMaxQubits.
inline constexpr std::size_t kMaxQubits = 12;
inline constexpr std::size_t kMaxDimension = std::size_t{1} << kMaxQubits;

inline constexpr double kStructuralTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-12;

/// Dense row-major complex matrix. Column vectors are n x 1 matrices.
///
/// Values are immutable after construction except through the explicit
/// element accessors; all algebra returns new matrices.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries);
    /// Row-wise literal, e.g. {{0, 1}, {1, 0}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
    static ComplexMatrix column(std::span<const complex> amplitudes);
    /// Computational basis ket |index> of dimension n.
    static ComplexMatrix basis(std::size_t n, std::size_t index);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return entries_.size(); }
    bool is_square() const { return rows_ == cols_; }
    bool is_column() const { return cols_ == 1; }

    complex operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    complex &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    std::span<const complex> entries() const { return entries_; }
    std::span<complex> entries() { return entries_; }

    ComplexMatrix operator+(const ComplexMatrix &other) const;
    ComplexMatrix operator-(const ComplexMatrix &other) const;
    ComplexMatrix operator*(const ComplexMatrix &other) const;
    ComplexMatrix operator*(complex scalar) const;
    ComplexMatrix operator/(complex scalar) const;
    ComplexMatrix &operator+=(const ComplexMatrix &other);
    bool operator==(const ComplexMatrix &other) const = default;

    complex trace() const;
    double frobenius_norm() const;
    /// Largest absolute entry.
    double max_abs() const;

    std::string str() const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<complex> entries_;
};

inline ComplexMatrix operator*(complex scalar, const ComplexMatrix &m) { return m * scalar; }

/// Tensor product. Entry ((i*b.rows+k), (j*b.cols+l)) is a(i,j)*b(k,l).
/// Throws std::length_error("register too large") past kMaxDimension.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix kron_all(std::span<const ComplexMatrix> factors);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix &a);

/// ||a a^dagger - I||_max <= tol. Throws on non-square input.
bool is_unitary(const ComplexMatrix &a, double tol = kStructuralTolerance);
bool is_hermitian(const ComplexMatrix &a, double tol = kStructuralTolerance);

/// Cholesky test of a + tol*I; true iff every eigenvalue of the Hermitian
/// matrix a is >= -tol.
bool is_positive_semidefinite(const ComplexMatrix &a, double tol = 1e-8);

/// Max absolute entry deviation between equal-shaped matrices.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Reduced operator on the subsystems listed in `keep` (ascending order of
/// subsystem index is used for the output ordering). Subsystem 0 is the most
/// significant factor of the tensor product.
ComplexMatrix partial_trace(const ComplexMatrix &rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// Same result as partial_trace(|v><v|, dims, keep) without forming |v><v|.
ComplexMatrix reduced_density(const ComplexMatrix &ket, std::span<const std::size_t> dims,
                              std::span<const std::size_t> keep);

/// Product of operators in application order: ops[0] acts first, so the
/// result is ops[n-1] * ... * ops[0].
ComplexMatrix matmul_chain(std::span<const ComplexMatrix> ops);

/// <a|b> for column vectors.
complex inner(const ComplexMatrix &a, const ComplexMatrix &b);

namespace gates {
ComplexMatrix I();
ComplexMatrix X();
ComplexMatrix Y();
ComplexMatrix Z();
ComplexMatrix H();
/// n.sigma for a real 3-vector n.
ComplexMatrix pauli_along(double nx, double ny, double nz);
}  // namespace gates

}  // namespace qagency
