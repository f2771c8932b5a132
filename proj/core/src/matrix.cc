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

#include "qagency/matrix.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qagency {

namespace {

void check_finite(std::span<const complex> entries) {
    for (const auto &z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("matrix entry is not finite");
        }
    }
}

void check_dimension(std::size_t n) {
    if (n > kMaxDimension) {
        throw std::length_error("register too large");
    }
}

std::string shape(const ComplexMatrix &m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(op) + ": shape mismatch " + shape(a) + " vs " +
                                    shape(b));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("matrix dimensions must be positive");
    }
    check_dimension(rows);
    check_dimension(cols);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries)
    : ComplexMatrix(rows, cols) {
    if (entries.size() != rows * cols) {
        throw std::invalid_argument("entry count does not match " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
    }
    check_finite(entries);
    entries_ = std::move(entries);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    if (rows_ == 0 || cols_ == 0) {
        throw std::invalid_argument("matrix dimensions must be positive");
    }
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ragged matrix literal");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    check_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        m(k, k) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }

ComplexMatrix ComplexMatrix::column(std::span<const complex> amplitudes) {
    return {amplitudes.size(), 1, std::vector<complex>(amplitudes.begin(), amplitudes.end())};
}

ComplexMatrix ComplexMatrix::basis(std::size_t n, std::size_t index) {
    if (index >= n) {
        throw std::out_of_range("basis index out of range");
    }
    ComplexMatrix v(n, 1);
    v(index, 0) = 1.0;
    return v;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix &other) const {
    ComplexMatrix out = *this;
    out += other;
    return out;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "add");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix &other) const {
    require_same_shape(*this, other, "subtract");
    ComplexMatrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] -= other.entries_[k];
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &other) const {
    if (cols_ != other.rows_) {
        throw std::invalid_argument("multiply: inner dimension mismatch " + shape(*this) + " * " +
                                    shape(other));
    }
    ComplexMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        const complex *a_row = &entries_[i * cols_];
        complex *o_row = &out.entries_[i * other.cols_];
        for (std::size_t k = 0; k < cols_; ++k) {
            const complex a = a_row[k];
            if (a == complex{}) {
                continue;
            }
            const complex *b_row = &other.entries_[k * other.cols_];
            for (std::size_t j = 0; j < other.cols_; ++j) {
                o_row[j] += a * b_row[j];
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(complex scalar) const {
    ComplexMatrix out = *this;
    for (auto &z : out.entries_) {
        z *= scalar;
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator/(complex scalar) const {
    if (scalar == complex{}) {
        throw std::invalid_argument("division by zero scalar");
    }
    ComplexMatrix out = *this;
    for (auto &z : out.entries_) {
        z /= scalar;
    }
    return out;
}

complex ComplexMatrix::trace() const {
    if (!is_square()) {
        throw std::invalid_argument("trace of non-square matrix " + shape(*this));
    }
    complex t{};
    for (std::size_t k = 0; k < rows_; ++k) {
        t += (*this)(k, k);
    }
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0;
    for (const auto &z : entries_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0;
    for (const auto &z : entries_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

std::string ComplexMatrix::str() const {
    std::ostringstream out;
    out.precision(6);
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j) {
            const complex z = (*this)(i, j);
            out << (j ? ", " : "") << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag())
                << "i";
        }
        out << (i + 1 == rows_ ? "]" : "\n");
    }
    return out.str();
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    check_dimension(a.rows() * b.rows());
    check_dimension(a.cols() * b.cols());
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const complex s = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix kron_all(std::span<const ComplexMatrix> factors) {
    if (factors.empty()) {
        throw std::invalid_argument("kron_all of empty list");
    }
    ComplexMatrix out = factors[0];
    for (std::size_t k = 1; k < factors.size(); ++k) {
        out = kron(out, factors[k]);
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix &a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

bool is_unitary(const ComplexMatrix &a, double tol) {
    if (!a.is_square()) {
        throw std::invalid_argument("is_unitary: non-square matrix " + shape(a));
    }
    if (!(tol > 0)) {
        throw std::invalid_argument("is_unitary: tolerance must be positive");
    }
    return max_abs_diff(a * dagger(a), ComplexMatrix::identity(a.rows())) <= tol;
}

bool is_hermitian(const ComplexMatrix &a, double tol) {
    if (!a.is_square()) {
        return false;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i; j < a.cols(); ++j) {
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool is_positive_semidefinite(const ComplexMatrix &a, double tol) {
    if (!is_hermitian(a, 1e-8)) {
        return false;
    }
    const std::size_t n = a.rows();
    // Lower-triangular Cholesky factor of a + tol*I.
    std::vector<complex> l(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        double diag = a(j, j).real() + tol;
        for (std::size_t k = 0; k < j; ++k) {
            diag -= std::norm(l[j * n + k]);
        }
        if (!(diag > 0)) {
            return false;
        }
        const double ljj = std::sqrt(diag);
        l[j * n + j] = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            complex s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) {
                s -= l[i * n + k] * std::conj(l[j * n + k]);
            }
            l[i * n + j] = s / ljj;
        }
    }
    return true;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return m;
}

namespace {

struct TraceLayout {
    std::vector<std::size_t> kept;    // ascending subsystem indices
    std::vector<std::size_t> traced;  // the complement, ascending
    std::size_t kept_dim = 1;
    std::size_t traced_dim = 1;
    std::vector<std::size_t> strides;  // stride of each subsystem in the full index
};

TraceLayout make_layout(std::size_t total_dim, std::span<const std::size_t> dims,
                        std::span<const std::size_t> keep) {
    if (dims.empty()) {
        throw std::invalid_argument("partial_trace: empty subsystem list");
    }
    std::size_t product = 1;
    for (auto d : dims) {
        if (d == 0) {
            throw std::invalid_argument("partial_trace: zero subsystem dimension");
        }
        product *= d;
        check_dimension(product);
    }
    if (product != total_dim) {
        throw std::invalid_argument("partial_trace: dims product " + std::to_string(product) +
                                    " does not match dimension " + std::to_string(total_dim));
    }
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: keep set is empty");
    }
    TraceLayout layout;
    std::vector<bool> kept(dims.size(), false);
    for (auto k : keep) {
        if (k >= dims.size()) {
            throw std::out_of_range("partial_trace: subsystem index " + std::to_string(k) +
                                    " out of range");
        }
        kept[k] = true;
    }
    layout.strides.resize(dims.size());
    std::size_t stride = 1;
    for (std::size_t s = dims.size(); s-- > 0;) {
        layout.strides[s] = stride;
        stride *= dims[s];
    }
    for (std::size_t s = 0; s < dims.size(); ++s) {
        if (kept[s]) {
            layout.kept.push_back(s);
            layout.kept_dim *= dims[s];
        } else {
            layout.traced.push_back(s);
            layout.traced_dim *= dims[s];
        }
    }
    return layout;
}

// Full-register offsets for each multi-index over the given subsystems, in
// row-major order of those subsystems.
std::vector<std::size_t> offsets(std::span<const std::size_t> dims,
                                 const std::vector<std::size_t> &subsystems,
                                 const std::vector<std::size_t> &strides) {
    std::vector<std::size_t> out{0};
    for (auto s : subsystems) {
        std::vector<std::size_t> next;
        next.reserve(out.size() * dims[s]);
        for (auto base : out) {
            for (std::size_t v = 0; v < dims[s]; ++v) {
                next.push_back(base + v * strides[s]);
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix &rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
    if (!rho.is_square()) {
        throw std::invalid_argument("partial_trace: non-square operator " + shape(rho));
    }
    const auto layout = make_layout(rho.rows(), dims, keep);
    const auto kept_off = offsets(dims, layout.kept, layout.strides);
    const auto traced_off = offsets(dims, layout.traced, layout.strides);
    ComplexMatrix out(layout.kept_dim, layout.kept_dim);
    for (std::size_t i = 0; i < layout.kept_dim; ++i) {
        for (std::size_t j = 0; j < layout.kept_dim; ++j) {
            complex s{};
            for (auto t : traced_off) {
                s += rho(kept_off[i] + t, kept_off[j] + t);
            }
            out(i, j) = s;
        }
    }
    return out;
}

ComplexMatrix reduced_density(const ComplexMatrix &ket, std::span<const std::size_t> dims,
                              std::span<const std::size_t> keep) {
    if (!ket.is_column()) {
        throw std::invalid_argument("reduced_density: expected a column vector, got " + shape(ket));
    }
    const auto layout = make_layout(ket.rows(), dims, keep);
    const auto kept_off = offsets(dims, layout.kept, layout.strides);
    const auto traced_off = offsets(dims, layout.traced, layout.strides);
    ComplexMatrix out(layout.kept_dim, layout.kept_dim);
    for (std::size_t i = 0; i < layout.kept_dim; ++i) {
        for (std::size_t j = i; j < layout.kept_dim; ++j) {
            complex s{};
            for (auto t : traced_off) {
                s += ket(kept_off[i] + t, 0) * std::conj(ket(kept_off[j] + t, 0));
            }
            out(i, j) = s;
            out(j, i) = std::conj(s);
        }
    }
    return out;
}

ComplexMatrix matmul_chain(std::span<const ComplexMatrix> ops) {
    if (ops.empty()) {
        throw std::invalid_argument("matmul_chain: empty operator list");
    }
    ComplexMatrix out = ops[0];
    for (std::size_t k = 1; k < ops.size(); ++k) {
        if (ops[k].cols() != out.rows()) {
            throw std::invalid_argument("matmul_chain: operator " + std::to_string(k - 1) + " (" +
                                        shape(ops[k - 1]) + ") cannot feed operator " +
                                        std::to_string(k) + " (" + shape(ops[k]) + ")");
        }
        out = ops[k] * out;
    }
    return out;
}

complex inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (!a.is_column() || !b.is_column() || a.rows() != b.rows()) {
        throw std::invalid_argument("inner: expected equal-length column vectors");
    }
    complex s{};
    for (std::size_t k = 0; k < a.rows(); ++k) {
        s += std::conj(a(k, 0)) * b(k, 0);
    }
    return s;
}

namespace gates {

ComplexMatrix I() { return ComplexMatrix::identity(2); }
ComplexMatrix X() { return {{0, 1}, {1, 0}}; }
ComplexMatrix Y() { return {{0, complex{0, -1}}, {complex{0, 1}, 0}}; }
ComplexMatrix Z() { return {{1, 0}, {0, -1}}; }
ComplexMatrix H() { return (X() + Z()) * (1 / std::sqrt(2.0)); }

ComplexMatrix pauli_along(double nx, double ny, double nz) {
    return {{nz, complex{nx, -ny}}, {complex{nx, ny}, -nz}};
}

}  // namespace gates

}  // namespace qagency
