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

// Reference computations used only by the tests. They go through Eigen or
// explicit index loops, never through the library's own kernels.

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

#include "qagency/matrix.h"

namespace qagency::oracle {

using Mat = Eigen::MatrixXcd;

inline Mat to_eigen(const ComplexMatrix &m) {
    Mat out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
        }
    }
    return out;
}

inline ComplexMatrix from_eigen(const Mat &m) {
    ComplexMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
        }
    }
    return out;
}

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Trace over every qubit whose bit is clear in `keep_mask` (bit q is qubit q,
/// qubit 0 the most significant), by explicit summation over basis labels.
inline Mat partial_trace_qubits(const Mat &rho, std::size_t n, unsigned keep_mask) {
    std::vector<std::size_t> kept, traced;
    for (std::size_t q = 0; q < n; ++q) {
        ((keep_mask >> q) & 1u ? kept : traced).push_back(q);
    }
    const std::size_t dk = std::size_t{1} << kept.size();
    const std::size_t dt = std::size_t{1} << traced.size();
    auto index = [&](std::size_t k_bits, std::size_t t_bits) {
        std::size_t idx = 0;
        for (std::size_t p = 0; p < kept.size(); ++p) {
            if ((k_bits >> (kept.size() - 1 - p)) & 1u) {
                idx |= std::size_t{1} << (n - 1 - kept[p]);
            }
        }
        for (std::size_t p = 0; p < traced.size(); ++p) {
            if ((t_bits >> (traced.size() - 1 - p)) & 1u) {
                idx |= std::size_t{1} << (n - 1 - traced[p]);
            }
        }
        return static_cast<Eigen::Index>(idx);
    };
    Mat out = Mat::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
    for (std::size_t a = 0; a < dk; ++a) {
        for (std::size_t b = 0; b < dk; ++b) {
            std::complex<double> s = 0;
            for (std::size_t t = 0; t < dt; ++t) {
                s += rho(index(a, t), index(b, t));
            }
            out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = s;
        }
    }
    return out;
}

inline Mat sqrt_psd(const Mat &a) {
    Eigen::SelfAdjointEigenSolver<Mat> es(a);
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

/// (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
inline double uhlmann_fidelity(const Mat &rho, const Mat &sigma) {
    const Mat s = sqrt_psd(rho);
    const Mat inner = sqrt_psd(s * sigma * s);
    const double t = inner.trace().real();
    return t * t;
}

inline double min_eigenvalue(const Mat &hermitian) {
    Eigen::SelfAdjointEigenSolver<Mat> es(hermitian);
    return es.eigenvalues().minCoeff();
}

inline double max_eigenvalue(const Mat &hermitian) {
    Eigen::SelfAdjointEigenSolver<Mat> es(hermitian);
    return es.eigenvalues().maxCoeff();
}

}  // namespace qagency::oracle
