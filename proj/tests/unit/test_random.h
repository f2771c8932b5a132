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

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>

#include "oracles.h"
#include "qagency/matrix.h"
#include "qagency/rng.h"
#include "qagency/state.h"

namespace qagency::testing {

inline double gaussian(Rng &rng) {
    const double u1 = 1.0 - rng.uniform();
    const double u2 = rng.uniform();
    return std::sqrt(-2 * std::log(u1)) * std::cos(2 * std::numbers::pi * u2);
}

inline ComplexMatrix random_ket(Rng &rng, std::size_t dim) {
    ComplexMatrix v(dim, 1);
    double norm2 = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        v(i, 0) = {gaussian(rng), gaussian(rng)};
        norm2 += std::norm(v(i, 0));
    }
    return v / std::sqrt(norm2);
}

inline PureState random_qubit(Rng &rng) { return PureState(random_ket(rng, 2)); }

/// Haar-random unitary: QR of a complex Ginibre matrix with the phases of
/// R's diagonal folded back into Q.
inline ComplexMatrix random_unitary(Rng &rng, std::size_t dim) {
    oracle::Mat g(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            g(i, j) = {gaussian(rng), gaussian(rng)};
        }
    }
    Eigen::HouseholderQR<oracle::Mat> qr(g);
    oracle::Mat q = qr.householderQ();
    const oracle::Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        q.col(j) *= r(j, j) / std::abs(r(j, j));
    }
    return oracle::from_eigen(q);
}

/// Random density matrix of rank up to `dim`: normalized G G^dagger.
inline ComplexMatrix random_density(Rng &rng, std::size_t dim) {
    ComplexMatrix g(dim, dim);
    for (auto &z : g.entries()) {
        z = {gaussian(rng), gaussian(rng)};
    }
    ComplexMatrix rho = g * dagger(g);
    return rho / rho.trace();
}

}  // namespace qagency::testing
