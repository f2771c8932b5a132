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

#include "qagency/cloning.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qagency {

namespace {

ComplexMatrix perpendicular(const ComplexMatrix &ket) {
    return ComplexMatrix{{-std::conj(ket(1, 0))}, {std::conj(ket(0, 0))}};
}

// Visits every placement of `ones` marked positions among `total` slots.
template <typename F>
void for_each_placement(std::size_t total, std::size_t ones, F &&visit) {
    std::vector<bool> marked(total, false);
    std::fill(marked.end() - static_cast<std::ptrdiff_t>(ones), marked.end(), true);
    do {
        visit(marked);
    } while (std::next_permutation(marked.begin(), marked.end()));
}

}  // namespace

ComplexMatrix symmetric_ket(const ComplexMatrix &first, const ComplexMatrix &second,
                            std::size_t total, std::size_t ones) {
    if (total == 0 || ones > total) {
        throw std::invalid_argument("symmetric_ket: need 0 <= ones <= total, total > 0");
    }
    ComplexMatrix sum = ComplexMatrix::zeros(std::size_t{1} << total, 1);
    for_each_placement(total, ones, [&](const std::vector<bool> &marked) {
        ComplexMatrix term = marked[0] ? second : first;
        for (std::size_t k = 1; k < total; ++k) {
            term = kron(term, marked[k] ? second : first);
        }
        sum += term;
    });
    return sum / sum.frobenius_norm();
}

DensityMatrix CloneEnsemble::marginal(std::size_t index) const {
    if (index >= m) {
        throw std::out_of_range("clone index out of range");
    }
    const std::vector<std::size_t> dims(m, 2);
    const std::size_t keep[] = {index};
    return DensityMatrix(partial_trace(state.matrix(), dims, keep));
}

CloneEnsemble symmetric_clone(const PureState &psi, std::size_t m) {
    if (psi.num_qubits() != 1) {
        throw std::invalid_argument("symmetric_clone: input must be a single qubit");
    }
    if (m < 2) {
        throw std::invalid_argument("symmetric_clone: need at least 2 clones");
    }
    if (m > kMaxClones || 2 * m - 1 > kMaxQubits) {
        throw std::length_error("register too large");
    }
    const ComplexMatrix &ket = psi.ket();
    const ComplexMatrix perp = perpendicular(ket);
    const std::size_t ancillae = m - 1;
    const double md = static_cast<double>(m);

    ComplexMatrix joint = ComplexMatrix::zeros(std::size_t{1} << (m + ancillae), 1);
    for (std::size_t j = 0; j < m; ++j) {
        const double alpha = std::sqrt(2.0 * static_cast<double>(m - j) / (md * (md + 1)));
        const ComplexMatrix clones = symmetric_ket(ket, perp, m, j);
        const ComplexMatrix anti = symmetric_ket(perp, ket, ancillae, j);
        joint += kron(clones, anti) * alpha;
    }

    std::vector<std::size_t> dims(m + ancillae, 2);
    std::vector<std::size_t> keep(m);
    for (std::size_t k = 0; k < m; ++k) {
        keep[k] = k;
    }
    return CloneEnsemble{DensityMatrix(reduced_density(joint, dims, keep)), m,
                         to_bloch(DensityMatrix(psi))};
}

double nm_fidelity_bound(std::size_t n, std::size_t m) {
    if (n == 0) {
        throw std::invalid_argument("nm_fidelity_bound: need at least one original");
    }
    if (m < n) {
        throw std::invalid_argument("cloning cannot reduce copy count");
    }
    const double nd = static_cast<double>(n);
    const double md = static_cast<double>(m);
    return (md * nd + md + nd) / (md * (nd + 2));
}

bool asymmetric_bound_check(double fa, double fb) {
    if (!(fa >= 0 && fa <= 1 && fb >= 0 && fb <= 1)) {
        throw std::invalid_argument("asymmetric_bound_check: fidelities must lie in [0, 1]");
    }
    const double ea = 1 - fa;
    const double eb = 1 - fb;
    const double lhs = std::sqrt(ea * eb);
    const double rhs = 0.5 - ea - eb;
    return lhs >= rhs - 1e-12;
}

PureState haar_random_qubit(Rng &rng) {
    // Uniform on the sphere: z uniform in [-1, 1], azimuth uniform.
    const double z = rng.uniform(-1, 1);
    const double phi = rng.uniform(0, 2 * std::numbers::pi);
    const double r = std::sqrt(std::max(0.0, 1 - z * z));
    return pure_from_bloch({r * std::cos(phi), r * std::sin(phi), z});
}

double haar_baseline(std::size_t num_samples, std::uint64_t seed, const PureState &reference) {
    if (num_samples == 0) {
        throw std::invalid_argument("haar_baseline: need at least one sample");
    }
    Rng rng(seed);
    const DensityMatrix ref(reference);
    double sum = 0;
    for (std::size_t k = 0; k < num_samples; ++k) {
        sum += fidelity(DensityMatrix(haar_random_qubit(rng)), ref);
    }
    return sum / static_cast<double>(num_samples);
}

double original_plus_guess_baseline(std::size_t num_samples, std::uint64_t seed, std::size_t m,
                                    const PureState &reference) {
    if (num_samples == 0 || m < 1) {
        throw std::invalid_argument("original_plus_guess_baseline: need samples and m >= 1");
    }
    Rng rng(seed);
    const DensityMatrix ref(reference);
    const double md = static_cast<double>(m);
    double sum = 0;
    for (std::size_t k = 0; k < num_samples; ++k) {
        double guesses = 0;
        for (std::size_t g = 1; g < m; ++g) {
            guesses += fidelity(DensityMatrix(haar_random_qubit(rng)), ref);
        }
        sum += (1.0 + guesses) / md;
    }
    return sum / static_cast<double>(num_samples);
}

}  // namespace qagency
