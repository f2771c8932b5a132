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
#include <cstdint>

#include "qagency/rng.h"
#include "qagency/state.h"

namespace qagency {

inline constexpr std::size_t kMaxClones = 6;

/// Output of a symmetric universal 1 -> m cloner with the ancilla traced out.
struct CloneEnsemble {
    DensityMatrix state;
    std::size_t m;
    BlochVector source_bloch;

    /// Reduced state of clone `index` (0-based).
    DensityMatrix marginal(std::size_t index) const;
};

/// Optimal universal 1 -> m cloner applied to `psi`.
///
/// The clone+ancilla register is prepared as
///   sum_j alpha_j |S_j(psi)>_clones (x) |R_j(psi)>_ancilla,
///   alpha_j = sqrt(2 (m - j) / (m (m + 1))),
/// where S_j is the normalized symmetric state with m - j copies of psi and
/// j copies of psi_perp, and R_j is the symmetric (m - 1)-qubit anti-clone
/// with m - 1 - j copies of psi_perp and j copies of psi. The (m - 1)
/// ancilla qubits are then traced out. psi_perp = -conj(b)|0> + conj(a)|1>
/// for psi = a|0> + b|1>.
///
/// Requires 2 <= m <= 6.
CloneEnsemble symmetric_clone(const PureState &psi, std::size_t m);

/// The normalized symmetric ket with `ones` copies of `second` and the rest
/// `first`, over `total` qubits. Exposed for tests.
ComplexMatrix symmetric_ket(const ComplexMatrix &first, const ComplexMatrix &second,
                            std::size_t total, std::size_t ones);

/// Optimal N -> M universal cloning fidelity (MN + M + N) / (M (N + 2)).
double nm_fidelity_bound(std::size_t n, std::size_t m);

/// sqrt((1-fa)(1-fb)) >= 1/2 - (1-fa) - (1-fb), i.e. whether an asymmetric
/// universal 1 -> 2 cloner can reach the pair. Equality is the optimal curve. Inputs must lie in [0, 1].
bool asymmetric_bound_check(double fa, double fb);

/// Mean fidelity of Haar-random pure qubits against `reference`.
double haar_baseline(std::size_t num_samples, std::uint64_t seed,
                     const PureState &reference = PureState::zero());

/// Mean per-copy fidelity when the original is kept and the other m - 1
/// "copies" are Haar-random guesses.
double original_plus_guess_baseline(std::size_t num_samples, std::uint64_t seed, std::size_t m = 2,
                                    const PureState &reference = PureState::zero());

/// One Haar-random pure qubit.
PureState haar_random_qubit(Rng &rng);

}  // namespace qagency
