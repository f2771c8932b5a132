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

#include <string>
#include <utility>
#include <vector>

#include "qagency/state.h"

namespace qagency {

/// Numerical evidence for an impossibility (or symmetry) claim.
struct NoGoCertificate {
    enum class Kind {
        /// Claim holds when violation_magnitude > tolerance.
        kViolation,
        /// Claim holds when violation_magnitude <= tolerance.
        kSymmetry,
    };

    std::string claim_id;
    Kind kind = Kind::kViolation;
    std::string witness;
    double violation_magnitude = 0;
    double tolerance = 1e-9;
    /// Set when the input is one where the claim itself predicts zero
    /// violation (e.g. cloning a basis state).
    bool boundary_case = false;
    std::vector<std::pair<std::string, double>> details;

    bool valid() const;
    /// "violation", "symmetry", "boundary" or "failed".
    std::string status() const;
    /// valid() or an honest boundary case.
    bool consistent() const { return status() != "failed"; }
};

/// Runs the CNOT basis cloner (|x>|0> -> |x>|x>) on (alpha|0> + beta|1>)|0>
/// and reports || output - psi (x) psi ||.
NoGoCertificate no_cloning_witness(complex alpha, complex beta);

/// Applies the equal superposition of u0 and u1 to psi and certifies that
/// exchanging the two labels leaves the output unchanged. Throws
/// "superposition not unitary" unless (u0 + u1)/c is unitary for some c.
NoGoCertificate superposed_action_symmetry(const PureState &psi, const ComplexMatrix &u0,
                                           const ComplexMatrix &u1);

/// Normalized (u0 + u1) psi.
PureState superposed_action_output(const PureState &psi, const ComplexMatrix &u0,
                                   const ComplexMatrix &u1);

/// Searches controlled completions of a would-be best-action selector.
///
/// Controls are U1 psi = a|0> + b|1> and U2 psi = c|0> + d|1>; the third copy
/// of psi is the target. The selector maps |01>|psi> -> |01> U1|psi> and
/// |10>|psi> -> |10> U2|psi>; on |00> and |11> it applies some unitary,
/// so |00>|psi> -> |00>|t> and |11>|psi> -> |11>|t'>. The grid covers the
/// Bloch angles of t and t': polar angle k*pi/grid (k = 0..grid) and azimuth
/// k*2pi/grid (k = 0..grid-1). Doubling grid refines the search monotonically.
///
/// Each completion's output is scored as
///   (1 - largest squared Schmidt coefficient of the control|target split)
///   + min_i trace distance(top target Schmidt vector, U_i psi),
/// and the minimum over the grid is the violation magnitude.
///
/// Throws "decisive input: selector exists here" when any of a, b, c, d
/// vanishes.
NoGoCertificate selector_impossibility(const ComplexMatrix &u1, const ComplexMatrix &u2,
                                       const PureState &psi, std::size_t grid);

/// Score of one explicit completion (t, t'). Exposed for tests and audits.
double selector_deviation(const ComplexMatrix &u1, const ComplexMatrix &u2, const PureState &psi,
                          const PureState &t00, const PureState &t11);

}  // namespace qagency
