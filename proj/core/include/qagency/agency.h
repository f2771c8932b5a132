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

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qagency/state.h"

namespace qagency {

/// A deliberate-then-act circuit Q = C_U (U_1 (x) ... (x) U_{N-1} (x) I).
///
/// Control qubit i holds U_i applied to a copy of the input. A control bit of
/// 0 means "U_i reached the target". control_table maps each control
/// bitstring (first character = control qubit 0, the most significant
/// factor) to the single-qubit unitary applied to the last qubit.
struct AgencyCircuitSpec {
    std::string name;
    std::vector<ComplexMatrix> deliberation_unitaries;
    std::map<std::string, ComplexMatrix> control_table;
    PureState target_state = PureState::zero();

    std::size_t num_controls() const { return deliberation_unitaries.size(); }
    /// Qubits the circuit acts on: controls plus the target.
    std::size_t num_qubits() const { return num_controls() + 1; }

    /// Throws std::invalid_argument naming the first broken invariant: table
    /// size, bitstring shape, 2x2 shapes, unitarity at 1e-10.
    void validate() const;
};

enum class Regime { kCopies, kClones };

std::string_view to_string(Regime regime);
Regime parse_regime(std::string_view text);

struct RotatedPaulis {
    ComplexMatrix x, y, z;
    /// Bloch axes of x, y, z. Each has z-component 1/sqrt(3).
    std::array<BlochVector, 3> axes;
};

/// Paulis re-expressed in the frame obtained by the minimal rotation that
/// carries (1,1,1)/sqrt(3) onto +z (a rotation about (1,-1,0)/sqrt(2)), so
/// <0|X'|0> = <0|Y'|0> = <0|Z'|0> = 1/sqrt(3).
const RotatedPaulis &rotated_paulis();

/// Q_(I)X, Q_IX, Q_IHX and Q_IX'Y'Z' in that order.
const std::vector<AgencyCircuitSpec> &builtin_circuits();

/// Lookup by canonical name ("Q_IHX") or short alias ("ihx").
std::optional<AgencyCircuitSpec> find_builtin(std::string_view name);
std::vector<std::string> builtin_names();

/// C_U = sum_b |b><b| (x) V_b on (controls (x) target).
ComplexMatrix build_cu(const AgencyCircuitSpec &spec);
/// U_1 (x) ... (x) U_{N-1} (x) I.
ComplexMatrix deliberation_operator(const AgencyCircuitSpec &spec);
/// C_U after the deliberation layer.
ComplexMatrix agency_unitary(const AgencyCircuitSpec &spec);

/// Target-qubit state after running the circuit on N copies of psi.
DensityMatrix run_on_copies(const AgencyCircuitSpec &spec, const PureState &psi);
/// Target-qubit state after running the circuit on the N-qubit output of the
/// symmetric 1 -> N cloner fed with psi. Clones 1..N-1 are controls and clone
/// N is the target; the clone register is permutation symmetric, so any other
/// assignment gives the same result.
DensityMatrix run_on_clones(const AgencyCircuitSpec &spec, const PureState &psi);
DensityMatrix run(const AgencyCircuitSpec &spec, Regime regime, const PureState &psi);

struct StateRecord {
    BlochVector input;
    double fidelity = 0;
    double bloch_length = 0;
    double angle_error = 0;
    bool direction_defined = true;
};

struct Aggregate {
    double worst = 0;
    double average = 0;
    double best = 0;
    bool operator==(const Aggregate &) const = default;
};

struct Aggregates {
    Aggregate fidelity;
    Aggregate bloch_length;
    /// worst = largest error. In the average, inputs whose output has no
    /// defined direction (zero Bloch length) contribute 0 while the divisor
    /// stays the number of inputs; the worst cell still reports pi/2.
    Aggregate angle_error;
    bool operator==(const Aggregates &) const = default;
};

struct EvaluationReport {
    std::string circuit_name;
    Regime regime = Regime::kCopies;
    std::vector<StateRecord> records;
    Aggregates aggregates;
};

Aggregates aggregate(const std::vector<StateRecord> &records);

/// Precomputed regime inputs for the 26 test states, so that repeated
/// evaluation of circuits with the same width skips state preparation.
class EvaluationInputs {
   public:
    EvaluationInputs(Regime regime, std::size_t num_qubits);

    Regime regime() const { return regime_; }
    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t size() const { return inputs_.size(); }

    /// Copies: the ket psi^{(x)N} as a column. Clones: the N-qubit density matrix.
    const ComplexMatrix &input(std::size_t k) const { return inputs_[k]; }
    const BlochVector &bloch(std::size_t k) const { return bloch_[k]; }

   private:
    Regime regime_;
    std::size_t num_qubits_;
    std::vector<ComplexMatrix> inputs_;
    std::vector<BlochVector> bloch_;
};

/// Runs `regime` over test_states(). threads > 1 splits the states across
/// worker threads; the report does not depend on the thread count.
EvaluationReport evaluate(const AgencyCircuitSpec &spec, Regime regime, unsigned threads = 1);
EvaluationReport evaluate(const AgencyCircuitSpec &spec, const EvaluationInputs &inputs,
                          unsigned threads = 1);

/// True iff both basis states reach fidelity 1 (within 1e-9) in the copies
/// regime and leave a pure target (purity >= 1 - 1e-9). Throws if the pair
/// is not orthonormal within 1e-10.
bool classical_limit_check(const AgencyCircuitSpec &spec, const PureState &first,
                           const PureState &second);

}  // namespace qagency
