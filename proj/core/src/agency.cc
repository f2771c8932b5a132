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

#include "qagency/agency.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "qagency/cloning.h"

namespace qagency {

namespace {

std::size_t bitstring_index(const std::string &bits) {
    std::size_t k = 0;
    for (char c : bits) {
        k = 2 * k + static_cast<std::size_t>(c == '1');
    }
    return k;
}

std::string bitstring(std::size_t value, std::size_t width) {
    std::string out(width, '0');
    for (std::size_t k = 0; k < width; ++k) {
        if ((value >> (width - 1 - k)) & 1) {
            out[k] = '1';
        }
    }
    return out;
}

}  // namespace

void AgencyCircuitSpec::validate() const {
    if (name.empty()) {
        throw std::invalid_argument("circuit spec has no name");
    }
    const std::size_t n = num_controls();
    if (n == 0) {
        throw std::invalid_argument(name + ": at least one deliberation unitary is required");
    }
    if (n + 1 > kMaxClones) {
        throw std::length_error("register too large");
    }
    for (std::size_t k = 0; k < n; ++k) {
        const auto &u = deliberation_unitaries[k];
        if (u.rows() != 2 || u.cols() != 2) {
            throw std::invalid_argument(name + ": deliberation unitary " + std::to_string(k) +
                                        " is not 2x2");
        }
        if (!is_unitary(u)) {
            throw std::invalid_argument(name + ": deliberation unitary " + std::to_string(k) +
                                        " is not unitary");
        }
    }
    if (control_table.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument(name + ": control table needs " +
                                    std::to_string(std::size_t{1} << n) + " entries, has " +
                                    std::to_string(control_table.size()));
    }
    for (const auto &[bits, v] : control_table) {
        if (bits.size() != n || bits.find_first_not_of("01") != std::string::npos) {
            throw std::invalid_argument(name + ": malformed control bitstring '" + bits + "'");
        }
        if (v.rows() != 2 || v.cols() != 2) {
            throw std::invalid_argument(name + ": entry |" + bits + "> is not 2x2");
        }
        if (!is_unitary(v)) {
            throw std::invalid_argument(name + ": entry |" + bits + "> is not unitary");
        }
    }
    if (target_state.num_qubits() != 1) {
        throw std::invalid_argument(name + ": target state must be a single qubit");
    }
}

std::string_view to_string(Regime regime) {
    return regime == Regime::kCopies ? "copies" : "clones";
}

Regime parse_regime(std::string_view text) {
    if (text == "copies") {
        return Regime::kCopies;
    }
    if (text == "clones") {
        return Regime::kClones;
    }
    throw std::invalid_argument("unknown regime '" + std::string(text) + "'");
}

const RotatedPaulis &rotated_paulis() {
    static const RotatedPaulis paulis = [] {
        // Rodrigues rotation taking a = (1,1,1)/sqrt3 onto z about k = a x z / |a x z|.
        const double s3 = std::sqrt(3.0);
        const double cos_t = 1 / s3;
        const double sin_t = std::sqrt(2.0 / 3.0);
        const double kx = 1 / std::sqrt(2.0);
        const double ky = -1 / std::sqrt(2.0);
        const double kz = 0;
        const double kk[3][3] = {{0, -kz, ky}, {kz, 0, -kx}, {-ky, kx, 0}};
        double r[3][3];
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                double k2 = 0;
                for (int l = 0; l < 3; ++l) {
                    k2 += kk[i][l] * kk[l][j];
                }
                r[i][j] = (i == j ? 1.0 : 0.0) + sin_t * kk[i][j] + (1 - cos_t) * k2;
            }
        }
        RotatedPaulis out;
        for (int c = 0; c < 3; ++c) {
            out.axes[c] = {r[0][c], r[1][c], r[2][c]};
        }
        out.x = gates::pauli_along(out.axes[0].x, out.axes[0].y, out.axes[0].z);
        out.y = gates::pauli_along(out.axes[1].x, out.axes[1].y, out.axes[1].z);
        out.z = gates::pauli_along(out.axes[2].x, out.axes[2].y, out.axes[2].z);
        return out;
    }();
    return paulis;
}

namespace {

const complex kI{0, 1};

std::vector<AgencyCircuitSpec> make_builtins() {
    using gates::H;
    using gates::X;
    const ComplexMatrix id = gates::I();
    const double r2 = std::sqrt(2.0);
    const double r3 = std::sqrt(3.0);
    const auto &rp = rotated_paulis();
    const ComplexMatrix &xp = rp.x;
    const ComplexMatrix &yp = rp.y;
    const ComplexMatrix &zp = rp.z;

    std::vector<AgencyCircuitSpec> out;

    out.push_back({"Q_(I)X", {X()}, {{"0", X()}, {"1", id}}});

    out.push_back({"Q_IX",
                   {id, X()},
                   {{"00", (id + kI * X()) / r2},
                    {"01", id},
                    {"10", X()},
                    {"11", (id - kI * X()) / r2}}});

    out.push_back({"Q_IHX",
                   {id, H(), X()},
                   {{"000", (id + kI * H() + kI * X()) / std::sqrt(3 + r2)},
                    {"001", (id - kI * H()) / r2},
                    {"010", (id + kI * X()) / r2},
                    {"011", id},
                    {"100", (H() + X()) / std::sqrt(2 + r2)},
                    {"101", H()},
                    {"110", X()},
                    {"111", (id + kI * H() - kI * X()) / std::sqrt(3 - r2)}}});

    out.push_back({"Q_IX'Y'Z'",
                   {id, xp, yp, zp},
                   {{"0000", (id + kI * xp + kI * yp + kI * zp) / 2.0},
                    {"0001", (id + kI * xp + kI * yp) / r3},
                    {"0010", (id - kI * xp + kI * zp) / r3},
                    {"0011", (id + kI * xp) / r2},
                    {"0100", (id - kI * yp - kI * zp) / r3},
                    {"0101", (id + kI * yp) / r2},
                    {"0110", (id + kI * zp) / r2},
                    {"0111", id},
                    {"1000", (xp + yp + zp) / r3},
                    {"1001", (xp - yp) / r2},
                    {"1010", (zp - xp) / r2},
                    {"1011", xp},
                    {"1100", (yp - zp) / r2},
                    {"1101", yp},
                    {"1110", zp},
                    {"1111", (id - kI * xp - kI * yp - kI * zp) / 2.0}}});

    for (const auto &spec : out) {
        spec.validate();
    }
    return out;
}

const std::map<std::string, std::string> &aliases() {
    static const std::map<std::string, std::string> table = {
        {"proto", "Q_(I)X"}, {"ix", "Q_IX"}, {"ihx", "Q_IHX"}, {"ixyz", "Q_IX'Y'Z'"}};
    return table;
}

}  // namespace

const std::vector<AgencyCircuitSpec> &builtin_circuits() {
    static const std::vector<AgencyCircuitSpec> specs = make_builtins();
    return specs;
}

std::optional<AgencyCircuitSpec> find_builtin(std::string_view name) {
    std::string key(name);
    std::string lower = key;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (auto it = aliases().find(lower); it != aliases().end()) {
        key = it->second;
    }
    for (const auto &spec : builtin_circuits()) {
        if (spec.name == key) {
            return spec;
        }
    }
    return std::nullopt;
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> out;
    for (const auto &spec : builtin_circuits()) {
        out.push_back(spec.name);
    }
    return out;
}

ComplexMatrix build_cu(const AgencyCircuitSpec &spec) {
    const std::size_t n = spec.num_controls();
    const std::size_t blocks = std::size_t{1} << n;
    ComplexMatrix cu(2 * blocks, 2 * blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::string bits = bitstring(b, n);
        const auto it = spec.control_table.find(bits);
        if (it == spec.control_table.end()) {
            throw std::invalid_argument(spec.name + ": missing control table entry |" + bits + ">");
        }
        const ComplexMatrix &v = it->second;
        if (v.rows() != 2 || v.cols() != 2 || !is_unitary(v)) {
            throw std::invalid_argument(spec.name + ": entry |" + bits + "> is not a 2x2 unitary");
        }
        const std::size_t off = 2 * bitstring_index(bits);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                cu(off + i, off + j) = v(i, j);
            }
        }
    }
    return cu;
}

ComplexMatrix deliberation_operator(const AgencyCircuitSpec &spec) {
    std::vector<ComplexMatrix> factors = spec.deliberation_unitaries;
    factors.push_back(gates::I());
    return kron_all(factors);
}

ComplexMatrix agency_unitary(const AgencyCircuitSpec &spec) {
    const ComplexMatrix layers[] = {deliberation_operator(spec), build_cu(spec)};
    return matmul_chain(layers);
}

namespace {

std::vector<std::size_t> register_dims(std::size_t num_qubits) {
    return std::vector<std::size_t>(num_qubits, 2);
}

DensityMatrix target_from_ket(const ComplexMatrix &q, const ComplexMatrix &ket,
                              std::size_t num_qubits) {
    const auto dims = register_dims(num_qubits);
    const std::size_t keep[] = {num_qubits - 1};
    return DensityMatrix(reduced_density(q * ket, dims, keep));
}

DensityMatrix target_from_density(const ComplexMatrix &q, const ComplexMatrix &rho,
                                  std::size_t num_qubits) {
    const auto dims = register_dims(num_qubits);
    const std::size_t keep[] = {num_qubits - 1};
    return DensityMatrix(partial_trace(q * rho * dagger(q), dims, keep));
}

void require_qubit(const PureState &psi) {
    if (psi.num_qubits() != 1) {
        throw std::invalid_argument("environment state must be a single qubit");
    }
}

}  // namespace

DensityMatrix run_on_copies(const AgencyCircuitSpec &spec, const PureState &psi) {
    require_qubit(psi);
    const std::size_t n = spec.num_qubits();
    return target_from_ket(agency_unitary(spec), psi.tensor_power(n), n);
}

DensityMatrix run_on_clones(const AgencyCircuitSpec &spec, const PureState &psi) {
    require_qubit(psi);
    const std::size_t n = spec.num_qubits();
    const CloneEnsemble clones = symmetric_clone(psi, n);
    return target_from_density(agency_unitary(spec), clones.state.matrix(), n);
}

DensityMatrix run(const AgencyCircuitSpec &spec, Regime regime, const PureState &psi) {
    return regime == Regime::kCopies ? run_on_copies(spec, psi) : run_on_clones(spec, psi);
}

Aggregates aggregate(const std::vector<StateRecord> &records) {
    if (records.empty()) {
        throw std::invalid_argument("aggregate: no records");
    }
    Aggregates a;
    a.fidelity = {records[0].fidelity, 0, records[0].fidelity};
    a.bloch_length = {records[0].bloch_length, 0, records[0].bloch_length};
    a.angle_error = {records[0].angle_error, 0, records[0].angle_error};
    double fid_sum = 0;
    double len_sum = 0;
    double ang_sum = 0;
    for (const auto &r : records) {
        a.fidelity.worst = std::min(a.fidelity.worst, r.fidelity);
        a.fidelity.best = std::max(a.fidelity.best, r.fidelity);
        a.bloch_length.worst = std::min(a.bloch_length.worst, r.bloch_length);
        a.bloch_length.best = std::max(a.bloch_length.best, r.bloch_length);
        a.angle_error.worst = std::max(a.angle_error.worst, r.angle_error);
        a.angle_error.best = std::min(a.angle_error.best, r.angle_error);
        fid_sum += r.fidelity;
        len_sum += r.bloch_length;
        if (r.direction_defined) {
            ang_sum += r.angle_error;
        }
    }
    const double n = static_cast<double>(records.size());
    a.fidelity.average = fid_sum / n;
    a.bloch_length.average = len_sum / n;
    a.angle_error.average = ang_sum / n;
    return a;
}

EvaluationInputs::EvaluationInputs(Regime regime, std::size_t num_qubits)
    : regime_(regime), num_qubits_(num_qubits) {
    for (const auto &psi : test_states()) {
        if (regime == Regime::kCopies) {
            inputs_.push_back(psi.tensor_power(num_qubits));
        } else {
            inputs_.push_back(symmetric_clone(psi, num_qubits).state.matrix());
        }
        bloch_.push_back(to_bloch(DensityMatrix(psi)));
    }
}

EvaluationReport evaluate(const AgencyCircuitSpec &spec, Regime regime, unsigned threads) {
    return evaluate(spec, EvaluationInputs(regime, spec.num_qubits()), threads);
}

EvaluationReport evaluate(const AgencyCircuitSpec &spec, const EvaluationInputs &inputs,
                          unsigned threads) {
    const std::size_t n = spec.num_qubits();
    if (inputs.num_qubits() != n) {
        throw std::invalid_argument("evaluation inputs prepared for a different register width");
    }
    const ComplexMatrix q = agency_unitary(spec);
    const DensityMatrix target(spec.target_state);
    const BlochVector target_bloch = to_bloch(target);

    EvaluationReport report{spec.name, inputs.regime(), std::vector<StateRecord>(inputs.size()), {}};
    auto work = [&](std::size_t k) {
        const DensityMatrix out = inputs.regime() == Regime::kCopies
                                      ? target_from_ket(q, inputs.input(k), n)
                                      : target_from_density(q, inputs.input(k), n);
        const BlochMetrics m = bloch_metrics(out, target_bloch);
        report.records[k] = {inputs.bloch(k), fidelity(out, target), m.length, m.angle_error,
                             m.direction_defined};
    };
    if (threads <= 1) {
        for (std::size_t k = 0; k < inputs.size(); ++k) {
            work(k);
        }
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t k = t; k < inputs.size(); k += threads) {
                    work(k);
                }
            });
        }
    }
    report.aggregates = aggregate(report.records);
    return report;
}

bool classical_limit_check(const AgencyCircuitSpec &spec, const PureState &first,
                           const PureState &second) {
    require_qubit(first);
    require_qubit(second);
    if (std::abs(inner(first.ket(), second.ket())) > kStructuralTolerance) {
        throw std::invalid_argument("classical_limit_check: basis is not orthonormal");
    }
    const DensityMatrix target(spec.target_state);
    for (const PureState *psi : {&first, &second}) {
        const DensityMatrix out = run_on_copies(spec, *psi);
        if (std::abs(fidelity(out, target) - 1) > 1e-9 || out.purity() < 1 - 1e-9) {
            return false;
        }
    }
    return true;
}

}  // namespace qagency
