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

#include "qagency/nogo.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qagency {

bool NoGoCertificate::valid() const {
    return kind == Kind::kViolation ? violation_magnitude > tolerance
                                    : violation_magnitude <= tolerance;
}

std::string NoGoCertificate::status() const {
    if (kind == Kind::kSymmetry) {
        return valid() ? "symmetry" : "failed";
    }
    if (boundary_case) {
        return violation_magnitude <= tolerance ? "boundary" : "failed";
    }
    return valid() ? "violation" : "failed";
}

namespace {

std::string format_complex(complex z) {
    std::ostringstream out;
    out.precision(6);
    out << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return out.str();
}

void require_single_qubit_unitary(const ComplexMatrix &u, const char *label) {
    if (u.rows() != 2 || u.cols() != 2 || !is_unitary(u)) {
        throw std::invalid_argument(std::string(label) + " must be a single-qubit unitary");
    }
}

}  // namespace

NoGoCertificate no_cloning_witness(complex alpha, complex beta) {
    const double norm2 = std::norm(alpha) + std::norm(beta);
    if (std::abs(norm2 - 1) > kStructuralTolerance) {
        throw std::invalid_argument("no_cloning_witness: |alpha|^2 + |beta|^2 must be 1");
    }
    const ComplexMatrix psi{{alpha}, {beta}};
    const ComplexMatrix cnot{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    const ComplexMatrix cloned = cnot * kron(psi, ComplexMatrix::basis(2, 0));
    const ComplexMatrix ideal = kron(psi, psi);

    NoGoCertificate cert;
    cert.claim_id = "no-cloning";
    cert.kind = NoGoCertificate::Kind::kViolation;
    cert.witness = "CNOT basis cloner on alpha|0>+beta|1> with alpha=" + format_complex(alpha) +
                   ", beta=" + format_complex(beta);
    // Distance between rays: min over global phase of |cloned - e^{it} ideal|.
    const complex overlap = inner(ideal, cloned);
    const complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : complex{1};
    cert.violation_magnitude = (cloned - ideal * phase).frobenius_norm();
    cert.tolerance = 1e-9;
    cert.boundary_case = std::abs(alpha * beta) <= kStructuralTolerance;
    cert.details = {{"alpha_re", alpha.real()}, {"alpha_im", alpha.imag()},
                    {"beta_re", beta.real()},   {"beta_im", beta.imag()}};
    return cert;
}

namespace {

ComplexMatrix unitary_superposition(const ComplexMatrix &u0, const ComplexMatrix &u1) {
    if (u0.rows() != u1.rows() || u0.cols() != u1.cols() || !u0.is_square()) {
        throw std::invalid_argument("superposition not unitary");
    }
    const ComplexMatrix sum = u0 + u1;
    const double scale = sum.frobenius_norm() / std::sqrt(static_cast<double>(sum.rows()));
    if (scale < 1e-12 || !is_unitary(sum / scale, 1e-10)) {
        throw std::invalid_argument("superposition not unitary");
    }
    return sum / scale;
}

}  // namespace

PureState superposed_action_output(const PureState &psi, const ComplexMatrix &u0,
                                   const ComplexMatrix &u1) {
    return PureState::normalized(unitary_superposition(u0, u1) * psi.ket());
}

NoGoCertificate superposed_action_symmetry(const PureState &psi, const ComplexMatrix &u0,
                                           const ComplexMatrix &u1) {
    const ComplexMatrix w = unitary_superposition(u0, u1);
    if (w.rows() != psi.dimension()) {
        throw std::invalid_argument("superposed_action_symmetry: operator and state sizes differ");
    }
    const ComplexMatrix psi_x = u0 * psi.ket();
    const ComplexMatrix psi_y = u1 * psi.ket();
    const ComplexMatrix forward = psi_x + psi_y;
    const ComplexMatrix swapped = psi_y + psi_x;
    const ComplexMatrix out = w * psi.ket();

    NoGoCertificate cert;
    cert.claim_id = "superposed-action-symmetry";
    cert.kind = NoGoCertificate::Kind::kSymmetry;
    cert.witness = "labels of U0 psi and U1 psi exchanged in their equal superposition";
    cert.violation_magnitude = (forward - swapped).frobenius_norm();
    cert.tolerance = 1e-12;
    cert.details.emplace_back("overlap_abs", std::abs(inner(psi_x, psi_y)));
    for (std::size_t k = 0; k < out.rows(); ++k) {
        cert.details.emplace_back("output_" + std::to_string(k) + "_re", out(k, 0).real());
        cert.details.emplace_back("output_" + std::to_string(k) + "_im", out(k, 0).imag());
    }
    return cert;
}

namespace {

struct SelectorSetup {
    ComplexMatrix u1, u2;                // U1 psi, U2 psi
    double w00, w01, w10, w11;           // squared control amplitudes
};

SelectorSetup make_setup(const ComplexMatrix &u1, const ComplexMatrix &u2, const PureState &psi) {
    require_single_qubit_unitary(u1, "u1");
    require_single_qubit_unitary(u2, "u2");
    if (psi.num_qubits() != 1) {
        throw std::invalid_argument("selector_impossibility: psi must be a single qubit");
    }
    SelectorSetup s{u1 * psi.ket(), u2 * psi.ket(), 0, 0, 0, 0};
    const complex a = s.u1(0, 0), b = s.u1(1, 0), c = s.u2(0, 0), d = s.u2(1, 0);
    for (complex amp : {a, b, c, d}) {
        if (std::abs(amp) < kStructuralTolerance) {
            throw std::invalid_argument("decisive input: selector exists here");
        }
    }
    s.w00 = std::norm(a * c);
    s.w01 = std::norm(a * d);
    s.w10 = std::norm(b * c);
    s.w11 = std::norm(b * d);
    return s;
}

struct Score {
    double total;
    double schmidt_term;
    double mismatch_term;
};

// Target reduced state is sum_k w_k |t_k><t_k|; the control register carries
// orthogonal basis labels, so the Schmidt coefficients squared are its
// eigenvalues.
Score score(const SelectorSetup &s, const ComplexMatrix &t00, const ComplexMatrix &t11) {
    ComplexMatrix rho = t00 * dagger(t00) * s.w00;
    rho += s.u1 * dagger(s.u1) * s.w01;
    rho += s.u2 * dagger(s.u2) * s.w10;
    rho += t11 * dagger(t11) * s.w11;

    const double p = rho(0, 0).real();
    const double q = rho(1, 1).real();
    const complex off = rho(0, 1);
    const double mean = (p + q) / 2;
    const double radius = std::sqrt((p - q) * (p - q) / 4 + std::norm(off));
    const double top = mean + radius;

    // Eigenvector for `top`.
    ComplexMatrix vec(2, 1);
    if (std::abs(off) > 1e-14) {
        vec(0, 0) = off;
        vec(1, 0) = top - p;
    } else {
        vec(p >= q ? 0 : 1, 0) = 1;
    }
    vec = vec / vec.frobenius_norm();

    double mismatch = std::numeric_limits<double>::infinity();
    for (const ComplexMatrix *u : {&s.u1, &s.u2}) {
        const double ov = std::norm(inner(vec, *u));
        mismatch = std::min(mismatch, std::sqrt(std::max(0.0, 1 - ov)));
    }
    const double schmidt = std::max(0.0, 1 - top);
    return {schmidt + mismatch, schmidt, mismatch};
}

ComplexMatrix bloch_ket(double theta, double phi) {
    return ComplexMatrix{{std::cos(theta / 2)}, {std::polar(std::sin(theta / 2), phi)}};
}

}  // namespace

double selector_deviation(const ComplexMatrix &u1, const ComplexMatrix &u2, const PureState &psi,
                          const PureState &t00, const PureState &t11) {
    return score(make_setup(u1, u2, psi), t00.ket(), t11.ket()).total;
}

NoGoCertificate selector_impossibility(const ComplexMatrix &u1, const ComplexMatrix &u2,
                                       const PureState &psi, std::size_t grid) {
    if (grid == 0) {
        throw std::invalid_argument("selector_impossibility: grid must be positive");
    }
    const SelectorSetup setup = make_setup(u1, u2, psi);

    std::vector<ComplexMatrix> points;
    std::vector<std::pair<double, double>> angles;
    for (std::size_t i = 0; i <= grid; ++i) {
        const double theta = std::numbers::pi * static_cast<double>(i) / static_cast<double>(grid);
        for (std::size_t j = 0; j < grid; ++j) {
            const double phi =
                2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid);
            points.push_back(bloch_ket(theta, phi));
            angles.emplace_back(theta, phi);
        }
    }

    Score best{std::numeric_limits<double>::infinity(), 0, 0};
    std::size_t best_a = 0, best_b = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            const Score s = score(setup, points[i], points[j]);
            if (s.total < best.total) {
                best = s;
                best_a = i;
                best_b = j;
            }
        }
    }

    NoGoCertificate cert;
    cert.claim_id = "best-action-selector";
    cert.kind = NoGoCertificate::Kind::kViolation;
    std::ostringstream w;
    w.precision(6);
    w << "best controlled completion on a " << grid << "-point grid: |00>|psi> -> |00>|t(theta="
      << angles[best_a].first << ", phi=" << angles[best_a].second
      << ")>, |11>|psi> -> |11>|t(theta=" << angles[best_b].first
      << ", phi=" << angles[best_b].second << ")>";
    cert.witness = w.str();
    cert.violation_magnitude = best.total;
    cert.tolerance = 1e-9;
    cert.details = {{"grid", static_cast<double>(grid)},
                    {"completions_searched", static_cast<double>(points.size() * points.size())},
                    {"schmidt_term", best.schmidt_term},
                    {"mismatch_term", best.mismatch_term},
                    {"t00_theta", angles[best_a].first},
                    {"t00_phi", angles[best_a].second},
                    {"t11_theta", angles[best_b].first},
                    {"t11_phi", angles[best_b].second}};
    return cert;
}

}  // namespace qagency
