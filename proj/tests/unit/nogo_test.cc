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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.h"
#include "qagency/nogo.h"
#include "test_random.h"

namespace qagency {
namespace {

const complex i1{0, 1};

TEST(NoCloning, BasisStatesAreBoundaryCases) {
    for (const auto &[a, b] : {std::pair<complex, complex>{1, 0}, {0, 1}, {i1, 0}}) {
        const auto cert = no_cloning_witness(a, b);
        EXPECT_EQ(cert.violation_magnitude, 0);
        EXPECT_TRUE(cert.boundary_case);
        EXPECT_EQ(cert.status(), "boundary");
        EXPECT_FALSE(cert.valid());
        EXPECT_TRUE(cert.consistent());
    }
}

TEST(NoCloning, EqualSuperpositionMatchesDifferenceVector) {
    const double s = 1 / std::numbers::sqrt2;
    const auto cert = no_cloning_witness(s, s);
    // || (|00> + |11>)/sqrt2 - (|00> + |01> + |10> + |11>)/2 ||
    Eigen::VectorXcd diff(4);
    diff << s - 0.5, -0.5, -0.5, s - 0.5;
    EXPECT_NEAR(cert.violation_magnitude, diff.norm(), 1e-12);
    EXPECT_NEAR(cert.violation_magnitude, std::sqrt(2 - std::numbers::sqrt2), 1e-9);
    EXPECT_EQ(cert.status(), "violation");
    EXPECT_TRUE(cert.valid());
    EXPECT_EQ(cert.claim_id, "no-cloning");
}

TEST(NoCloning, RejectsUnnormalized) {
    EXPECT_THROW(no_cloning_witness(1, 1), std::invalid_argument);
}

TEST(NoCloning, ZeroExactlyWhenProductVanishes) {
    Rng rng(17);
    for (int k = 0; k < 50; ++k) {
        complex a, b;
        if (k % 5 == 0) {
            a = std::polar(1.0, 2 * std::numbers::pi * rng.uniform());
            b = 0;
        } else if (k % 5 == 1) {
            a = 0;
            b = std::polar(1.0, 2 * std::numbers::pi * rng.uniform());
        } else {
            const auto psi = testing::random_qubit(rng);
            a = psi.amplitude(0);
            b = psi.amplitude(1);
        }
        const auto cert = no_cloning_witness(a, b);
        if (std::abs(a * b) <= 1e-10) {
            EXPECT_LE(cert.violation_magnitude, 1e-10);
        } else {
            EXPECT_GT(cert.violation_magnitude, 0);
            // <a00 + b11 | psi psi> = conj(a) a^2 + conj(b) b^2.
            const double overlap = std::abs(std::conj(a) * a * a + std::conj(b) * b * b);
            EXPECT_NEAR(cert.violation_magnitude, std::sqrt(2 - 2 * overlap), 1e-12);
        }
    }
}

TEST(SuperposedAction, SymmetryCertificate) {
    const auto cert = superposed_action_symmetry(PureState::zero(), gates::I(), gates::X() * i1);
    EXPECT_EQ(cert.violation_magnitude, 0);
    EXPECT_TRUE(cert.valid());
    EXPECT_EQ(cert.status(), "symmetry");
    ASSERT_FALSE(cert.details.empty());
    EXPECT_EQ(cert.details[0].first, "overlap_abs");
    EXPECT_NEAR(cert.details[0].second, 0, 1e-15);
}

TEST(SuperposedAction, OutputOfIPlusIX) {
    const auto out = superposed_action_output(PureState::zero(), gates::I(), gates::X() * i1);
    const double s = 1 / std::numbers::sqrt2;
    EXPECT_NEAR(std::abs(out.amplitude(0) - complex(s)), 0, 1e-15);
    EXPECT_NEAR(std::abs(out.amplitude(1) - complex(0, s)), 0, 1e-15);
}

TEST(SuperposedAction, NonUnitarySumRejected) {
    for (const auto &u1 : {gates::X(), gates::Z(), gates::I() * -1.0}) {
        try {
            superposed_action_symmetry(PureState::zero(), gates::I(), u1);
            FAIL();
        } catch (const std::invalid_argument &e) {
            EXPECT_STREQ(e.what(), "superposition not unitary");
        }
    }
}

TEST(SuperposedAction, AlwaysSymmetric) {
    Rng rng(3);
    for (int k = 0; k < 20; ++k) {
        const auto psi = testing::random_qubit(rng);
        // I and i n.sigma always sum to a multiple of a unitary.
        const auto v = testing::random_qubit(rng);
        const auto b = to_bloch(v);
        const auto cert =
            superposed_action_symmetry(psi, gates::I(), gates::pauli_along(b.x, b.y, b.z) * i1);
        EXPECT_EQ(cert.violation_magnitude, 0);
        const double ov = std::abs(inner(psi.ket(), gates::pauli_along(b.x, b.y, b.z) * psi.ket()));
        EXPECT_NEAR(cert.details[0].second, ov, 1e-14);
    }
}

// Score of one completion, recomputed from the full three-qubit output.
double oracle_selector_score(const ComplexMatrix &u1, const ComplexMatrix &u2, const PureState &psi,
                             const PureState &t, const PureState &tp) {
    const auto p = oracle::to_eigen(u1 * psi.ket());
    const auto q = oracle::to_eigen(u2 * psi.ket());
    const complex a = p(0), b = p(1), c = q(0), d = q(1);
    oracle::Mat out = oracle::Mat::Zero(8, 1);
    const oracle::Mat tk = oracle::to_eigen(t.ket()), tpk = oracle::to_eigen(tp.ket());
    for (int k = 0; k < 2; ++k) {
        out(0b000 + k) = a * c * tk(k);
        out(0b010 + k) = a * d * p(k);
        out(0b100 + k) = b * c * q(k);
        out(0b110 + k) = b * d * tpk(k);
    }
    const oracle::Mat target = oracle::partial_trace_qubits(out * out.adjoint(), 3, 0b100);
    Eigen::SelfAdjointEigenSolver<oracle::Mat> es(target);
    const double top = es.eigenvalues()(1);
    const Eigen::VectorXcd vec = es.eigenvectors().col(1);
    const double m1 = std::sqrt(std::max(0.0, 1 - std::norm(vec.dot(p.col(0)))));
    const double m2 = std::sqrt(std::max(0.0, 1 - std::norm(vec.dot(q.col(0)))));
    return (1 - top) + std::min(m1, m2);
}

TEST(Selector, DeviationMatchesOracle) {
    Rng rng(44);
    for (int k = 0; k < 20; ++k) {
        const auto u1 = testing::random_unitary(rng, 2);
        const auto u2 = testing::random_unitary(rng, 2);
        const auto psi = testing::random_qubit(rng);
        const auto t = testing::random_qubit(rng);
        const auto tp = testing::random_qubit(rng);
        EXPECT_NEAR(selector_deviation(u1, u2, psi, t, tp),
                    oracle_selector_score(u1, u2, psi, t, tp), 1e-10);
    }
}

double analytic_floor(const ComplexMatrix &u1, const ComplexMatrix &u2, const PureState &psi) {
    const auto p = oracle::to_eigen(u1 * psi.ket());
    const auto q = oracle::to_eigen(u2 * psi.ket());
    const complex a = p(0), b = p(1), c = q(0), d = q(1);
    const oracle::Mat fixed =
        std::norm(a * d) * p * p.adjoint() + std::norm(b * c) * q * q.adjoint();
    return 1 - (oracle::max_eigenvalue(fixed) + std::norm(a * c) + std::norm(b * d));
}

TEST(Selector, ExampleExceedsFloor) {
    const PureState psi(std::sqrt(0.75), std::sqrt(0.25));
    const auto cert = selector_impossibility(gates::I(), gates::X(), psi, 8);
    const double floor = analytic_floor(gates::I(), gates::X(), psi);
    EXPECT_GT(floor, 0.01);
    EXPECT_GE(cert.violation_magnitude, floor - 1e-12);
    EXPECT_GT(cert.violation_magnitude, 0.01);
    EXPECT_EQ(cert.status(), "violation");
    EXPECT_EQ(cert.claim_id, "best-action-selector");
}

TEST(Selector, ReportedWitnessReproducesMagnitude) {
    const PureState psi(std::sqrt(0.75), std::sqrt(0.25));
    const auto cert = selector_impossibility(gates::I(), gates::X(), psi, 8);
    double th0 = 0, ph0 = 0, th1 = 0, ph1 = 0;
    for (const auto &[k, v] : cert.details) {
        if (k == "t00_theta") th0 = v;
        if (k == "t00_phi") ph0 = v;
        if (k == "t11_theta") th1 = v;
        if (k == "t11_phi") ph1 = v;
    }
    const PureState t(std::cos(th0 / 2), std::polar(std::sin(th0 / 2), ph0));
    const PureState tp(std::cos(th1 / 2), std::polar(std::sin(th1 / 2), ph1));
    EXPECT_NEAR(selector_deviation(gates::I(), gates::X(), psi, t, tp), cert.violation_magnitude,
                1e-12);
}

TEST(Selector, RefinementNeverIncreases) {
    const PureState psi(std::sqrt(0.75), std::sqrt(0.25));
    const double g4 = selector_impossibility(gates::I(), gates::X(), psi, 4).violation_magnitude;
    const double g8 = selector_impossibility(gates::I(), gates::X(), psi, 8).violation_magnitude;
    const double g16 = selector_impossibility(gates::I(), gates::X(), psi, 16).violation_magnitude;
    EXPECT_GE(g4, g8);
    EXPECT_GE(g8, g16);
    EXPECT_GE(g16, analytic_floor(gates::I(), gates::X(), psi) - 1e-12);
}

TEST(Selector, DecisiveInputRejected) {
    try {
        selector_impossibility(gates::I(), gates::X(), PureState::one(), 8);
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_STREQ(e.what(), "decisive input: selector exists here");
    }
    EXPECT_THROW(selector_impossibility(gates::I(), gates::X(), PureState::zero(), 8),
                 std::invalid_argument);
    EXPECT_THROW(selector_impossibility(gates::I(), gates::X(), PureState(0.6, 0.8), 0),
                 std::invalid_argument);
}

TEST(Selector, PositiveOnRandomNonDecisiveInputs) {
    Rng rng(99);
    for (int k = 0; k < 10; ++k) {
        const auto psi = testing::random_qubit(rng);
        const auto cert = selector_impossibility(gates::I(), gates::X(), psi, 8);
        EXPECT_GT(cert.violation_magnitude, cert.tolerance);
        EXPECT_GE(cert.violation_magnitude, analytic_floor(gates::I(), gates::X(), psi) - 1e-12);
    }
}

}  // namespace
}  // namespace qagency
