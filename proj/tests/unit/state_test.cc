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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <tuple>

#include "oracles.h"
#include "qagency/state.h"
#include "test_random.h"

namespace qagency {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(PureState, NormalizationInvariant) {
    EXPECT_THROW(PureState(1.0, 1.0), std::invalid_argument);
    EXPECT_THROW(PureState(ComplexMatrix(3, 1, {1, 0, 0})), std::invalid_argument);
    EXPECT_NO_THROW(PureState(std::sqrt(0.75), std::sqrt(0.25)));
    const auto p = PureState::normalized(ComplexMatrix{{3}, {4}});
    EXPECT_NEAR(std::abs(p.amplitude(0)), 0.6, 1e-15);
    EXPECT_EQ(PureState::zero().tensor_power(3).rows(), 8u);
}

TEST(DensityMatrix, Invariants) {
    EXPECT_THROW(DensityMatrix(ComplexMatrix{{1, 0}, {0, 1}}), std::invalid_argument);
    EXPECT_THROW(DensityMatrix(ComplexMatrix{{0.5, complex(0, 0.1)}, {complex(0, 0.1), 0.5}}),
                 std::invalid_argument);
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
    EXPECT_NEAR(mixed.purity(), 0.25, 1e-15);
    EXPECT_TRUE(mixed.check_positive());
    EXPECT_NEAR(DensityMatrix(PureState::one()).purity(), 1, 1e-15);
}

TEST(Fidelity, Examples) {
    const DensityMatrix zero = PureState::zero();
    EXPECT_DOUBLE_EQ(fidelity(zero, zero), 1);
    EXPECT_DOUBLE_EQ(fidelity(DensityMatrix::maximally_mixed(1), zero), 0.5);
    EXPECT_THROW(fidelity(zero, DensityMatrix::maximally_mixed(2)), std::invalid_argument);
}

TEST(Fidelity, PureSigmaIsExpectation) {
    Rng rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        const auto phi = testing::random_qubit(rng);
        const DensityMatrix rho(testing::random_density(rng, 2));
        const double expect = inner(phi.ket(), rho.matrix() * phi.ket()).real();
        EXPECT_NEAR(fidelity(rho, phi), expect, 1e-14);
        EXPECT_NEAR(fidelity(phi, rho), expect, 1e-14);
    }
}

TEST(Fidelity, MatchesUhlmannOracleForMixedQubits) {
    Rng rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = testing::random_density(rng, 2);
        const auto b = testing::random_density(rng, 2);
        const double want = oracle::uhlmann_fidelity(oracle::to_eigen(a), oracle::to_eigen(b));
        EXPECT_NEAR(fidelity(DensityMatrix(a), DensityMatrix(b)), want, 1e-9);
        EXPECT_NEAR(fidelity(DensityMatrix(b), DensityMatrix(a)), want, 1e-9);
    }
}

TEST(ToBloch, Examples) {
    const auto v0 = to_bloch(PureState::zero());
    EXPECT_EQ(v0, (BlochVector{0, 0, 1}));
    const auto vm = to_bloch(DensityMatrix::maximally_mixed(1));
    EXPECT_EQ(vm, (BlochVector{0, 0, 0}));
    const double s = 1 / std::sqrt(3.0);
    const ComplexMatrix rho = (gates::I() + (gates::X() + gates::Y() + gates::Z()) * s) * 0.5;
    const auto v = to_bloch(DensityMatrix(rho));
    EXPECT_NEAR(v.x, s, 1e-15);
    EXPECT_NEAR(v.y, s, 1e-15);
    EXPECT_NEAR(v.z, s, 1e-15);
    EXPECT_THROW(to_bloch(DensityMatrix::maximally_mixed(2)), std::invalid_argument);
}

TEST(ToBloch, EqualsPauliExpectations) {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix rho(testing::random_density(rng, 2));
        const auto v = to_bloch(rho);
        EXPECT_NEAR(v.x, (rho.matrix() * gates::X()).trace().real(), 1e-15);
        EXPECT_NEAR(v.y, (rho.matrix() * gates::Y()).trace().real(), 1e-15);
        EXPECT_NEAR(v.z, (rho.matrix() * gates::Z()).trace().real(), 1e-15);
        EXPECT_LE(v.length(), 1 + 1e-10);
    }
}

TEST(BlochMetrics, Examples) {
    const auto m0 = bloch_metrics(PureState::zero());
    EXPECT_DOUBLE_EQ(m0.length, 1);
    EXPECT_DOUBLE_EQ(m0.angle_error, 0);
    const auto mm = bloch_metrics(DensityMatrix::maximally_mixed(1));
    EXPECT_DOUBLE_EQ(mm.length, 0);
    EXPECT_DOUBLE_EQ(mm.angle_error, kPi / 2);
    EXPECT_FALSE(mm.direction_defined);
    const auto m1 = bloch_metrics(PureState::one());
    EXPECT_DOUBLE_EQ(m1.length, 1);
    EXPECT_DOUBLE_EQ(m1.angle_error, kPi);
}

TEST(TestStates, CountNormsAndClosure) {
    const auto &states = test_states();
    ASSERT_EQ(states.size(), 26u);
    std::set<std::tuple<long, long, long>> keys;
    auto key = [](const BlochVector &v) {
        return std::make_tuple(std::lround(v.x * 1e9), std::lround(v.y * 1e9),
                               std::lround(v.z * 1e9));
    };
    for (const auto &s : states) {
        const auto v = to_bloch(s);
        EXPECT_NEAR(v.length(), 1, 1e-10);
        keys.insert(key(v));
    }
    EXPECT_EQ(keys.size(), 26u);
    for (const auto &s : states) {
        EXPECT_TRUE(keys.count(key(-to_bloch(s)))) << "missing antipode";
    }
}

TEST(TestStates, CanonicalOrdering) {
    const auto vs = test_bloch_vectors();
    ASSERT_EQ(vs.size(), 26u);
    auto nonzero = [](const BlochVector &v) {
        return (std::abs(v.x) > 1e-12) + (std::abs(v.y) > 1e-12) + (std::abs(v.z) > 1e-12);
    };
    for (std::size_t k = 0; k < 26; ++k) {
        EXPECT_EQ(nonzero(vs[k]), k < 6 ? 1 : k < 18 ? 2 : 3) << k;
    }
    for (std::size_t k = 1; k < 26; ++k) {
        if (nonzero(vs[k]) != nonzero(vs[k - 1])) continue;
        EXPECT_TRUE(std::make_tuple(vs[k - 1].x, vs[k - 1].y, vs[k - 1].z) >
                    std::make_tuple(vs[k].x, vs[k].y, vs[k].z))
            << k;
    }
    EXPECT_EQ(vs.front(), (BlochVector{1, 0, 0}));
    EXPECT_EQ(vs[5], (BlochVector{-1, 0, 0}));
    // Stable across calls and consistent with the states.
    EXPECT_EQ(test_bloch_vectors(), vs);
    for (std::size_t k = 0; k < 26; ++k) {
        const auto v = to_bloch(test_states()[k]);
        EXPECT_NEAR(v.x, vs[k].x, 1e-12);
        EXPECT_NEAR(v.y, vs[k].y, 1e-12);
        EXPECT_NEAR(v.z, vs[k].z, 1e-12);
    }
}

TEST(PureFromBloch, Examples) {
    const auto z = pure_from_bloch({0, 0, 1});
    EXPECT_NEAR(std::abs(z.amplitude(0) - 1.0), 0, 1e-15);
    const auto one = pure_from_bloch({0, 0, -1});
    EXPECT_NEAR(std::abs(one.amplitude(1)), 1, 1e-15);
    EXPECT_THROW(pure_from_bloch({0.5, 0, 0}), std::invalid_argument);
}

TEST(PureFromBloch, RoundTripAndPhaseConvention) {
    Rng rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const auto psi = testing::random_qubit(rng);
        const auto v = to_bloch(psi);
        const auto back = pure_from_bloch(v);
        const auto w = to_bloch(back);
        EXPECT_NEAR(w.x, v.x, 1e-10);
        EXPECT_NEAR(w.y, v.y, 1e-10);
        EXPECT_NEAR(w.z, v.z, 1e-10);
        EXPECT_GE(back.amplitude(0).real(), 0);
        EXPECT_EQ(back.amplitude(0).imag(), 0);
    }
}

}  // namespace
}  // namespace qagency
