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

#include "qagency/optimizer.h"

namespace qagency {
namespace {

const complex i1{0, 1};

AgencyCircuitSpec builtin(const char *name) { return *find_builtin(name); }

bool same_spec(const AgencyCircuitSpec &a, const AgencyCircuitSpec &b) {
    if (a.name != b.name || a.control_table.size() != b.control_table.size()) return false;
    for (const auto &[bits, v] : a.control_table) {
        if (!(b.control_table.at(bits) == v)) return false;
    }
    return a.deliberation_unitaries == b.deliberation_unitaries;
}

TEST(Objective, Examples) {
    EXPECT_NEAR(objective(builtin("Q_IX"), Regime::kCopies), 2.0 / 3, 1e-4);
    EXPECT_NEAR(objective(builtin("Q_IHX"), Regime::kCopies), 0.69372, 1e-4);
    AgencyCircuitSpec id = builtin("Q_IHX");
    for (auto &[bits, v] : id.control_table) v = gates::I();
    EXPECT_NEAR(objective(id, Regime::kCopies), 0.5, 1e-12);
    EXPECT_NEAR(objective(builtin("Q_IX"), Regime::kCopies, Objective::kWorstFidelity), 0.5, 1e-9);
}

TEST(ObjectiveKind, Parse) {
    EXPECT_EQ(parse_objective("average"), Objective::kAverageFidelity);
    EXPECT_EQ(parse_objective("worst"), Objective::kWorstFidelity);
    EXPECT_EQ(to_string(Objective::kWorstFidelity), "worst");
    EXPECT_THROW(parse_objective("best"), std::invalid_argument);
}

TEST(ParamSpace, FreeEntriesAreTheSuperposedRows) {
    EXPECT_TRUE(ParamSpace(builtin("Q_(I)X")).free_entries().empty());
    const ParamSpace ix(builtin("Q_IX"));
    ASSERT_FALSE(ix.free_entries().empty());
    for (const auto &e : ix.free_entries()) {
        EXPECT_GE(e.terms.size(), 2u);
        EXPECT_NE(e.bits, "01");
        EXPECT_NE(e.bits, "10");
    }
    const ParamSpace ihx(builtin("Q_IHX"));
    EXPECT_EQ(ihx.dimension(), ihx.base_point().size());
}

TEST(ParamSpace, BasePointRealizesBaseTable) {
    for (const auto &spec : builtin_circuits()) {
        const ParamSpace space(spec);
        const auto real = space.realize(space.base_point());
        ASSERT_TRUE(real.has_value()) << spec.name;
        for (const auto &[bits, v] : spec.control_table) {
            EXPECT_LT(max_abs_diff(real->control_table.at(bits), v), 1e-12) << spec.name << bits;
        }
    }
}

TEST(ParamSpace, ZeroWeightsAreInfeasible) {
    const ParamSpace space(builtin("Q_IX"));
    std::vector<double> zeros(space.dimension(), 0.0);
    EXPECT_FALSE(space.realize(zeros).has_value());
    EXPECT_THROW(space.realize(std::vector<double>(space.dimension() + 1)), std::invalid_argument);
}

TEST(ParamSpace, EntryOutsideSpanNamesTheEntry) {
    AgencyCircuitSpec spec = builtin("Q_IX");
    spec.control_table["11"] = gates::H();
    try {
        ParamSpace space(spec);
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("|11>"), std::string::npos) << e.what();
    }
}

TEST(ParamSpace, DependentBasisRejected) {
    AgencyCircuitSpec spec;
    spec.name = "dependent";
    spec.deliberation_unitaries = {gates::X(), gates::Z(), gates::H()};
    for (const char *bits : {"000", "001", "010", "011", "100", "101", "110", "111"}) {
        spec.control_table[bits] = gates::I();
    }
    EXPECT_THROW(ParamSpace{spec}, std::invalid_argument);
}

TEST(Optimize, NothingToOptimize) {
    try {
        optimize(ParamSpace(builtin("Q_(I)X")), {});
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_STREQ(e.what(), "nothing to optimize");
    }
}

TEST(Optimize, SeedOnlyKeepsBaseline) {
    const auto base = builtin("Q_IX");
    OptimizeOptions opt;
    opt.budget = 0;
    const auto r = optimize(ParamSpace(base), opt);
    EXPECT_GE(r.best_value, 2.0 / 3 - 1e-12);
    EXPECT_NEAR(r.baseline_value, 2.0 / 3, 1e-4);
    EXPECT_EQ(r.best_restart, 0u);
    EXPECT_LE(r.best_value, 1);
}

TEST(Optimize, DeterministicMonotoneAndAuditable) {
    const auto base = builtin("Q_IHX");
    const auto copy = base;
    const ParamSpace space(base);
    OptimizeOptions opt;
    opt.seed = 123;
    double prev = -1;
    for (std::size_t budget : {0u, 2u, 4u}) {
        opt.budget = budget;
        const auto r = optimize(space, opt);
        EXPECT_GE(r.best_value, prev);
        EXPECT_GE(r.best_value, r.baseline_value - 1e-12);
        EXPECT_LE(r.best_value, 1);
        prev = r.best_value;
    }
    opt.budget = 3;
    const auto a = optimize(space, opt);
    const auto b = optimize(space, opt);
    EXPECT_EQ(a.best_value, b.best_value);
    EXPECT_EQ(a.best_params, b.best_params);
    ASSERT_EQ(a.trace.size(), b.trace.size());
    EXPECT_TRUE(same_spec(base, copy));
    EXPECT_TRUE(same_spec(space.base_spec(), base));

    // Every feasible trace point realizes a unitary table scoring its value.
    for (std::size_t k = 0; k < a.trace.size(); k += 97) {
        const auto &p = a.trace[k];
        const auto spec = space.realize(p.params);
        ASSERT_EQ(spec.has_value(), !std::isnan(p.value));
        if (!spec) continue;
        for (const auto &[bits, v] : spec->control_table) EXPECT_TRUE(is_unitary(v, 1e-8));
        EXPECT_NEAR(objective(*spec, Regime::kCopies), p.value, 1e-12);
    }

    // Decisive rows never move.
    for (const char *bits : {"011", "101", "110"}) {
        EXPECT_EQ(a.best_spec.control_table.at(bits), base.control_table.at(bits));
    }
    EXPECT_EQ(a.best_spec.name, "Q_IHX+opt");
    EXPECT_NEAR(objective(a.best_spec, Regime::kCopies), a.best_value, 1e-12);
}

TEST(Optimize, WorstObjectiveAndClones) {
    OptimizeOptions opt;
    opt.objective = Objective::kWorstFidelity;
    opt.budget = 1;
    const auto r = optimize(ParamSpace(builtin("Q_IX")), opt);
    EXPECT_GE(r.best_value, 0.5 - 1e-12);

    OptimizeOptions clones;
    clones.regime = Regime::kClones;
    clones.sweeps = 1;
    clones.line_iterations = 4;
    const auto c = optimize(ParamSpace(builtin("Q_IX")), clones);
    EXPECT_NEAR(c.baseline_value, 2.0 / 3, 1e-6);
    EXPECT_GE(c.best_value, c.baseline_value);
}

}  // namespace
}  // namespace qagency
