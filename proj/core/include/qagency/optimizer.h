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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qagency/agency.h"

namespace qagency {

enum class Objective { kAverageFidelity, kWorstFidelity };

std::string_view to_string(Objective objective);
Objective parse_objective(std::string_view text);

/// A control-table row that applies a superposition sum_k w_k e^{i phi_k} B_k
/// of two or more basis unitaries B_k drawn from {I} and the deliberation
/// unitaries.
struct FreeEntry {
    std::string bits;
    std::vector<ComplexMatrix> terms;
    /// Unit phases e^{i phi_k} taken from the base table; fixed during search.
    std::vector<complex> phases;
    /// Real weights of the base table (the seed point).
    std::vector<double> base_weights;
};

/// Search space over the real mixing weights of every ambiguous row.
///
/// A point assigns one real weight per term. Each row is rebuilt as
/// M = sum_k w_k e^{i phi_k} B_k, rescaled to Frobenius norm sqrt(2), and kept
/// only if it is unitary within 1e-8. Single-unitary rows never change.
class ParamSpace {
   public:
    /// Decomposes every table row of `base` onto {I} and the deliberation
    /// unitaries. Throws naming the row if a row is not such a combination or
    /// the basis is linearly dependent.
    explicit ParamSpace(AgencyCircuitSpec base);

    const AgencyCircuitSpec &base_spec() const { return base_; }
    const std::vector<FreeEntry> &free_entries() const { return entries_; }
    std::size_t dimension() const;
    std::vector<double> base_point() const;

    /// The spec at `point`, or nullopt when some row is not unitary.
    std::optional<AgencyCircuitSpec> realize(std::span<const double> point) const;

   private:
    AgencyCircuitSpec base_;
    std::vector<FreeEntry> entries_;
};

/// Average (or worst) fidelity of `spec` over the 26 test states.
double objective(const AgencyCircuitSpec &spec, Regime regime,
                 Objective kind = Objective::kAverageFidelity);

struct TracePoint {
    std::size_t restart;
    std::vector<double> params;
    /// NaN for infeasible points.
    double value;
};

struct OptimizeOptions {
    Regime regime = Regime::kCopies;
    Objective objective = Objective::kAverageFidelity;
    /// Random restarts on top of the seeded start.
    std::size_t budget = 0;
    std::uint64_t seed = 0;
    /// Coordinate sweeps per start.
    std::size_t sweeps = 2;
    /// Golden-section iterations per coordinate line search.
    std::size_t line_iterations = 24;
};

struct OptimizeResult {
    AgencyCircuitSpec best_spec;
    std::vector<double> best_params;
    double best_value = 0;
    double baseline_value = 0;
    std::size_t best_restart = 0;
    std::vector<TracePoint> trace;
};

/// Coordinate-wise golden-section search over the weights of `space`,
/// starting from the base table (restart 0) and then from `budget` random
/// points in [-1, 1]^d. Restart r draws from an RNG stream keyed by
/// (seed, r), so results are max-accumulated and non-decreasing in budget.
/// Ties keep the lowest restart index.
///
/// Throws std::invalid_argument("nothing to optimize") when the space has no
/// free entries.
OptimizeResult optimize(const ParamSpace &space, const OptimizeOptions &options);

}  // namespace qagency
