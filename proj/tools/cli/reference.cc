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

#include "cli/reference.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qagency::cli {

std::string_view to_string(Metric metric) {
    switch (metric) {
        case Metric::kFidelity:
            return "fidelity";
        case Metric::kBlochLength:
            return "bloch_length";
        case Metric::kAngleError:
            return "angle_error";
    }
    return "";
}

std::string_view to_string(Column column) {
    switch (column) {
        case Column::kWorst:
            return "worst";
        case Column::kAverage:
            return "average";
        case Column::kBest:
            return "best";
    }
    return "";
}

std::string_view label(Metric metric) {
    switch (metric) {
        case Metric::kFidelity:
            return "Fidelity";
        case Metric::kBlochLength:
            return "Bloch Vector Length";
        case Metric::kAngleError:
            return "Bloch Angle Error (rad)";
    }
    return "";
}

double tolerance_for(Regime regime) {
    return regime == Regime::kCopies ? kCopiesTolerance : kClonesTolerance;
}

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr bool T = true;
constexpr bool F = false;

std::vector<ReferenceBlock> build() {
    return {
        {"Q_(I)X",
         Regime::kCopies,
         {{{0.5, 2.0 / 3, 1}, {0, 0.73399, 1}, {kHalfPi, 0.97095, 0}}},
         {{{T, T, T}, {T, F, T}, {T, F, T}}}},
        {"Q_(I)X",
         Regime::kClones,
         {{{2.0 / 3, 2.0 / 3, 2.0 / 3}, {1.0 / 3, 0.49421, 0.74536}, {1.10715, 0.64282, 0}}},
         {{{T, T, T}, {T, F, F}, {F, F, T}}}},
        {"Q_IX",
         Regime::kCopies,
         {{{0.5, 2.0 / 3, 1}, {0, 0.73399, 1}, {kHalfPi, 0.97095, 0}}},
         {{{T, T, T}, {T, F, T}, {T, F, T}}}},
        {"Q_IX",
         Regime::kClones,
         {{{2.0 / 3, 2.0 / 3, 2.0 / 3}, {1.0 / 3, 0.45326, 0.64788}, {1.03048, 0.58182, 0}}},
         {{{T, T, T}, {T, F, F}, {F, F, T}}}},
        {"Q_IHX",
         Regime::kCopies,
         {{{0.43562, 0.69372, 0.92678}, {0.30530, 0.69391, 0.95040}, {1.86017, 0.96929, 0.11297}}},
         {{{F, F, F}, {F, F, F}, {F, F, F}}}},
        {"Q_IHX",
         Regime::kClones,
         {{{0.62644, 0.69394, 0.76144}, {0.35600, 0.46061, 0.58729}, {1.02859, 0.51454, 0.12499}}},
         {{{F, F, F}, {F, F, F}, {F, F, F}}}},
        {"Q_IX'Y'Z'",
         Regime::kCopies,
         {{{0.44774, 0.65882, 0.76955}, {0.18519, 0.51126, 0.66668}, {1.76471, 0.82512, 0}}},
         {{{F, F, F}, {F, F, F}, {F, F, T}}}},
        {"Q_IX'Y'Z'",
         Regime::kClones,
         {{{0.62840, 0.65802, 0.68765}, {0.25952, 0.32018, 0.37996}, {0.26909, 0.14712, 0.04660}}},
         {{{F, F, F}, {F, F, F}, {F, F, F}}}},
    };
}

}  // namespace

const std::vector<ReferenceBlock> &reference_table() {
    static const std::vector<ReferenceBlock> table = build();
    return table;
}

const ReferenceBlock &reference_block(std::string_view circuit, Regime regime) {
    for (const auto &block : reference_table()) {
        if (block.circuit == circuit && block.regime == regime) {
            return block;
        }
    }
    throw std::invalid_argument("no reference values for '" + std::string(circuit) + "'");
}

double pick(const Aggregates &aggregates, Metric metric, Column column) {
    const Aggregate &a = metric == Metric::kFidelity      ? aggregates.fidelity
                         : metric == Metric::kBlochLength ? aggregates.bloch_length
                                                          : aggregates.angle_error;
    return column == Column::kWorst ? a.worst : column == Column::kAverage ? a.average : a.best;
}

std::vector<TableCell> compare(const EvaluationReport &report, const ReferenceBlock &reference) {
    std::vector<TableCell> cells;
    const double tol = tolerance_for(reference.regime);
    for (std::size_t i = 0; i < kMetrics.size(); ++i) {
        for (std::size_t j = 0; j < kColumns.size(); ++j) {
            const double value = pick(report.aggregates, kMetrics[i], kColumns[j]);
            const double ref = reference.values[i][j];
            const double dev = std::abs(value - ref);
            cells.push_back({reference.circuit, reference.regime, kMetrics[i], kColumns[j], value,
                             ref, dev, tol, reference.exact[i][j], dev <= tol});
        }
    }
    return cells;
}

}  // namespace qagency::cli
