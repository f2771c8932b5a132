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
#include <string>
#include <string_view>
#include <vector>

#include "qagency/agency.h"

namespace qagency::cli {

enum class Metric { kFidelity, kBlochLength, kAngleError };
enum class Column { kWorst, kAverage, kBest };

inline constexpr std::array<Metric, 3> kMetrics = {Metric::kFidelity, Metric::kBlochLength,
                                                   Metric::kAngleError};
inline constexpr std::array<Column, 3> kColumns = {Column::kWorst, Column::kAverage,
                                                   Column::kBest};

std::string_view to_string(Metric metric);
std::string_view to_string(Column column);
/// Row label as printed in the published table.
std::string_view label(Metric metric);

inline constexpr double kCopiesTolerance = 1e-4;
inline constexpr double kClonesTolerance = 1e-3;

double tolerance_for(Regime regime);

/// Published worst/average/best values of one circuit in one regime.
struct ReferenceBlock {
    std::string circuit;
    Regime regime;
    /// values[metric][column]
    std::array<std::array<double, 3>, 3> values;
    /// Cells printed as exact fractions (1/2, 2/3, 1, 0, 1/3, pi/2).
    std::array<std::array<bool, 3>, 3> exact;
};

const std::vector<ReferenceBlock> &reference_table();
const ReferenceBlock &reference_block(std::string_view circuit, Regime regime);

double pick(const Aggregates &aggregates, Metric metric, Column column);

struct TableCell {
    std::string circuit;
    Regime regime;
    Metric metric;
    Column column;
    double value;
    double reference;
    double deviation;
    double tolerance;
    bool exact;
    bool within_tolerance;
};

/// Per-cell comparison of a report against its published block.
std::vector<TableCell> compare(const EvaluationReport &report, const ReferenceBlock &reference);

}  // namespace qagency::cli
