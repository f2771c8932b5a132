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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qagency/agency.h"
#include "qagency/nogo.h"
#include "qagency/optimizer.h"

namespace qagency {

inline constexpr int kSchemaVersion = 1;

/// Malformed input document. what() carries a JSON-pointer-style location.
class SchemaError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Circuit spec documents:
//   {"schema_version": 1, "name": ...,
//    "deliberation_unitaries": [matrix, ...],
//    "control_table": {"01": matrix, ...},
//    "target_state": [[re, im], [re, im]]}        (optional, default |0>)
// where a matrix is a list of rows and each entry is [re, im].
std::string circuit_spec_to_json(const AgencyCircuitSpec &spec);
/// Parses and validates. Throws SchemaError on shape problems and on specs
/// that fail AgencyCircuitSpec::validate().
AgencyCircuitSpec circuit_spec_from_json(std::string_view text);
AgencyCircuitSpec load_circuit_spec(const std::string &path);

std::string report_to_json(const EvaluationReport &report);

/// One row per input state, then worst/average/best aggregate rows. Header:
///   schema_version,circuit,regime,row,bloch_x,bloch_y,bloch_z,
///   fidelity,bloch_length,angle_error,direction_defined
/// Aggregate rows put worst/average/best in the row column and leave the
/// Bloch input cells empty. Numbers use 17 significant digits.
std::string report_to_csv(const EvaluationReport &report);

std::string certificates_to_json(const std::vector<NoGoCertificate> &certs);

std::string optimize_result_to_json(const OptimizeResult &result, const OptimizeOptions &options);

/// %.17g
std::string format_exact(double value);
/// Fixed, 5 decimals. Values that would print as -0.00000 print as 0.00000.
std::string format_table(double value);

/// Splits CSV text into rows of cells. Quoted cells may contain commas and
/// doubled quotes.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace qagency
