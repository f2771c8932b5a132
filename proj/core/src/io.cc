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

#include "qagency/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qagency {

using nlohmann::json;

namespace {

json complex_to_json(complex z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(complex_to_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

[[noreturn]] void schema_fail(const std::string &where, const std::string &what) {
    throw SchemaError("schema error at " + where + ": " + what);
}

complex complex_from_json(const json &j, const std::string &where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        schema_fail(where, "expected [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

ComplexMatrix matrix_from_json(const json &j, const std::string &where) {
    if (!j.is_array() || j.empty()) {
        schema_fail(where, "expected a non-empty list of rows");
    }
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) {
        schema_fail(where + "/0", "expected a non-empty row");
    }
    std::vector<complex> entries;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string row_at = where + "/" + std::to_string(i);
        if (!j[i].is_array() || j[i].size() != cols) {
            schema_fail(row_at, "expected a row of " + std::to_string(cols) + " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            entries.push_back(complex_from_json(j[i][c], row_at + "/" + std::to_string(c)));
        }
    }
    try {
        return {j.size(), cols, std::move(entries)};
    } catch (const std::exception &e) {
        schema_fail(where, e.what());
    }
}

json aggregate_to_json(const Aggregate &a) {
    return {{"worst", a.worst}, {"average", a.average}, {"best", a.best}};
}

}  // namespace

std::string circuit_spec_to_json(const AgencyCircuitSpec &spec) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["name"] = spec.name;
    json delib = json::array();
    for (const auto &u : spec.deliberation_unitaries) {
        delib.push_back(matrix_to_json(u));
    }
    doc["deliberation_unitaries"] = std::move(delib);
    json table = json::object();
    for (const auto &[bits, v] : spec.control_table) {
        table[bits] = matrix_to_json(v);
    }
    doc["control_table"] = std::move(table);
    json target = json::array();
    for (std::size_t k = 0; k < spec.target_state.dimension(); ++k) {
        target.push_back(complex_to_json(spec.target_state.amplitude(k)));
    }
    doc["target_state"] = std::move(target);
    return doc.dump(2);
}

AgencyCircuitSpec circuit_spec_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        schema_fail("/", "expected an object");
    }
    if (!doc.contains("schema_version")) {
        schema_fail("/schema_version", "required field missing");
    }
    if (!doc["schema_version"].is_number_integer() ||
        doc["schema_version"].get<int>() != kSchemaVersion) {
        schema_fail("/schema_version", "unsupported version (expected " +
                                           std::to_string(kSchemaVersion) + ")");
    }
    for (const char *field : {"name", "deliberation_unitaries", "control_table"}) {
        if (!doc.contains(field)) {
            schema_fail(std::string("/") + field, "required field missing");
        }
    }
    if (!doc["name"].is_string()) {
        schema_fail("/name", "expected a string");
    }
    const json &delib = doc["deliberation_unitaries"];
    if (!delib.is_array()) {
        schema_fail("/deliberation_unitaries", "expected a list of matrices");
    }
    const json &table = doc["control_table"];
    if (!table.is_object()) {
        schema_fail("/control_table", "expected an object keyed by control bitstring");
    }

    std::vector<ComplexMatrix> unitaries;
    for (std::size_t k = 0; k < delib.size(); ++k) {
        unitaries.push_back(
            matrix_from_json(delib[k], "/deliberation_unitaries/" + std::to_string(k)));
    }
    std::map<std::string, ComplexMatrix> rows;
    for (const auto &[bits, m] : table.items()) {
        rows.emplace(bits, matrix_from_json(m, "/control_table/" + bits));
    }
    PureState target = PureState::zero();
    if (doc.contains("target_state")) {
        const json &t = doc["target_state"];
        if (!t.is_array() || t.size() != 2) {
            schema_fail("/target_state", "expected two [re, im] amplitudes");
        }
        try {
            target = PureState(complex_from_json(t[0], "/target_state/0"),
                               complex_from_json(t[1], "/target_state/1"));
        } catch (const SchemaError &) {
            throw;
        } catch (const std::exception &e) {
            schema_fail("/target_state", e.what());
        }
    }
    AgencyCircuitSpec spec{doc["name"].get<std::string>(), std::move(unitaries), std::move(rows),
                           target};
    try {
        spec.validate();
    } catch (const std::exception &e) {
        schema_fail("/", e.what());
    }
    return spec;
}

AgencyCircuitSpec load_circuit_spec(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return circuit_spec_from_json(buffer.str());
}

std::string report_to_json(const EvaluationReport &report) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["circuit"] = report.circuit_name;
    doc["regime"] = std::string(to_string(report.regime));
    json rows = json::array();
    for (const auto &r : report.records) {
        rows.push_back({{"bloch", {r.input.x, r.input.y, r.input.z}},
                        {"fidelity", r.fidelity},
                        {"bloch_length", r.bloch_length},
                        {"angle_error", r.angle_error},
                        {"direction_defined", r.direction_defined}});
    }
    doc["states"] = std::move(rows);
    doc["aggregates"] = {{"fidelity", aggregate_to_json(report.aggregates.fidelity)},
                         {"bloch_length", aggregate_to_json(report.aggregates.bloch_length)},
                         {"angle_error", aggregate_to_json(report.aggregates.angle_error)}};
    return doc.dump(2);
}

std::string format_exact(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string format_table(double value) {
    if (std::abs(value) < 5e-6) {
        value = 0;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.5f", value);
    return buf;
}

namespace {

std::string csv_cell(const std::string &text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char c : text) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

}  // namespace

std::string report_to_csv(const EvaluationReport &report) {
    std::ostringstream out;
    out << "schema_version,circuit,regime,row,bloch_x,bloch_y,bloch_z,fidelity,bloch_length,"
           "angle_error,direction_defined\n";
    const std::string prefix = std::to_string(kSchemaVersion) + "," +
                               csv_cell(report.circuit_name) + "," +
                               std::string(to_string(report.regime)) + ",";
    for (std::size_t k = 0; k < report.records.size(); ++k) {
        const auto &r = report.records[k];
        out << prefix << k << "," << format_exact(r.input.x) << "," << format_exact(r.input.y)
            << "," << format_exact(r.input.z) << "," << format_exact(r.fidelity) << ","
            << format_exact(r.bloch_length) << "," << format_exact(r.angle_error) << ","
            << (r.direction_defined ? "true" : "false") << "\n";
    }
    const auto &a = report.aggregates;
    const std::pair<const char *, double Aggregate::*> rows[] = {
        {"worst", &Aggregate::worst}, {"average", &Aggregate::average}, {"best", &Aggregate::best}};
    for (const auto &[label, field] : rows) {
        out << prefix << label << ",,,," << format_exact(a.fidelity.*field) << ","
            << format_exact(a.bloch_length.*field) << "," << format_exact(a.angle_error.*field)
            << ",\n";
    }
    return out.str();
}

std::string certificates_to_json(const std::vector<NoGoCertificate> &certs) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    json list = json::array();
    for (const auto &c : certs) {
        json details = json::object();
        for (const auto &[key, value] : c.details) {
            details[key] = value;
        }
        list.push_back({{"claim_id", c.claim_id},
                        {"kind", c.kind == NoGoCertificate::Kind::kViolation ? "violation"
                                                                             : "symmetry"},
                        {"witness", c.witness},
                        {"violation_magnitude", c.violation_magnitude},
                        {"tolerance", c.tolerance},
                        {"status", c.status()},
                        {"valid", c.valid()},
                        {"details", std::move(details)}});
    }
    doc["certificates"] = std::move(list);
    return doc.dump(2);
}

std::string optimize_result_to_json(const OptimizeResult &result, const OptimizeOptions &options) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["regime"] = std::string(to_string(options.regime));
    doc["objective"] = std::string(to_string(options.objective));
    doc["budget"] = options.budget;
    doc["seed"] = options.seed;
    doc["baseline_value"] = result.baseline_value;
    doc["best_value"] = result.best_value;
    doc["improvement"] = result.best_value - result.baseline_value;
    doc["best_restart"] = result.best_restart;
    doc["best_params"] = result.best_params;
    doc["best_spec"] = json::parse(circuit_spec_to_json(result.best_spec));
    json trace = json::array();
    for (const auto &p : result.trace) {
        trace.push_back({{"restart", p.restart},
                         {"params", p.params},
                         {"value", std::isnan(p.value) ? json(nullptr) : json(p.value)}});
    }
    doc["trace"] = std::move(trace);
    return doc.dump(2);
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string cell;
    bool quoted = false;
    bool any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        any = true;
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            row.push_back(std::move(cell));
            cell.clear();
        } else if (c == '\n') {
            row.push_back(std::move(cell));
            cell.clear();
            rows.push_back(std::move(row));
            row.clear();
            any = false;
        } else if (c != '\r') {
            cell += c;
        }
    }
    if (any) {
        row.push_back(std::move(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace qagency
