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

#include "cli/commands.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "cli/reference.h"
#include "json.hpp"
#include "qagency/agency.h"
#include "qagency/cloning.h"
#include "qagency/io.h"
#include "qagency/nogo.h"
#include "qagency/optimizer.h"

namespace qagency::cli {

namespace {

using nlohmann::json;

/// Bad input discovered after flag parsing; maps to kExitUsage.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string fmt(const char *pattern, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, value);
    return buf;
}

std::string pad(std::string text, std::size_t width) {
    if (text.size() < width) {
        text.append(width - text.size(), ' ');
    }
    return text;
}

/// Writes `content` to `path`, or to `out` when `path` is empty.
void emit(const std::string &content, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << content) || !file.flush()) {
        throw UsageError("cannot write '" + path + "'");
    }
}

AgencyCircuitSpec resolve_circuit(const std::string &selector) {
    if (auto spec = find_builtin(selector)) {
        return *spec;
    }
    if (!std::filesystem::is_regular_file(selector)) {
        std::string names;
        for (const auto &n : builtin_names()) {
            names += (names.empty() ? "" : ", ") + n;
        }
        throw UsageError("unknown circuit '" + selector +
                         "': not a built-in name (" + names + ") or a readable file");
    }
    try {
        return load_circuit_spec(selector);
    } catch (const SchemaError &e) {
        throw UsageError(selector + ": " + e.what());
    } catch (const std::ios_base::failure &e) {
        throw UsageError(e.what());
    }
}

std::vector<Regime> regimes_for(const std::string &text) {
    if (text == "both") {
        return {Regime::kCopies, Regime::kClones};
    }
    return {parse_regime(text)};
}

// ---------------------------------------------------------------- reproduce

struct TableOptions {
    std::string only;
    std::string regime = "both";
    std::string format = "pretty";
    std::string out;
    unsigned threads = 1;
};

struct TableBlock {
    AgencyCircuitSpec spec;
    std::vector<EvaluationReport> reports;
    std::vector<TableCell> cells;
};

std::string table_pretty(const std::vector<TableBlock> &blocks, const std::vector<Regime> &regimes,
                         std::size_t breaches) {
    std::ostringstream s;
    const std::size_t label_width = 26;
    for (const auto &b : blocks) {
        s << b.spec.name << ", N=" << b.spec.num_qubits() << "\n";
        s << pad("", label_width);
        for (Regime r : regimes) {
            s << pad(r == Regime::kCopies ? "N copies" : "N clones", 30);
        }
        s << "\n" << pad("", label_width);
        for (std::size_t k = 0; k < regimes.size(); ++k) {
            for (Column c : kColumns) {
                s << pad(std::string(to_string(c)), 10);
            }
        }
        s << "\n";
        for (Metric m : kMetrics) {
            s << pad(std::string(label(m)), label_width);
            for (const auto &report : b.reports) {
                for (Column c : kColumns) {
                    s << pad(format_table(pick(report.aggregates, m, c)), 10);
                }
            }
            s << "\n";
        }
        s << pad("  |deviation|", label_width) << "\n";
        for (Metric m : kMetrics) {
            s << pad("  " + std::string(label(m)), label_width);
            for (const auto &cell : b.cells) {
                if (cell.metric == m) {
                    s << pad(fmt("%.1e", cell.deviation) + (cell.within_tolerance ? "" : "!"), 10);
                }
            }
            s << "\n";
        }
        s << "\n";
    }
    std::size_t total = 0;
    for (const auto &b : blocks) {
        total += b.cells.size();
    }
    if (breaches == 0) {
        s << "all " << total << " cells within tolerance (copies "
          << fmt("%.0e", kCopiesTolerance) << ", clones " << fmt("%.0e", kClonesTolerance)
          << ")\n";
    } else {
        s << breaches << " of " << total << " cells outside tolerance:\n";
        for (const auto &b : blocks) {
            for (const auto &c : b.cells) {
                if (!c.within_tolerance) {
                    s << "  " << c.circuit << " " << to_string(c.regime) << " "
                      << to_string(c.metric) << " " << to_string(c.column) << ": got "
                      << format_exact(c.value) << ", reference " << format_exact(c.reference)
                      << ", deviation " << fmt("%.3e", c.deviation) << "\n";
                }
            }
        }
    }
    return s.str();
}

std::string table_csv(const std::vector<TableBlock> &blocks) {
    std::ostringstream s;
    s << "schema_version,circuit,regime,metric,column,value,reference,deviation,tolerance,"
         "within_tolerance\n";
    for (const auto &b : blocks) {
        for (const auto &c : b.cells) {
            s << kSchemaVersion << ",\"" << c.circuit << "\"," << to_string(c.regime) << ","
              << to_string(c.metric) << "," << to_string(c.column) << ","
              << format_exact(c.value) << "," << format_exact(c.reference) << ","
              << format_exact(c.deviation) << "," << format_exact(c.tolerance) << ","
              << (c.within_tolerance ? "true" : "false") << "\n";
        }
    }
    return s.str();
}

std::string table_json(const std::vector<TableBlock> &blocks, std::size_t breaches) {
    json cells = json::array();
    for (const auto &b : blocks) {
        for (const auto &c : b.cells) {
            cells.push_back({{"circuit", c.circuit},
                             {"regime", std::string(to_string(c.regime))},
                             {"metric", std::string(to_string(c.metric))},
                             {"column", std::string(to_string(c.column))},
                             {"value", c.value},
                             {"reference", c.reference},
                             {"deviation", c.deviation},
                             {"tolerance", c.tolerance},
                             {"within_tolerance", c.within_tolerance}});
        }
    }
    json doc = {{"schema_version", kSchemaVersion},
                {"pass", breaches == 0},
                {"breaches", breaches},
                {"cells", std::move(cells)}};
    return doc.dump(2) + "\n";
}

int cmd_reproduce_table(const TableOptions &opt, std::ostream &out, std::ostream &err) {
    std::vector<AgencyCircuitSpec> circuits;
    if (opt.only.empty()) {
        circuits = builtin_circuits();
    } else if (auto spec = find_builtin(opt.only)) {
        circuits.push_back(*spec);
    } else {
        throw UsageError("unknown built-in circuit '" + opt.only + "'");
    }
    const auto regimes = regimes_for(opt.regime);

    std::vector<TableBlock> blocks;
    std::size_t breaches = 0;
    for (const auto &spec : circuits) {
        TableBlock block{spec, {}, {}};
        for (Regime r : regimes) {
            block.reports.push_back(evaluate(spec, r, opt.threads));
            auto cells = compare(block.reports.back(), reference_block(spec.name, r));
            for (const auto &c : cells) {
                breaches += c.within_tolerance ? 0 : 1;
            }
            block.cells.insert(block.cells.end(), cells.begin(), cells.end());
        }
        blocks.push_back(std::move(block));
    }

    std::string content;
    if (opt.format == "csv") {
        content = table_csv(blocks);
    } else if (opt.format == "json") {
        content = table_json(blocks, breaches);
    } else {
        content = table_pretty(blocks, regimes, breaches);
    }
    emit(content, opt.out, out);
    if (breaches > 0) {
        if (opt.format != "pretty" || !opt.out.empty()) {
            err << breaches << " cells outside tolerance\n";
        }
        return kExitQuantitative;
    }
    return kExitOk;
}

// --------------------------------------------------------------------- eval

struct EvalOptions {
    std::string circuit;
    std::string regime = "copies";
    std::string format = "pretty";
    std::string out;
    unsigned threads = 1;
};

std::string report_pretty(const EvaluationReport &report) {
    std::ostringstream s;
    s << report.circuit_name << " (" << to_string(report.regime) << ")\n";
    s << pad("#", 4) << pad("input bloch", 30) << pad("fidelity", 10) << pad("length", 10)
      << "angle\n";
    for (std::size_t k = 0; k < report.records.size(); ++k) {
        const auto &r = report.records[k];
        s << pad(std::to_string(k), 4)
          << pad("(" + fmt("%+.5f", r.input.x) + "," + fmt("%+.5f", r.input.y) + "," +
                     fmt("%+.5f", r.input.z) + ")",
                 30)
          << pad(format_table(r.fidelity), 10) << pad(format_table(r.bloch_length), 10)
          << (r.direction_defined ? format_table(r.angle_error) : "undefined") << "\n";
    }
    s << "\n" << pad("", 26) << pad("worst", 10) << pad("average", 10) << "best\n";
    for (Metric m : kMetrics) {
        s << pad(std::string(label(m)), 26);
        for (Column c : kColumns) {
            s << pad(format_table(pick(report.aggregates, m, c)), 10);
        }
        s << "\n";
    }
    return s.str();
}

int cmd_eval(const EvalOptions &opt, std::ostream &out) {
    const AgencyCircuitSpec spec = resolve_circuit(opt.circuit);
    const auto report = evaluate(spec, parse_regime(opt.regime), opt.threads);
    std::string content;
    if (opt.format == "csv") {
        content = report_to_csv(report);
    } else if (opt.format == "json") {
        content = report_to_json(report) + "\n";
    } else {
        content = report_pretty(report);
    }
    emit(content, opt.out, out);
    return kExitOk;
}

int cmd_export(const std::string &circuit, const std::string &path, std::ostream &out) {
    emit(circuit_spec_to_json(resolve_circuit(circuit)) + "\n", path, out);
    return kExitOk;
}

// --------------------------------------------------------------------- nogo

struct NogoOptions {
    std::optional<double> alpha;
    std::optional<double> beta;
    std::size_t grid = 8;
    std::string format = "pretty";
    std::string out;
};

std::string nogo_pretty(const std::vector<NoGoCertificate> &certs) {
    std::ostringstream s;
    for (const auto &c : certs) {
        s << c.claim_id << "\n";
        s << "  witness    " << c.witness << "\n";
        s << "  magnitude  " << format_table(c.violation_magnitude) << " ("
          << format_exact(c.violation_magnitude) << "), tolerance " << fmt("%.0e", c.tolerance)
          << "\n";
        std::string status = c.status();
        if (status == "boundary") {
            status = "boundary case, not a violation";
        }
        s << "  status     " << status << "\n";
        for (const auto &[key, value] : c.details) {
            s << "  " << pad(key, 22) << format_exact(value) << "\n";
        }
        s << "\n";
    }
    // Unequal superposition w0 I + w1 iX on |0>: weights read off in the
    // computational basis differ from those in the |+>,|-> basis.
    const double w0 = 1 / std::sqrt(3.0), w1 = std::sqrt(2.0 / 3);
    const double x_mag = std::abs(complex(w0, w1)) / std::numbers::sqrt2;
    s << "note: unequal superposition sqrt(1/3) I + sqrt(2/3) iX on |0>: amplitude magnitudes "
      << format_table(w0) << ", " << format_table(w1) << " in the 0/1 basis, "
      << format_table(x_mag) << ", " << format_table(x_mag)
      << " in the +/- basis (not asserted)\n";
    return s.str();
}

int cmd_nogo(const NogoOptions &opt, std::ostream &out) {
    if (opt.alpha.has_value() != opt.beta.has_value()) {
        throw UsageError("--alpha and --beta must be given together");
    }
    if (opt.grid == 0) {
        throw UsageError("--grid must be positive");
    }
    const double a = opt.alpha.value_or(1 / std::numbers::sqrt2);
    const double b = opt.beta.value_or(1 / std::numbers::sqrt2);
    if (std::abs(a * a + b * b - 1) > kStructuralTolerance) {
        throw UsageError("alpha^2 + beta^2 must equal 1");
    }
    const complex i{0, 1};
    std::vector<NoGoCertificate> certs;
    certs.push_back(no_cloning_witness(a, b));
    certs.push_back(superposed_action_symmetry(PureState::zero(), gates::I(), gates::X() * i));
    certs.push_back(selector_impossibility(gates::I(), gates::X(),
                                           PureState(std::sqrt(0.75), std::sqrt(0.25)), opt.grid));

    const std::string content =
        opt.format == "json" ? certificates_to_json(certs) + "\n" : nogo_pretty(certs);
    emit(content, opt.out, out);
    const bool ok = std::all_of(certs.begin(), certs.end(),
                                [](const NoGoCertificate &c) { return c.consistent(); });
    return ok ? kExitOk : kExitQuantitative;
}

// ----------------------------------------------------------------- optimize

struct OptimizeCliOptions {
    std::string circuit;
    std::size_t budget = 0;
    std::uint64_t seed = 0;
    std::string regime = "copies";
    std::string objective = "average";
    std::string format = "pretty";
    std::string out;
};

int cmd_optimize(const OptimizeCliOptions &opt, std::ostream &out, std::ostream &err) {
    const AgencyCircuitSpec spec = resolve_circuit(opt.circuit);
    OptimizeOptions options;
    options.regime = parse_regime(opt.regime);
    options.objective = parse_objective(opt.objective);
    options.budget = opt.budget;
    options.seed = opt.seed;

    OptimizeResult result;
    try {
        result = optimize(ParamSpace(spec), options);
    } catch (const std::invalid_argument &e) {
        err << e.what() << "\n";
        return kExitQuantitative;
    }

    std::string content;
    if (opt.format == "json") {
        content = optimize_result_to_json(result, options) + "\n";
    } else {
        std::size_t infeasible = 0;
        for (const auto &p : result.trace) {
            infeasible += std::isnan(p.value) ? 1 : 0;
        }
        std::ostringstream s;
        s << "circuit      " << spec.name << "\n";
        s << "objective    " << to_string(options.objective) << " fidelity, "
          << to_string(options.regime) << "\n";
        s << "budget       " << options.budget << " (seed " << options.seed << ")\n";
        s << "baseline     " << format_table(result.baseline_value) << "\n";
        s << "best         " << format_table(result.best_value) << " (restart "
          << result.best_restart << ")\n";
        s << "improvement  " << fmt("%+.5f", result.best_value - result.baseline_value) << "\n";
        s << "evaluations  " << result.trace.size() << " (" << infeasible << " infeasible)\n";
        content = s.str();
    }
    emit(content, opt.out, out);
    return kExitOk;
}

// -------------------------------------------------------------------- clone

struct CloneOptions {
    std::size_t m = 2;
    std::string bloch = "0,0,1";
    std::string format = "pretty";
    std::string out;
};

BlochVector parse_bloch(const std::string &text) {
    std::vector<double> parts;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw UsageError("--bloch expects X,Y,Z numbers, got '" + text + "'");
        }
    }
    if (parts.size() != 3) {
        throw UsageError("--bloch expects three comma-separated numbers");
    }
    return {parts[0], parts[1], parts[2]};
}

int cmd_clone(const CloneOptions &opt, std::ostream &out) {
    if (opt.m < 2 || opt.m > kMaxClones) {
        throw UsageError("--m must be between 2 and " + std::to_string(kMaxClones));
    }
    const BlochVector v = parse_bloch(opt.bloch);
    PureState psi = PureState::zero();
    try {
        psi = pure_from_bloch(v);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    const CloneEnsemble ensemble = symmetric_clone(psi, opt.m);
    const double expected_f = nm_fidelity_bound(1, opt.m);
    const double expected_len = (static_cast<double>(opt.m) + 2) / (3.0 * opt.m);

    json clones = json::array();
    std::ostringstream s;
    s << "1 -> " << opt.m << " symmetric cloning of bloch (" << format_table(v.x) << ", "
      << format_table(v.y) << ", " << format_table(v.z) << ")\n";
    s << "expected fidelity " << format_table(expected_f) << ", expected length "
      << format_table(expected_len) << "\n";
    s << pad("clone", 7) << pad("fidelity", 10) << pad("length", 10) << "bloch\n";
    for (std::size_t k = 0; k < opt.m; ++k) {
        const DensityMatrix marginal = ensemble.marginal(k);
        const double f = fidelity(marginal, psi);
        const BlochVector b = to_bloch(marginal);
        s << pad(std::to_string(k), 7) << pad(format_table(f), 10)
          << pad(format_table(b.length()), 10) << "(" << format_table(b.x) << ", "
          << format_table(b.y) << ", " << format_table(b.z) << ")\n";
        clones.push_back({{"index", k},
                          {"fidelity", f},
                          {"bloch_length", b.length()},
                          {"bloch", {b.x, b.y, b.z}}});
    }
    if (opt.format == "json") {
        json doc = {{"schema_version", kSchemaVersion},
                    {"m", opt.m},
                    {"source_bloch", {v.x, v.y, v.z}},
                    {"expected_fidelity", expected_f},
                    {"expected_bloch_length", expected_len},
                    {"clones", std::move(clones)}};
        emit(doc.dump(2) + "\n", opt.out, out);
    } else {
        emit(s.str(), opt.out, out);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum agency circuits: reproduce tables, evaluate circuits, certify no-go results",
                 "qagency"};
    app.require_subcommand(1);
    const auto formats = CLI::IsMember({"csv", "json", "pretty"});
    const auto json_or_pretty = CLI::IsMember({"json", "pretty"});
    const auto single_regime = CLI::IsMember({"copies", "clones"});

    TableOptions table;
    auto *reproduce = app.add_subcommand("reproduce-table", "Evaluate the built-in circuits and "
                                                            "diff against the reference table");
    reproduce->add_option("--only", table.only, "Restrict to one built-in circuit");
    reproduce->add_option("--regime", table.regime)->check(CLI::IsMember({"copies", "clones",
                                                                          "both"}));
    reproduce->add_option("--format", table.format)->check(formats);
    reproduce->add_option("--out", table.out, "Write output to PATH");
    reproduce->add_option("--threads", table.threads)->check(CLI::Range(1u, 64u));

    EvalOptions eval;
    auto *eval_cmd = app.add_subcommand("eval", "Evaluate one circuit over the test states");
    eval_cmd->add_option("--circuit", eval.circuit, "Built-in name or circuit JSON path")
        ->required();
    eval_cmd->add_option("--regime", eval.regime)->check(single_regime);
    eval_cmd->add_option("--format", eval.format)->check(formats);
    eval_cmd->add_option("--out", eval.out);
    eval_cmd->add_option("--threads", eval.threads)->check(CLI::Range(1u, 64u));

    std::string export_circuit, export_out;
    auto *export_cmd = app.add_subcommand("export", "Print a circuit as circuit-spec JSON");
    export_cmd->add_option("--circuit", export_circuit)->required();
    export_cmd->add_option("--out", export_out);

    NogoOptions nogo;
    auto *nogo_cmd = app.add_subcommand("nogo", "Run the no-go certificates");
    nogo_cmd->add_option("--alpha", nogo.alpha, "Real |0> amplitude for the no-cloning witness");
    nogo_cmd->add_option("--beta", nogo.beta, "Real |1> amplitude for the no-cloning witness");
    nogo_cmd->add_option("--grid", nogo.grid, "Selector search grid resolution");
    nogo_cmd->add_option("--format", nogo.format)->check(json_or_pretty);
    nogo_cmd->add_option("--out", nogo.out);

    OptimizeCliOptions optim;
    auto *optimize_cmd =
        app.add_subcommand("optimize", "Search the superposed control-table weights");
    optimize_cmd->add_option("--circuit", optim.circuit)->required();
    optimize_cmd->add_option("--budget", optim.budget, "Random restarts after the seeded start");
    optimize_cmd->add_option("--seed", optim.seed);
    optimize_cmd->add_option("--regime", optim.regime)->check(single_regime);
    optimize_cmd->add_option("--objective", optim.objective)
        ->check(CLI::IsMember({"average", "worst"}));
    optimize_cmd->add_option("--format", optim.format)->check(json_or_pretty);
    optimize_cmd->add_option("--out", optim.out);

    CloneOptions clone;
    auto *clone_cmd = app.add_subcommand("clone", "Run the symmetric 1 -> M cloner");
    clone_cmd->add_option("--m", clone.m, "Number of clones (2..6)");
    clone_cmd->add_option("--bloch", clone.bloch, "Unit Bloch vector X,Y,Z");
    clone_cmd->add_option("--format", clone.format)->check(json_or_pretty);
    clone_cmd->add_option("--out", clone.out);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*reproduce) {
            return cmd_reproduce_table(table, out, err);
        }
        if (*eval_cmd) {
            return cmd_eval(eval, out);
        }
        if (*export_cmd) {
            return cmd_export(export_circuit, export_out, out);
        }
        if (*nogo_cmd) {
            return cmd_nogo(nogo, out);
        }
        if (*optimize_cmd) {
            return cmd_optimize(optim, out, err);
        }
        if (*clone_cmd) {
            return cmd_clone(clone, out);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qagency::cli
