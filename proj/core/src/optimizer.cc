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

#include "qagency/optimizer.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "qagency/rng.h"

namespace qagency {

std::string_view to_string(Objective objective) {
    return objective == Objective::kAverageFidelity ? "average" : "worst";
}

Objective parse_objective(std::string_view text) {
    if (text == "average") {
        return Objective::kAverageFidelity;
    }
    if (text == "worst") {
        return Objective::kWorstFidelity;
    }
    throw std::invalid_argument("unknown objective '" + std::string(text) + "'");
}

namespace {

constexpr double kTermThreshold = 1e-9;
constexpr double kFeasibilityTolerance = 1e-8;

// Hilbert-Schmidt inner product tr(a^dagger b).
complex hs(const ComplexMatrix &a, const ComplexMatrix &b) {
    complex s{};
    for (std::size_t k = 0; k < a.size(); ++k) {
        s += std::conj(a.entries()[k]) * b.entries()[k];
    }
    return s;
}

std::vector<ComplexMatrix> operator_basis(const AgencyCircuitSpec &spec) {
    std::vector<ComplexMatrix> basis{gates::I()};
    for (const auto &u : spec.deliberation_unitaries) {
        bool duplicate = false;
        for (const auto &b : basis) {
            // Same operator up to a global phase.
            if (std::abs(std::abs(hs(b, u)) - 2) < 1e-12) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) {
            basis.push_back(u);
        }
    }
    return basis;
}

// Solves the small Hermitian system g c = r by Gaussian elimination with
// partial pivoting; returns false if g is numerically singular.
bool solve(std::vector<std::vector<complex>> g, std::vector<complex> r, std::vector<complex> &c) {
    const std::size_t n = r.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::abs(g[row][col]) > std::abs(g[pivot][col])) {
                pivot = row;
            }
        }
        if (std::abs(g[pivot][col]) < 1e-10) {
            return false;
        }
        std::swap(g[col], g[pivot]);
        std::swap(r[col], r[pivot]);
        for (std::size_t row = col + 1; row < n; ++row) {
            const complex f = g[row][col] / g[col][col];
            for (std::size_t k = col; k < n; ++k) {
                g[row][k] -= f * g[col][k];
            }
            r[row] -= f * r[col];
        }
    }
    c.assign(n, 0);
    for (std::size_t row = n; row-- > 0;) {
        complex s = r[row];
        for (std::size_t k = row + 1; k < n; ++k) {
            s -= g[row][k] * c[k];
        }
        c[row] = s / g[row][row];
    }
    return true;
}

}  // namespace

ParamSpace::ParamSpace(AgencyCircuitSpec base) : base_(std::move(base)) {
    base_.validate();
    const auto basis = operator_basis(base_);
    const std::size_t n = basis.size();
    std::vector<std::vector<complex>> gram(n, std::vector<complex>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            gram[i][j] = hs(basis[i], basis[j]);
        }
    }
    for (const auto &[bits, v] : base_.control_table) {
        std::vector<complex> rhs(n);
        for (std::size_t i = 0; i < n; ++i) {
            rhs[i] = hs(basis[i], v);
        }
        std::vector<complex> coeffs;
        if (!solve(gram, rhs, coeffs)) {
            throw std::invalid_argument("infeasible parameterization for entry |" + bits +
                                        ">: basis unitaries are linearly dependent");
        }
        ComplexMatrix rebuilt = ComplexMatrix::zeros(2, 2);
        for (std::size_t i = 0; i < n; ++i) {
            rebuilt += basis[i] * coeffs[i];
        }
        if (max_abs_diff(rebuilt, v) > 1e-9) {
            throw std::invalid_argument("infeasible parameterization for entry |" + bits +
                                        ">: not a combination of the deliberation unitaries");
        }
        FreeEntry entry{bits, {}, {}, {}};
        for (std::size_t i = 0; i < n; ++i) {
            const double mag = std::abs(coeffs[i]);
            if (mag > kTermThreshold) {
                entry.terms.push_back(basis[i]);
                entry.phases.push_back(coeffs[i] / mag);
                entry.base_weights.push_back(mag);
            }
        }
        if (entry.terms.size() >= 2) {
            entries_.push_back(std::move(entry));
        }
    }
}

std::size_t ParamSpace::dimension() const {
    std::size_t d = 0;
    for (const auto &e : entries_) {
        d += e.terms.size();
    }
    return d;
}

std::vector<double> ParamSpace::base_point() const {
    std::vector<double> out;
    for (const auto &e : entries_) {
        out.insert(out.end(), e.base_weights.begin(), e.base_weights.end());
    }
    return out;
}

std::optional<AgencyCircuitSpec> ParamSpace::realize(std::span<const double> point) const {
    if (point.size() != dimension()) {
        throw std::invalid_argument("parameter vector has wrong dimension");
    }
    AgencyCircuitSpec spec = base_;
    std::size_t offset = 0;
    for (const auto &e : entries_) {
        ComplexMatrix m = ComplexMatrix::zeros(2, 2);
        for (std::size_t k = 0; k < e.terms.size(); ++k) {
            m += e.terms[k] * (e.phases[k] * point[offset + k]);
        }
        offset += e.terms.size();
        const double norm = m.frobenius_norm();
        if (norm < 1e-12) {
            return std::nullopt;
        }
        m = m * (std::sqrt(2.0) / norm);
        if (!is_unitary(m, kFeasibilityTolerance)) {
            return std::nullopt;
        }
        spec.control_table.at(e.bits) = m;
    }
    return spec;
}

namespace {

double score(const EvaluationReport &report, Objective kind) {
    return kind == Objective::kAverageFidelity ? report.aggregates.fidelity.average
                                               : report.aggregates.fidelity.worst;
}

class Search {
   public:
    Search(const ParamSpace &space, const OptimizeOptions &options, OptimizeResult &result)
        : space_(space),
          options_(options),
          result_(result),
          inputs_(options.regime, space.base_spec().num_qubits()) {}

    double evaluate(std::size_t restart, const std::vector<double> &params) {
        double value = std::numeric_limits<double>::quiet_NaN();
        if (auto spec = space_.realize(params)) {
            value = score(qagency::evaluate(*spec, inputs_), options_.objective);
        }
        result_.trace.push_back({restart, params, value});
        return std::isnan(value) ? -std::numeric_limits<double>::infinity() : value;
    }

    // Coordinate sweeps with a golden-section line search per coordinate.
    // A line-search result only replaces the current point if it is better.
    std::pair<std::vector<double>, double> refine(std::size_t restart, std::vector<double> x) {
        double fx = evaluate(restart, x);
        const double inv_phi = (std::sqrt(5.0) - 1) / 2;
        for (std::size_t sweep = 0; sweep < options_.sweeps; ++sweep) {
            for (std::size_t i = 0; i < x.size(); ++i) {
                double lo = -1, hi = 1;
                auto at = [&](double t) {
                    std::vector<double> y = x;
                    y[i] = t;
                    return std::make_pair(y, evaluate(restart, y));
                };
                double c = hi - inv_phi * (hi - lo);
                double d = lo + inv_phi * (hi - lo);
                auto [yc, fc] = at(c);
                auto [yd, fd] = at(d);
                for (std::size_t it = 0; it < options_.line_iterations; ++it) {
                    if (fc >= fd) {
                        hi = d;
                        d = c;
                        yd = std::move(yc);
                        fd = fc;
                        c = hi - inv_phi * (hi - lo);
                        std::tie(yc, fc) = at(c);
                    } else {
                        lo = c;
                        c = d;
                        yc = std::move(yd);
                        fc = fd;
                        d = lo + inv_phi * (hi - lo);
                        std::tie(yd, fd) = at(d);
                    }
                }
                if (fc >= fd && fc > fx) {
                    x = std::move(yc);
                    fx = fc;
                } else if (fd > fc && fd > fx) {
                    x = std::move(yd);
                    fx = fd;
                }
            }
        }
        return {std::move(x), fx};
    }

   private:
    const ParamSpace &space_;
    const OptimizeOptions &options_;
    OptimizeResult &result_;
    EvaluationInputs inputs_;
};

}  // namespace

double objective(const AgencyCircuitSpec &spec, Regime regime, Objective kind) {
    return score(evaluate(spec, regime), kind);
}

OptimizeResult optimize(const ParamSpace &space, const OptimizeOptions &options) {
    if (space.free_entries().empty()) {
        throw std::invalid_argument("nothing to optimize");
    }
    OptimizeResult result{space.base_spec(), {}, 0, 0, 0, {}};
    Search search(space, options, result);

    const std::vector<double> seed_point = space.base_point();
    result.baseline_value = search.evaluate(0, seed_point);
    result.best_params = seed_point;
    result.best_value = result.baseline_value;

    for (std::size_t restart = 0; restart <= options.budget; ++restart) {
        std::vector<double> start = seed_point;
        if (restart > 0) {
            Rng rng = Rng::stream(options.seed, restart);
            for (auto &w : start) {
                w = rng.uniform(-1, 1);
            }
        }
        auto [x, fx] = search.refine(restart, std::move(start));
        if (fx > result.best_value) {
            result.best_value = fx;
            result.best_params = std::move(x);
            result.best_restart = restart;
        }
    }
    result.best_spec = *space.realize(result.best_params);
    result.best_spec.name = space.base_spec().name + "+opt";
    return result;
}

}  // namespace qagency
