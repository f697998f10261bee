// Copyright 2026 The cliffload Authors
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

#include "cliffload/loader.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "cliffload/pauli.hpp"

namespace cliffload {

std::string_view ladder_name(LadderStyle style) noexcept {
    return style == LadderStyle::Cascade ? "cascade" : "logtree";
}

LadderStyle parse_ladder(std::string_view name) {
    if (name == "cascade") {
        return LadderStyle::Cascade;
    }
    if (name == "logtree") {
        return LadderStyle::LogTree;
    }
    throw std::invalid_argument("unknown ladder style '" + std::string(name) + "' (expected cascade or logtree)");
}

Circuit cnot_ladder(std::span<const std::uint32_t> qubits, LadderStyle style, std::uint32_t n_qubits) {
    if (qubits.empty()) {
        throw std::invalid_argument("CNot ladder needs at least one qubit");
    }
    if (n_qubits == 0) {
        n_qubits = *std::max_element(qubits.begin(), qubits.end()) + 1;
    }
    Circuit c(n_qubits);
    const std::size_t k = qubits.size();
    if (style == LadderStyle::Cascade) {
        for (std::size_t i = 0; i + 1 < k; ++i) {
            c.append(Gate::cnot(qubits[i], qubits[i + 1]));
        }
        return c;
    }
    // Node j counts back from the root (qubits[k-1] is j = 0). In round t every
    // node with j mod 2^(t+1) == 2^t folds its parity into node j - 2^t.
    auto node = [&](std::size_t j) { return qubits[k - 1 - j]; };
    for (std::size_t step = 1; step < k; step *= 2) {
        for (std::size_t j = step; j < k; j += 2 * step) {
            c.append(Gate::cnot(node(j), node(j - step)));
        }
    }
    return c;
}

Circuit givens_gate(std::size_t mu, std::size_t nu, double theta, std::size_t L, std::uint32_t n_qubits,
                    LadderStyle style) {
    const PauliString gen = givens_generator(mu, nu, L, n_qubits);
    const std::vector<std::uint32_t> support = gen.support();

    Circuit basis(n_qubits);
    for (const auto q : support) {
        switch (gen.letter(q)) {
            case 'X':
                basis.append(Gate::h(q));
                break;
            case 'Y':
                basis.append(Gate::rx(q, std::numbers::pi / 2));
                break;
            default:
                break;
        }
    }
    const Circuit ladder = cnot_ladder(support, style, n_qubits);

    // exp(+i theta P) = exp(-i (-theta) P): the parity qubit sees RZ(-2 theta).
    Circuit c(n_qubits);
    c.append(basis);
    c.append(ladder);
    c.append(Gate::rz(support.back(), -2.0 * theta));
    c.append(ladder.inverse());
    c.append(basis.inverse());
    return c;
}

Circuit clifford_loader(const GivensSchedule &schedule, std::size_t L, LadderStyle style, bool negate) {
    if (L == 0 || schedule.n == 0) {
        throw std::invalid_argument("loader needs L >= 1 and a non-empty schedule");
    }
    const auto n_qubits = static_cast<std::uint32_t>(L * schedule.n);
    // First half in time: rotations undoing the load, root-first order of the
    // zeroing replay; then p_1; then the exact inverse.
    Circuit unload(n_qubits);
    for (const auto &layer : schedule.layers) {
        for (const auto &g : layer) {
            unload.append(givens_gate(g.mu, g.nu, -g.theta, L, n_qubits, style));
        }
    }
    Circuit c(n_qubits);
    c.append(unload);
    for (std::uint32_t q = 0; q < L; ++q) {
        c.append(Gate::x(q));
    }
    if (negate) {
        // RZ(2 pi) = -I.
        c.append(Gate::rz(0, 2.0 * std::numbers::pi));
    }
    c.append(unload.inverse());
    return c;
}

Circuit clifford_loader(std::span<const double> x, std::size_t L, LadderStyle style) {
    const GivensSchedule schedule = compute_angles(x);
    return clifford_loader(schedule, L, style, x.size() == 1 && x[0] < 0);
}

LoaderPlan make_plan(const OrthonormalMatrix &m, std::size_t L, const std::optional<OrthonormalMatrix> &complement) {
    if (L == 0) {
        throw std::invalid_argument("L must be positive");
    }
    LoaderPlan plan;
    plan.n_qubits = static_cast<std::uint32_t>(L * m.rows());
    plan.L = L;
    const OrthonormalMatrix *source = &m;
    if (complement) {
        if (complement->rows() != m.rows() || complement->cols() + m.cols() != m.rows()) {
            throw std::invalid_argument("hole-trick complement must be " + std::to_string(m.rows()) + " x " +
                                        std::to_string(m.rows() - m.cols()));
        }
        for (std::size_t a = 0; a < m.cols(); ++a) {
            for (std::size_t b = 0; b < complement->cols(); ++b) {
                double dot = 0.0;
                for (std::size_t r = 0; r < m.rows(); ++r) {
                    dot += m(r, a) * (*complement)(r, b);
                }
                if (std::abs(dot) > 1e-10) {
                    throw std::invalid_argument("hole-trick complement is not orthogonal to the matrix");
                }
            }
        }
        plan.hole_trick = true;
        source = &*complement;
    }
    for (std::size_t l = 0; l < source->cols(); ++l) {
        const std::vector<double> col = source->column(l);
        plan.columns.push_back(compute_angles(col));
        plan.negate.push_back(col.size() == 1 && col[0] < 0);
    }
    return plan;
}

Circuit circuit_from_plan(const LoaderPlan &plan, LadderStyle style) {
    Circuit c(plan.n_qubits);
    for (std::size_t l = 0; l < plan.columns.size(); ++l) {
        const bool negate = l < plan.negate.size() && plan.negate[l];
        c.append(clifford_loader(plan.columns[l], plan.L, style, negate));
    }
    if (plan.hole_trick) {
        for (std::uint32_t q = 0; q < plan.n_qubits; ++q) {
            c.append(Gate::x(q));
        }
    }
    return c;
}

Circuit prepare_state_circuit(const OrthonormalMatrix &m, std::size_t L, LadderStyle style, bool hole_trick,
                              const std::optional<OrthonormalMatrix> &complement) {
    if (hole_trick && !complement) {
        throw std::invalid_argument("the hole trick needs an explicit complement matrix");
    }
    return circuit_from_plan(make_plan(m, L, hole_trick ? complement : std::nullopt), style);
}

void to_json(nlohmann::json &j, const LoaderPlan &plan) {
    j = nlohmann::json{{"n_qubits", plan.n_qubits},
                       {"L", plan.L},
                       {"hole_trick", plan.hole_trick},
                       {"loaders", nlohmann::json::array()}};
    for (std::size_t l = 0; l < plan.columns.size(); ++l) {
        nlohmann::json entry = plan.columns[l];
        entry["column"] = l + 1;
        if (l < plan.negate.size() && plan.negate[l]) {
            entry["negate"] = true;
        }
        j["loaders"].push_back(std::move(entry));
    }
}

}  // namespace cliffload
