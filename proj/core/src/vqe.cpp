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

#include "cliffload/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "cliffload/error.hpp"
#include "cliffload/parallel.hpp"
#include "cliffload/sim.hpp"

namespace cliffload {

std::size_t StiefelParams::count(std::size_t n_rows, std::size_t n_cols) {
    return n_cols * n_rows - n_cols * (n_cols + 1) / 2;
}

StiefelParams StiefelParams::zeros(std::size_t n_rows, std::size_t n_cols) {
    if (n_cols == 0 || n_cols > n_rows) {
        throw std::invalid_argument("Stiefel parameters need 1 <= cols <= rows");
    }
    return {n_rows, n_cols, std::vector<double>(count(n_rows, n_cols), 0.0)};
}

OrthonormalMatrix params_to_matrix(const StiefelParams &p) {
    if (p.n_cols == 0 || p.n_cols > p.n_rows) {
        throw std::invalid_argument("Stiefel parameters need 1 <= cols <= rows");
    }
    if (p.angles.size() != StiefelParams::count(p.n_rows, p.n_cols)) {
        throw std::invalid_argument("expected " + std::to_string(StiefelParams::count(p.n_rows, p.n_cols)) +
                                    " angles, got " + std::to_string(p.angles.size()));
    }
    const std::size_t n = p.n_rows;
    const std::size_t d = p.n_cols;
    std::vector<double> m(n * d, 0.0);
    for (std::size_t c = 0; c < d; ++c) {
        m[c * d + c] = 1.0;
    }
    std::vector<std::pair<std::size_t, std::size_t>> rows;
    for (std::size_t l = 0; l < d; ++l) {
        for (std::size_t j = l + 1; j < n; ++j) {
            rows.emplace_back(l, j);
        }
    }
    for (std::size_t k = rows.size(); k-- > 0;) {
        const auto [l, j] = rows[k];
        const double c = std::cos(p.angles[k]);
        const double s = std::sin(p.angles[k]);
        for (std::size_t col = 0; col < d; ++col) {
            const double a = m[l * d + col];
            const double b = m[j * d + col];
            m[l * d + col] = c * a - s * b;
            m[j * d + col] = s * a + c * b;
        }
    }
    return {n, d, std::move(m)};
}

double objective(const StiefelParams &p, const MolecularHamiltonian &h, std::size_t L, LadderStyle style) {
    if (L * p.n_rows != h.n_qubits) {
        throw std::invalid_argument("ansatz width does not match the Hamiltonian");
    }
    const Circuit c = prepare_state_circuit(params_to_matrix(p), L, style);
    return h.energy(run(c));
}

std::vector<double> fd_gradient(const Objective &f, std::span<const double> x, double step) {
    const auto n = static_cast<std::ptrdiff_t>(x.size());
    std::vector<double> g(x.size(), 0.0);
    const int threads = thread_count();
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        std::vector<double> probe(x.begin(), x.end());
        const auto k = static_cast<std::size_t>(i);
        probe[k] = x[k] + step;
        const double up = f(probe);
        probe[k] = x[k] - step;
        const double down = f(probe);
        g[k] = (up - down) / (2.0 * step);
    }
    return g;
}

namespace {

double dot(const std::vector<double> &a, const std::vector<double> &b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

double inf_norm(const std::vector<double> &a) {
    double m = 0.0;
    for (double v : a) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

}  // namespace

MinimizeResult minimize(const Objective &f, std::span<const double> init, const MinimizeOptions &opts) {
    if (!(opts.tol > 0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    MinimizeResult res;
    res.x.assign(init.begin(), init.end());
    const std::size_t n = res.x.size();
    res.value = f(res.x);
    res.evaluations = 1;
    if (n == 0) {
        res.converged = true;
        res.trace.push_back({0, res.value, 0.0});
        return res;
    }
    std::vector<double> g = fd_gradient(f, res.x, opts.fd_step);
    res.evaluations += 2 * n;
    res.trace.push_back({0, res.value, inf_norm(g)});

    std::deque<std::vector<double>> s_hist;
    std::deque<std::vector<double>> y_hist;
    constexpr double kArmijo = 1e-4;
    constexpr int kMaxHalvings = 40;

    while (res.iterations < opts.max_iter) {
        if (inf_norm(g) < opts.tol) {
            res.converged = true;
            break;
        }
        bool accepted = false;
        std::vector<double> x_new;
        double f_new = 0.0;
        for (int attempt = 0; attempt < 2 && !accepted; ++attempt) {
            // Two-loop recursion for d = -H g.
            std::vector<double> d(g);
            std::vector<double> alpha(s_hist.size());
            for (std::size_t k = s_hist.size(); k-- > 0;) {
                alpha[k] = dot(s_hist[k], d) / dot(y_hist[k], s_hist[k]);
                for (std::size_t i = 0; i < n; ++i) {
                    d[i] -= alpha[k] * y_hist[k][i];
                }
            }
            double gamma = 1.0;
            if (!s_hist.empty()) {
                gamma = dot(s_hist.back(), y_hist.back()) / dot(y_hist.back(), y_hist.back());
            } else {
                // Unscaled steepest descent: cap the first trial step at 0.1 rad.
                gamma = std::min(1.0, 0.1 / inf_norm(g));
            }
            for (double &v : d) {
                v *= gamma;
            }
            for (std::size_t k = 0; k < s_hist.size(); ++k) {
                const double beta = dot(y_hist[k], d) / dot(y_hist[k], s_hist[k]);
                for (std::size_t i = 0; i < n; ++i) {
                    d[i] += (alpha[k] - beta) * s_hist[k][i];
                }
            }
            for (double &v : d) {
                v = -v;
            }
            double slope = dot(g, d);
            if (!(slope < 0)) {
                s_hist.clear();
                y_hist.clear();
                continue;
            }
            double step = 1.0;
            x_new.assign(n, 0.0);
            for (int h = 0; h < kMaxHalvings; ++h) {
                for (std::size_t i = 0; i < n; ++i) {
                    x_new[i] = res.x[i] + step * d[i];
                }
                f_new = f(x_new);
                ++res.evaluations;
                if (f_new <= res.value + kArmijo * step * slope) {
                    accepted = true;
                    break;
                }
                step *= 0.5;
            }
            if (!accepted) {
                s_hist.clear();
                y_hist.clear();
            }
        }
        if (!accepted) {
            // No decrease along -g: the value has stagnated.
            res.converged = true;
            break;
        }
        std::vector<double> g_new = fd_gradient(f, x_new, opts.fd_step);
        res.evaluations += 2 * n;
        std::vector<double> s(n);
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = x_new[i] - res.x[i];
            y[i] = g_new[i] - g[i];
        }
        const double sy = dot(s, y);
        if (sy > 1e-12 * std::sqrt(dot(s, s) * dot(y, y))) {
            s_hist.push_back(std::move(s));
            y_hist.push_back(std::move(y));
            if (s_hist.size() > opts.memory) {
                s_hist.pop_front();
                y_hist.pop_front();
            }
        }
        const double change = std::abs(f_new - res.value);
        res.x = std::move(x_new);
        res.value = f_new;
        g = std::move(g_new);
        ++res.iterations;
        res.trace.push_back({res.iterations, res.value, inf_norm(g)});
        if (change < opts.tol * (1.0 + std::abs(res.value))) {
            res.converged = true;
            break;
        }
    }
    if (!res.converged && inf_norm(g) < opts.tol) {
        res.converged = true;
    }
    return res;
}

std::optional<double> correlation_fraction(double e_hf, double e_opt, double e_fci) {
    const double denom = e_hf - e_fci;
    if (denom < 1e-12) {
        return std::nullopt;
    }
    return (e_hf - e_opt) / denom;
}

VqeResult run_vqe(const MolecularHamiltonian &h, std::size_t d, const VqeOptions &opts) {
    const std::size_t L = opts.L;
    if (L == 0 || h.n_qubits % L != 0 || d % L != 0 || d == 0 || d > h.n_qubits) {
        throw std::invalid_argument("L must divide both the qubit count and the electron count");
    }
    if (h.n_qubits > kMaxFciQubits) {
        throw ResourceLimitError("in-process FCI is limited to " + std::to_string(kMaxFciQubits) + " qubits");
    }
    VqeResult r;
    r.n_qubits = h.n_qubits;
    r.n_elec = d;
    r.L = L;
    r.ladder = std::string(ladder_name(opts.style));
    r.e_hf = hf_energy(h, d);
    r.e_fci = fci_ground_energy(h, d);

    StiefelParams start = StiefelParams::zeros(h.n_qubits / L, d / L);
    if (opts.perturbation > 0) {
        std::mt19937_64 rng(opts.seed);
        std::uniform_real_distribution<double> u(-opts.perturbation, opts.perturbation);
        for (double &a : start.angles) {
            a = u(rng);
        }
    }
    const Objective f = [&](std::span<const double> x) {
        StiefelParams p{start.n_rows, start.n_cols, std::vector<double>(x.begin(), x.end())};
        return objective(p, h, L, opts.style);
    };
    const MinimizeResult m = minimize(f, start.angles, opts.minimize);
    r.energy = m.value;
    r.params = {start.n_rows, start.n_cols, m.x};
    r.e_pair = r.e_hf - r.energy;
    r.fraction = correlation_fraction(r.e_hf, r.energy, r.e_fci);
    r.iterations = m.iterations;
    r.converged = m.converged;
    r.trace = m.trace;
    return r;
}

void to_json(nlohmann::json &j, const VqeResult &r) {
    j = nlohmann::json{{"energy", r.energy},
                       {"e_hf", r.e_hf},
                       {"e_fci", r.e_fci},
                       {"e_pair", r.e_pair},
                       {"fraction", r.fraction ? nlohmann::json(*r.fraction) : nlohmann::json(nullptr)},
                       {"iterations", r.iterations},
                       {"converged", r.converged},
                       {"n_qubits", r.n_qubits},
                       {"n_elec", r.n_elec},
                       {"L", r.L},
                       {"ladder", r.ladder},
                       {"params", {{"rows", r.params.n_rows}, {"cols", r.params.n_cols}, {"angles", r.params.angles}}}};
}

std::string trace_csv(const std::vector<TraceRow> &trace) {
    std::string out = "iter,energy,grad_norm\n";
    char buf[128];
    for (const auto &row : trace) {
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", row.iter, row.energy, row.grad_norm);
        out += buf;
    }
    return out;
}

}  // namespace cliffload
