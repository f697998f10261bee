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

#ifndef CLIFFLOAD_VQE_HPP
#define CLIFFLOAD_VQE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cliffload/chem.hpp"
#include "cliffload/loader.hpp"
#include "cliffload/ortho.hpp"

namespace cliffload {

/// Angles of a product of Givens rotations G(l, j), l = 1..d', j = l+1..n',
/// applied to the first d' columns of the n' x n' identity.
struct StiefelParams {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<double> angles;

    static std::size_t count(std::size_t n_rows, std::size_t n_cols);
    static StiefelParams zeros(std::size_t n_rows, std::size_t n_cols);
};

/// M = G_1 G_2 ... G_K E with rotation k acting on rows (l, j) as
/// (r_l, r_j) <- (cos a r_l - sin a r_j, sin a r_l + cos a r_j).
/// Zero angles give the identity columns.
OrthonormalMatrix params_to_matrix(const StiefelParams &p);

/// Energy of the state prepared from params_to_matrix(p) with width L.
double objective(const StiefelParams &p, const MolecularHamiltonian &h, std::size_t L, LadderStyle style);

struct TraceRow {
    std::size_t iter;
    double energy;
    double grad_norm;
};

struct MinimizeOptions {
    double tol = 1e-9;
    std::size_t max_iter = 200;
    double fd_step = 1e-5;
    std::size_t memory = 10;
};

struct MinimizeResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    /// Row 0 is the starting point; one row per accepted step after that.
    std::vector<TraceRow> trace;
    /// Function evaluations, including gradient probes.
    std::size_t evaluations = 0;
};

using Objective = std::function<double(std::span<const double>)>;

/// Central finite differences. Probes run concurrently, so `f` must be safe to
/// call from several threads.
std::vector<double> fd_gradient(const Objective &f, std::span<const double> x, double step);

/// L-BFGS (two-loop recursion) with finite-difference gradients and Armijo
/// backtracking. Pairs failing the curvature condition s.y > 0 are skipped.
/// Stops when the gradient infinity-norm drops below tol, when an accepted
/// step changes the value by less than tol (1 + |f|), or when no descent is
/// found along the steepest direction.
MinimizeResult minimize(const Objective &f, std::span<const double> init, const MinimizeOptions &opts = {});

/// (e_hf - e_opt) / (e_hf - e_fci), or nothing when the denominator is below 1e-12.
std::optional<double> correlation_fraction(double e_hf, double e_opt, double e_fci);

struct VqeOptions {
    std::size_t L = 2;
    LadderStyle style = LadderStyle::LogTree;
    MinimizeOptions minimize;
    /// Uniform perturbation of the zero start, in radians (0 keeps the HF start).
    double perturbation = 0.0;
    std::uint64_t seed = 0;
};

struct VqeResult {
    double energy = 0.0;
    StiefelParams params;
    double e_hf = 0.0;
    double e_fci = 0.0;
    double e_pair = 0.0;
    std::optional<double> fraction;
    std::size_t iterations = 0;
    bool converged = false;
    std::vector<TraceRow> trace;
    std::uint32_t n_qubits = 0;
    std::size_t n_elec = 0;
    std::size_t L = 1;
    std::string ladder;
};

/// Optimizes the width-L correlated ansatz for d electrons on h from the HF
/// start. Requires L | d and in-process FCI (n_qubits <= 16).
VqeResult run_vqe(const MolecularHamiltonian &h, std::size_t d, const VqeOptions &opts = {});

void to_json(nlohmann::json &j, const VqeResult &r);
/// "iter,energy,grad_norm" rows.
std::string trace_csv(const std::vector<TraceRow> &trace);

}  // namespace cliffload

#endif  // CLIFFLOAD_VQE_HPP
