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

#ifndef CLIFFLOAD_LOADER_HPP
#define CLIFFLOAD_LOADER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cliffload/circuit.hpp"
#include "cliffload/ortho.hpp"

namespace cliffload {

enum class LadderStyle { Cascade, LogTree };

std::string_view ladder_name(LadderStyle style) noexcept;
/// "cascade" or "logtree"; throws std::invalid_argument otherwise.
LadderStyle parse_ladder(std::string_view name);

/// CNots accumulating the parity of `qubits` onto the last listed qubit.
/// Cascade links consecutive qubits (depth k-1); LogTree fans in pairwise
/// (depth ceil(log2 k)). The circuit register has `n_qubits` qubits, or
/// max(qubits)+1 when zero.
Circuit cnot_ladder(std::span<const std::uint32_t> qubits, LadderStyle style, std::uint32_t n_qubits = 0);

/// Circuit for the Givens rotation exp[theta p_nu p_mu] = exp[+i theta P],
/// with P = givens_generator(mu, nu, L, n). Under conjugation it rotates
///   U p_mu U^dag = cos 2t p_mu + sin 2t p_nu,
///   U p_nu U^dag = cos 2t p_nu - sin 2t p_mu,
/// and leaves the other p_r untouched. Indices are 1-based logical modes.
Circuit givens_gate(std::size_t mu, std::size_t nu, double theta, std::size_t L, std::uint32_t n_qubits,
                    LadderStyle style);

/// Clifford loader for the unit vector x, acting on L * x.size() qubits: as an
/// operator it equals sum_mu x_mu p^(L)_mu.
Circuit clifford_loader(std::span<const double> x, std::size_t L, LadderStyle style);

/// Same, from an already resolved schedule (the schedule is not re-checked
/// against any vector, which the verification negative control relies on).
Circuit clifford_loader(const GivensSchedule &schedule, std::size_t L, LadderStyle style, bool negate = false);

/// Resolved angles for every loader of a state preparation.
struct LoaderPlan {
    std::uint32_t n_qubits = 0;
    std::size_t L = 1;
    std::vector<GivensSchedule> columns;
    /// Per-column flag for the n == 1 case, where the loader must realize -p_1.
    std::vector<bool> negate;
    bool hole_trick = false;
};

/// Resolves the angles for `m` (column 1 acts first). With `complement`, the
/// plan loads the complement columns instead and marks hole_trick; the
/// complement must have m.rows() - m.cols() columns orthogonal to m.
LoaderPlan make_plan(const OrthonormalMatrix &m, std::size_t L,
                     const std::optional<OrthonormalMatrix> &complement = std::nullopt);

Circuit circuit_from_plan(const LoaderPlan &plan, LadderStyle style);

/// Loaders for the columns of `m` in order, on L * m.rows() qubits. With
/// hole_trick, a complement matrix is required: the circuit loads its columns
/// and then flips every qubit.
Circuit prepare_state_circuit(const OrthonormalMatrix &m, std::size_t L, LadderStyle style, bool hole_trick = false,
                              const std::optional<OrthonormalMatrix> &complement = std::nullopt);

void to_json(nlohmann::json &j, const LoaderPlan &plan);

}  // namespace cliffload

#endif  // CLIFFLOAD_LOADER_HPP
