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

#ifndef CLIFFLOAD_ORACLE_HPP
#define CLIFFLOAD_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "cliffload/loader.hpp"
#include "cliffload/ortho.hpp"
#include "cliffload/sim.hpp"

namespace cliffload {

inline constexpr std::uint32_t kMaxDenseModes = 10;
inline constexpr std::uint32_t kMaxOracleQubits = 20;

/// Dense fermionic operators on n <= 10 modes, built by Kronecker products
/// with the Jordan-Wigner convention a^dag_mu = Z...Z (X - iY)/2 on mode mu.
struct FockOperatorMatrix {
    enum class Role { Creation, Annihilation, P };

    std::uint32_t n_modes;
    Role role;
    std::size_t mu;  // 1-based
    std::size_t L = 1;
    Eigen::MatrixXcd matrix;

    static FockOperatorMatrix creation(std::size_t mu, std::uint32_t n_modes);
    static FockOperatorMatrix annihilation(std::size_t mu, std::uint32_t n_modes);
    /// a^dag + a on each mode of block mu behind a Z string on the block ends,
    /// which is p^(L)_mu written out with Kronecker products.
    static FockOperatorMatrix p(std::size_t mu, std::size_t L, std::uint32_t n_modes);
};

/// Amplitude det(A_B) on every d-hot Fock state |B>, zero elsewhere.
StateVector slater_oracle_det(const OrthonormalMatrix &a);

enum class SlaterConstruction {
    /// prod_l sum_mu A_{mu l} a^dag_mu on the vacuum.
    Creation,
    /// prod_l sum_mu A_{mu l} (a^dag_mu + a_mu) on the vacuum.
    POperator,
};

/// Applies the column operators to the vacuum with dense matrices (column 1
/// first) and normalizes. Guarded at 10 modes.
StateVector slater_oracle_creation(const OrthonormalMatrix &a,
                                   SlaterConstruction construction = SlaterConstruction::Creation);

/// Amplitude det(G_B') on every state whose occupied modes are the blocks
/// {L(j-1)+1 .. L j : j in B'}.
StateVector correlated_oracle(const OrthonormalMatrix &g, std::size_t L, std::uint32_t n_qubits);

struct VerifyReport {
    double fidelity = 0.0;
    double max_amp_error = 0.0;
    /// phi with simulated ~= e^{i phi} * oracle.
    double global_phase = 0.0;
    double off_support_mass = 0.0;
    /// Fock strings of simulated amplitudes above 1e-12, ascending index.
    std::vector<std::string> support;
    std::uint32_t n_qubits = 0;
    std::size_t L = 1;
    std::size_t two_qubit_depth = 0;
    std::size_t gate_count = 0;
    /// The root-angle fix-up fired in at least one loader.
    bool root_fixup = false;
};

/// Oracle state for m under width L (slater_oracle_det when L == 1).
StateVector oracle_state(const OrthonormalMatrix &m, std::size_t L);

/// Simulates `circuit` and compares it with the oracle of (m, L) after
/// aligning the phase on the oracle's largest amplitude.
VerifyReport compare_with_oracle(const Circuit &circuit, const OrthonormalMatrix &m, std::size_t L);

/// Synthesizes prepare_state_circuit(m, L, style) and compares it with the oracle.
VerifyReport verify_preparation(const OrthonormalMatrix &m, std::size_t L, LadderStyle style);

void to_json(nlohmann::json &j, const VerifyReport &r);

/// All strictly increasing d-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t d);

}  // namespace cliffload

#endif  // CLIFFLOAD_ORACLE_HPP
