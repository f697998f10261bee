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

#ifndef CLIFFLOAD_CIRCUIT_HPP
#define CLIFFLOAD_CIRCUIT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

namespace cliffload {

enum class GateKind { PauliX, Hadamard, RotX, RotZ, CNot };

std::string_view gate_name(GateKind kind) noexcept;

/// Hardware-level gate. Qubits are zero-based; for CNot qubits[0] is the
/// control and qubits[1] the target. RotX(a) = exp(-i a X / 2) and
/// RotZ(a) = exp(-i a Z / 2).
struct Gate {
    GateKind kind;
    std::array<std::uint32_t, 2> qubits{0, 0};
    double angle = 0.0;

    static Gate x(std::uint32_t q) { return {GateKind::PauliX, {q, 0}, 0.0}; }
    static Gate h(std::uint32_t q) { return {GateKind::Hadamard, {q, 0}, 0.0}; }
    static Gate rx(std::uint32_t q, double a) { return {GateKind::RotX, {q, 0}, a}; }
    static Gate rz(std::uint32_t q, double a) { return {GateKind::RotZ, {q, 0}, a}; }
    static Gate cnot(std::uint32_t control, std::uint32_t target) { return {GateKind::CNot, {control, target}, 0.0}; }

    bool is_two_qubit() const noexcept { return kind == GateKind::CNot; }
    std::size_t arity() const noexcept { return is_two_qubit() ? 2 : 1; }
    Gate inverse() const noexcept;

    bool operator==(const Gate &) const = default;
};

/// Ordered gate list on a fixed register. Gates are validated on append.
class Circuit {
  public:
    explicit Circuit(std::uint32_t n_qubits);

    std::uint32_t n_qubits() const noexcept { return n_qubits_; }
    std::span<const Gate> gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }
    bool empty() const noexcept { return gates_.empty(); }

    Circuit &append(const Gate &g);
    /// Appends every gate of `other`, which must not be wider than this register.
    Circuit &append(const Circuit &other);

    /// Reversed gate order with every gate inverted.
    Circuit inverse() const;

    std::size_t two_qubit_gate_count() const noexcept;

    bool operator==(const Circuit &) const = default;

  private:
    std::uint32_t n_qubits_;
    std::vector<Gate> gates_;
};

/// Longest chain of CNots in the gate dependency DAG. Single-qubit gates
/// order the DAG but add no length.
std::size_t two_qubit_depth(const Circuit &c);

/// Removes pairs of identical CNots that are adjacent on both of their qubits,
/// repeating until no pair remains. Off by default everywhere; used only for
/// the optional compiled-depth column of the depth report.
Circuit cancel_adjacent_cnots(const Circuit &c);

inline constexpr std::uint32_t kMaxUnitaryQubits = 10;

/// Dense unitary (product of gate matrices in application order). Basis index
/// i holds qubit q in bit q. Throws ResourceLimitError above kMaxUnitaryQubits.
Eigen::MatrixXcd unitary(const Circuit &c);

/// 2x2 (or 4x4 for CNot, control = low bit) matrix of a single gate.
Eigen::MatrixXcd gate_matrix(const Gate &g);

/// OpenQASM 2.0 text. Angles use 17 significant digits.
std::string to_qasm(const Circuit &c);

/// Reads the OpenQASM subset produced by to_qasm. Throws std::invalid_argument.
Circuit parse_qasm(std::string_view text);

void to_json(nlohmann::json &j, const Gate &g);
void to_json(nlohmann::json &j, const Circuit &c);
Circuit circuit_from_json(const nlohmann::json &j);

}  // namespace cliffload

#endif  // CLIFFLOAD_CIRCUIT_HPP
