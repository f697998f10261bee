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

#ifndef CLIFFLOAD_CHEM_HPP
#define CLIFFLOAD_CHEM_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cliffload/pauli.hpp"
#include "cliffload/sim.hpp"

namespace cliffload {

/// Restricted molecular integrals in chemists' notation, zero-based.
struct FciDump {
    std::size_t n_orb = 0;
    std::size_t n_elec = 0;
    int ms2 = 0;
    double core_energy = 0.0;
    std::vector<double> h1;  // n_orb^2, row-major
    std::vector<double> g2;  // n_orb^4, (ij|kl) at ((i n + j) n + k) n + l

    static FciDump zeros(std::size_t n_orb, std::size_t n_elec);

    double h(std::size_t i, std::size_t j) const { return h1[i * n_orb + j]; }
    double g(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return g2[((i * n_orb + j) * n_orb + k) * n_orb + l];
    }
    /// Sets h_ij and h_ji.
    void set_h(std::size_t i, std::size_t j, double v);
    /// Sets all eight permutation-equivalent entries of (ij|kl).
    void set_g(std::size_t i, std::size_t j, std::size_t k, std::size_t l, double v);

    /// Largest asymmetry over the h1 and g2 symmetry relations.
    double symmetry_error() const;
};

class FcidumpParseError : public std::runtime_error {
  public:
    enum class Kind { MalformedNamelist, NonNumeric, IndexOutOfRange };

    FcidumpParseError(Kind kind, std::size_t line, const std::string &what);

    Kind kind() const noexcept { return kind_; }
    /// 1-based line of the offending text.
    std::size_t line() const noexcept { return line_; }

  private:
    Kind kind_;
    std::size_t line_;
};

/// Parses FCIDUMP text: an &FCI namelist with NORB and NELEC, closed by &END
/// or '/', then lines "value i j k l" with 1-based indices. All-zero indices
/// give the core energy, k = l = 0 a one-electron integral, and otherwise a
/// two-electron integral. Lines "value i 0 0 0" (orbital energies) are ignored.
FciDump parse_fcidump(std::string_view text);
FciDump read_fcidump(const std::string &path);

/// Canonical text: unique nonzero entries only, 17 significant digits.
std::string serialize_fcidump(const FciDump &f);

/// Qubit Hamiltonian: constant + pauli, where pauli has no identity term.
struct MolecularHamiltonian {
    std::uint32_t n_qubits;
    PauliSum pauli;
    double constant = 0.0;

    /// constant + <psi|pauli|psi>.
    double energy(const StateVector &psi) const;
    /// Full operator including the constant on the identity.
    PauliSum full() const;
};

inline constexpr std::size_t kMaxHamiltonianOrbitals = 12;

/// Jordan-Wigner Hamiltonian over 2 n_orb spin orbitals, spatial orbital p on
/// qubits 2p (alpha) and 2p+1 (beta). Coefficients below 1e-12 are dropped.
MolecularHamiltonian jw_hamiltonian(const FciDump &f);

/// Creation operator a^dag_q (zero-based qubit q) as a Pauli sum.
ComplexPauliSum jw_creation(std::uint32_t q, std::uint32_t n_qubits);
ComplexPauliSum jw_annihilation(std::uint32_t q, std::uint32_t n_qubits);

/// Energy of the determinant occupying the first d spin orbitals.
double hf_energy(const MolecularHamiltonian &h, std::size_t d);

inline constexpr std::uint32_t kMaxFciQubits = 16;

/// Lowest eigenvalue in the d-particle sector. Dense solve up to
/// `dense_limit` determinants, Lanczos above.
double fci_ground_energy(const MolecularHamiltonian &h, std::size_t d, std::size_t dense_limit = 2000);

/// Lowest eigenvalue of the full 2^n operator plus penalty * (N - d)^2.
/// Independent cross-check for fci_ground_energy; n <= 10.
double dense_penalty_ground_energy(const MolecularHamiltonian &h, std::size_t d, double penalty = 10.0);

void to_json(nlohmann::json &j, const MolecularHamiltonian &h);

}  // namespace cliffload

#endif  // CLIFFLOAD_CHEM_HPP
