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

#ifndef CLIFFLOAD_SIM_HPP
#define CLIFFLOAD_SIM_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cliffload/circuit.hpp"
#include "cliffload/pauli.hpp"

namespace cliffload {

inline constexpr std::uint32_t kMaxStateQubits = 24;

/// 2^n complex amplitudes. Index bit q holds qubit q, so the Fock string
/// |b1 b2 ... bN> sits at index sum_q b_q 2^(q-1).
class StateVector {
  public:
    using Amplitude = std::complex<double>;

    /// |0...0>. Throws ResourceLimitError above kMaxStateQubits.
    explicit StateVector(std::uint32_t n_qubits);
    /// Computational basis state |index>.
    static StateVector basis(std::uint32_t n_qubits, std::uint64_t index);
    /// Takes ownership of amplitudes; the size must be a power of two and the
    /// norm 1 within 1e-10.
    static StateVector from_amplitudes(std::vector<Amplitude> amps);

    std::uint32_t n_qubits() const noexcept { return n_; }
    std::size_t dim() const noexcept { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
    Amplitude operator[](std::uint64_t i) const noexcept { return amps_[i]; }
    double norm() const;

    void apply(const Gate &g);
    void apply(const Circuit &c);

    /// Multiplies every amplitude by e^{i phi}.
    void rotate_phase(double phi);

  private:
    std::uint32_t n_;
    std::vector<Amplitude> amps_;
};

/// Runs `c` starting from |0...0>.
StateVector run(const Circuit &c);
/// Runs `c` starting from `initial`.
StateVector run(const Circuit &c, StateVector initial);

enum class ExpectationMethod {
    /// Sparse when the state's negligible tail provably moves the result by
    /// less than 1e-12, dense otherwise.
    Auto,
    Dense,
    Sparse,
};

/// <psi|h|psi>. Always real because PauliSum terms are Hermitian.
double expectation(const PauliSum &h, const StateVector &psi, ExpectationMethod method = ExpectationMethod::Auto);

/// Same for a complex sum; throws std::invalid_argument unless it is Hermitian.
double expectation(const ComplexPauliSum &h, const StateVector &psi);

struct NumberMoments {
    double mean;
    double variance;
};

/// Mean and variance of sum_q (I - Z_q) / 2.
NumberMoments particle_number_moments(const StateVector &psi);

/// |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);

/// Fock string "b1b2...bN" of a basis index (qubit 0 first).
std::string fock_string(std::uint64_t index, std::uint32_t n_qubits);
/// Inverse of fock_string.
std::uint64_t fock_index(const std::string &bits);

/// [[bitstring, re, im], ...] for every |amp| > threshold.
nlohmann::json amplitude_dump(const StateVector &psi, double threshold = 1e-12);

}  // namespace cliffload

#endif  // CLIFFLOAD_SIM_HPP
