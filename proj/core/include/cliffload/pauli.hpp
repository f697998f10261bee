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

#ifndef CLIFFLOAD_PAULI_HPP
#define CLIFFLOAD_PAULI_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace cliffload {

inline constexpr std::uint32_t kMaxPauliQubits = 64;

/// Signed Pauli string i^phase * P_0 (x) P_1 (x) ... on up to 64 qubits.
///
/// Letter q is encoded by bit q of the two masks: X-part only is X, Z-part
/// only is Z, both is Y (the Hermitian Y, not XZ).
class PauliString {
  public:
    explicit PauliString(std::uint32_t n_qubits);
    PauliString(std::uint32_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask, unsigned phase = 0);

    /// Parses the text form "<phase> L L ...", e.g. "-i X I Z Y". The phase
    /// token is one of +, -, +i, -i and may be omitted. Letters may also be
    /// written without separators ("XIZY").
    static PauliString from_string(std::string_view text);

    std::uint32_t n_qubits() const noexcept { return n_; }
    std::uint64_t x_mask() const noexcept { return x_; }
    std::uint64_t z_mask() const noexcept { return z_; }
    /// Exponent k of the overall factor i^k, in 0..3.
    unsigned phase() const noexcept { return k_; }
    std::complex<double> phase_factor() const noexcept;

    /// 'I', 'X', 'Y' or 'Z' for zero-based qubit q.
    char letter(std::uint32_t q) const;
    void set_letter(std::uint32_t q, char letter);
    PauliString with_phase(unsigned phase) const noexcept;

    bool is_diagonal() const noexcept { return x_ == 0; }
    bool is_identity() const noexcept { return x_ == 0 && z_ == 0; }
    /// Hermitian iff the phase is real.
    bool is_hermitian() const noexcept { return (k_ & 1U) == 0; }
    bool commutes_with(const PauliString &other) const;
    /// Zero-based qubits carrying a non-identity letter, ascending.
    std::vector<std::uint32_t> support() const;

    /// Text form, e.g. "-i X I Z Y".
    std::string to_string() const;

    bool operator==(const PauliString &) const = default;

  private:
    std::uint32_t n_;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
    unsigned k_ = 0;
};

/// Letterwise product a * b with accumulated phase.
PauliString multiply(const PauliString &a, const PauliString &b);

/// <b|s|b> for a computational basis state b (bit q = qubit q): the product of
/// Z eigenvalues (times the string's phase) when s is diagonal, else 0.
std::complex<double> expectation_sign(const PauliString &s, std::uint64_t basis_state);

/// Dense 2^n x 2^n matrix, basis index bit q = qubit q. Guarded at 10 qubits.
Eigen::MatrixXcd to_dense(const PauliString &s);

/// p^(L)_mu: Z on qubits L, 2L, ..., L(mu-1) and X on qubits L(mu-1)+1 .. L mu
/// (all 1-based), phase +1. Requires L | n_qubits and 1 <= mu <= n_qubits / L.
PauliString p_operator(std::size_t mu, std::size_t L, std::uint32_t n_qubits);

/// Hermitian string P with p^(L)_mu p^(L)_nu = -i P for mu < nu, built from the
/// closed form: X on block mu except Y at qubit L mu, Z on qubits
/// L(mu+1), ..., L(nu-1), X on block nu.
PauliString givens_generator(std::size_t mu, std::size_t nu, std::size_t L, std::uint32_t n_qubits);

using PauliKey = std::pair<std::uint64_t, std::uint64_t>;

/// Sum of Hermitian Pauli strings with real coefficients. Strings are stored
/// phase-free; a +-1 string phase is folded into the coefficient.
class PauliSum {
  public:
    struct Term {
        double coeff;
        PauliString string;
    };

    explicit PauliSum(std::uint32_t n_qubits);

    std::uint32_t n_qubits() const noexcept { return n_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    /// Adds coeff * s. Throws std::invalid_argument when s carries phase +-i
    /// (the term would be anti-Hermitian) or sizes differ.
    PauliSum &add(double coeff, const PauliString &s);
    PauliSum &operator+=(const PauliSum &other);
    PauliSum operator*(double scale) const;

    /// Coefficient of the identity string.
    double identity_coeff() const;
    /// Copy without the identity term.
    PauliSum without_identity() const;
    /// Drops terms with |coeff| < tol.
    void prune(double tol);

    /// Terms in canonical (x mask, z mask) order.
    std::vector<Term> terms() const;
    double coeff(const PauliString &s) const;
    /// Sum of absolute coefficients; bounds the operator norm.
    double one_norm() const;

    Eigen::MatrixXcd to_dense() const;

    bool operator==(const PauliSum &) const = default;

  private:
    std::uint32_t n_;
    std::map<PauliKey, double> terms_;
};

/// Sum of Pauli strings with complex coefficients; closed under products.
class ComplexPauliSum {
  public:
    struct Term {
        std::complex<double> coeff;
        PauliString string;
    };

    explicit ComplexPauliSum(std::uint32_t n_qubits);
    ComplexPauliSum(std::complex<double> coeff, const PauliString &s);

    std::uint32_t n_qubits() const noexcept { return n_; }
    std::size_t size() const noexcept { return terms_.size(); }

    ComplexPauliSum &add(std::complex<double> coeff, const PauliString &s);
    ComplexPauliSum &operator+=(const ComplexPauliSum &other);
    ComplexPauliSum operator*(std::complex<double> scale) const;
    ComplexPauliSum adjoint() const;
    /// Drops terms with |coeff| <= tol (tol = 0 removes exact zeros only).
    void prune(double tol);

    std::vector<Term> terms() const;
    double one_norm() const;
    double distance(const ComplexPauliSum &other) const;

    /// Real-coefficient form. Throws std::invalid_argument when a coefficient
    /// has |imag| > tol, i.e. the sum is not Hermitian. Terms with
    /// |coeff| < drop_tol are dropped.
    PauliSum to_hermitian(double tol = 1e-10, double drop_tol = 0.0) const;

    Eigen::MatrixXcd to_dense() const;

  private:
    std::uint32_t n_;
    std::map<PauliKey, std::complex<double>> terms_;
};

ComplexPauliSum multiply(const ComplexPauliSum &a, const ComplexPauliSum &b);
ComplexPauliSum commutator(const ComplexPauliSum &a, const ComplexPauliSum &b);

/// {p^(L)_mu, p^(L)_nu} - 2 delta I computed symbolically. Every coefficient is
/// an exact small integer, so the identity holds iff this is empty.
ComplexPauliSum anticommutator_residual(std::size_t mu, std::size_t nu, std::size_t L, std::uint32_t n_qubits);

/// One-norm of anticommutator_residual; an upper bound on its operator norm
/// that vanishes exactly when the relation holds.
double anticommutator_norm(std::size_t mu, std::size_t nu, std::size_t L, std::uint32_t n_qubits);

}  // namespace cliffload

#endif  // CLIFFLOAD_PAULI_HPP
