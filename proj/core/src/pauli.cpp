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

#include "cliffload/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "cliffload/circuit.hpp"
#include "cliffload/error.hpp"

namespace cliffload {

namespace {

using cd = std::complex<double>;

constexpr cd kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

std::uint64_t low_mask(std::uint32_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

unsigned popcount(std::uint64_t v) { return static_cast<unsigned>(std::popcount(v)); }

void check_width(std::uint32_t n) {
    if (n == 0 || n > kMaxPauliQubits) {
        throw std::invalid_argument("Pauli strings support 1.." + std::to_string(kMaxPauliQubits) + " qubits");
    }
}

}  // namespace

PauliString::PauliString(std::uint32_t n_qubits) : n_(n_qubits) { check_width(n_qubits); }

PauliString::PauliString(std::uint32_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask, unsigned phase)
    : n_(n_qubits), x_(x_mask), z_(z_mask), k_(phase & 3U) {
    check_width(n_qubits);
    if (((x_ | z_) & ~low_mask(n_)) != 0) {
        throw std::invalid_argument("Pauli mask has bits beyond the register");
    }
}

PauliString PauliString::from_string(std::string_view text) {
    unsigned phase = 0;
    std::string letters;
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) {
            ++i;
        }
    };
    skip_space();
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        const bool neg = text[i] == '-';
        ++i;
        bool imag = false;
        if (i < text.size() && text[i] == 'i') {
            imag = true;
            ++i;
        }
        phase = (imag ? 1U : 0U) + (neg ? 2U : 0U);
    }
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c == ' ' || c == '\t') {
            continue;
        }
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument("bad Pauli letter '" + std::string(1, c) + "'");
        }
        letters.push_back(c);
    }
    if (letters.empty()) {
        throw std::invalid_argument("Pauli string has no letters");
    }
    PauliString s(static_cast<std::uint32_t>(letters.size()));
    for (std::uint32_t q = 0; q < letters.size(); ++q) {
        s.set_letter(q, letters[q]);
    }
    s.k_ = phase;
    return s;
}

std::complex<double> PauliString::phase_factor() const noexcept { return kIPow[k_]; }

char PauliString::letter(std::uint32_t q) const {
    if (q >= n_) {
        throw std::out_of_range("qubit index out of range");
    }
    const bool xb = (x_ >> q) & 1U;
    const bool zb = (z_ >> q) & 1U;
    return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
}

void PauliString::set_letter(std::uint32_t q, char letter) {
    if (q >= n_) {
        throw std::out_of_range("qubit index out of range");
    }
    const std::uint64_t bit = std::uint64_t{1} << q;
    x_ &= ~bit;
    z_ &= ~bit;
    switch (letter) {
        case 'I':
            break;
        case 'X':
            x_ |= bit;
            break;
        case 'Y':
            x_ |= bit;
            z_ |= bit;
            break;
        case 'Z':
            z_ |= bit;
            break;
        default:
            throw std::invalid_argument("bad Pauli letter");
    }
}

PauliString PauliString::with_phase(unsigned phase) const noexcept {
    PauliString s = *this;
    s.k_ = phase & 3U;
    return s;
}

bool PauliString::commutes_with(const PauliString &other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("Pauli size mismatch");
    }
    return (popcount(x_ & other.z_) + popcount(z_ & other.x_)) % 2 == 0;
}

std::vector<std::uint32_t> PauliString::support() const {
    std::vector<std::uint32_t> out;
    for (std::uint64_t m = x_ | z_; m != 0; m &= m - 1) {
        out.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
    }
    return out;
}

std::string PauliString::to_string() const {
    static constexpr const char *kPhase[4] = {"+", "+i", "-", "-i"};
    std::string out = kPhase[k_];
    for (std::uint32_t q = 0; q < n_; ++q) {
        out += ' ';
        out += letter(q);
    }
    return out;
}

PauliString multiply(const PauliString &a, const PauliString &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("Pauli size mismatch");
    }
    const std::uint64_t ax = a.x_mask() & ~a.z_mask();
    const std::uint64_t ay = a.x_mask() & a.z_mask();
    const std::uint64_t az = a.z_mask() & ~a.x_mask();
    const std::uint64_t bx = b.x_mask() & ~b.z_mask();
    const std::uint64_t by = b.x_mask() & b.z_mask();
    const std::uint64_t bz = b.z_mask() & ~b.x_mask();
    // XY = iZ, YZ = iX, ZX = iY and the reversed orders pick up -i.
    const unsigned plus = popcount(ax & by) + popcount(ay & bz) + popcount(az & bx);
    const unsigned minus = popcount(ay & bx) + popcount(az & by) + popcount(ax & bz);
    const unsigned k = a.phase() + b.phase() + plus + 3U * minus;
    return {a.n_qubits(), a.x_mask() ^ b.x_mask(), a.z_mask() ^ b.z_mask(), k & 3U};
}

std::complex<double> expectation_sign(const PauliString &s, std::uint64_t basis_state) {
    if ((basis_state & ~low_mask(s.n_qubits())) != 0) {
        throw std::invalid_argument("basis state wider than the Pauli string");
    }
    if (!s.is_diagonal()) {
        return 0.0;
    }
    const double sign = (popcount(basis_state & s.z_mask()) & 1U) ? -1.0 : 1.0;
    return sign * s.phase_factor();
}

Eigen::MatrixXcd to_dense(const PauliString &s) {
    if (s.n_qubits() > kMaxUnitaryQubits) {
        throw ResourceLimitError("dense Pauli matrices are limited to " + std::to_string(kMaxUnitaryQubits) +
                                 " qubits");
    }
    const std::uint64_t dim = std::uint64_t{1} << s.n_qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    const unsigned base = s.phase() + popcount(s.x_mask() & s.z_mask());
    for (std::uint64_t c = 0; c < dim; ++c) {
        const unsigned k = base + 2U * (popcount(c & s.z_mask()) & 1U);
        m(static_cast<Eigen::Index>(c ^ s.x_mask()), static_cast<Eigen::Index>(c)) = kIPow[k & 3U];
    }
    return m;
}

namespace {

void check_p_args(std::size_t mu, std::size_t L, std::uint32_t n_qubits) {
    if (L == 0 || n_qubits % L != 0) {
        throw std::invalid_argument("L must divide the qubit count");
    }
    if (mu == 0 || mu > n_qubits / L) {
        throw std::invalid_argument("mode index out of range");
    }
}

}  // namespace

PauliString p_operator(std::size_t mu, std::size_t L, std::uint32_t n_qubits) {
    check_width(n_qubits);
    check_p_args(mu, L, n_qubits);
    PauliString s(n_qubits);
    for (std::size_t j = 1; j < mu; ++j) {
        s.set_letter(static_cast<std::uint32_t>(L * j - 1), 'Z');
    }
    for (std::size_t q = L * (mu - 1); q < L * mu; ++q) {
        s.set_letter(static_cast<std::uint32_t>(q), 'X');
    }
    return s;
}

PauliString givens_generator(std::size_t mu, std::size_t nu, std::size_t L, std::uint32_t n_qubits) {
    check_width(n_qubits);
    check_p_args(mu, L, n_qubits);
    check_p_args(nu, L, n_qubits);
    if (mu >= nu) {
        throw std::invalid_argument("givens_generator requires mu < nu");
    }
    PauliString s(n_qubits);
    for (std::size_t q = L * (mu - 1); q < L * mu; ++q) {
        s.set_letter(static_cast<std::uint32_t>(q), 'X');
    }
    s.set_letter(static_cast<std::uint32_t>(L * mu - 1), 'Y');
    for (std::size_t j = mu + 1; j < nu; ++j) {
        s.set_letter(static_cast<std::uint32_t>(L * j - 1), 'Z');
    }
    for (std::size_t q = L * (nu - 1); q < L * nu; ++q) {
        s.set_letter(static_cast<std::uint32_t>(q), 'X');
    }
    return s;
}

// ---------------------------------------------------------------------------
// PauliSum

PauliSum::PauliSum(std::uint32_t n_qubits) : n_(n_qubits) { check_width(n_qubits); }

PauliSum &PauliSum::add(double coeff, const PauliString &s) {
    if (s.n_qubits() != n_) {
        throw std::invalid_argument("Pauli size mismatch in sum");
    }
    if (!s.is_hermitian()) {
        throw std::invalid_argument("real Pauli sums only hold Hermitian strings");
    }
    if (!std::isfinite(coeff)) {
        throw std::invalid_argument("non-finite Pauli coefficient");
    }
    const double signed_coeff = s.phase() == 2 ? -coeff : coeff;
    terms_[{s.x_mask(), s.z_mask()}] += signed_coeff;
    return *this;
}

PauliSum &PauliSum::operator+=(const PauliSum &other) {
    if (other.n_ != n_) {
        throw std::invalid_argument("Pauli size mismatch in sum");
    }
    for (const auto &[key, c] : other.terms_) {
        terms_[key] += c;
    }
    return *this;
}

PauliSum PauliSum::operator*(double scale) const {
    PauliSum out = *this;
    for (auto &[key, c] : out.terms_) {
        c *= scale;
    }
    return out;
}

double PauliSum::identity_coeff() const {
    const auto it = terms_.find({0, 0});
    return it == terms_.end() ? 0.0 : it->second;
}

PauliSum PauliSum::without_identity() const {
    PauliSum out = *this;
    out.terms_.erase({0, 0});
    return out;
}

void PauliSum::prune(double tol) {
    std::erase_if(terms_, [tol](const auto &kv) { return std::abs(kv.second) < tol; });
}

std::vector<PauliSum::Term> PauliSum::terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto &[key, c] : terms_) {
        out.push_back({c, PauliString(n_, key.first, key.second)});
    }
    return out;
}

double PauliSum::coeff(const PauliString &s) const {
    const auto it = terms_.find({s.x_mask(), s.z_mask()});
    if (it == terms_.end()) {
        return 0.0;
    }
    return s.phase() == 2 ? -it->second : it->second;
}

double PauliSum::one_norm() const {
    double total = 0.0;
    for (const auto &[key, c] : terms_) {
        total += std::abs(c);
    }
    return total;
}

Eigen::MatrixXcd PauliSum::to_dense() const {
    if (n_ > kMaxUnitaryQubits) {
        throw ResourceLimitError("dense Pauli sums are limited to " + std::to_string(kMaxUnitaryQubits) + " qubits");
    }
    const Eigen::Index dim = Eigen::Index{1} << n_;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &[key, c] : terms_) {
        m += c * cliffload::to_dense(PauliString(n_, key.first, key.second));
    }
    return m;
}

// ---------------------------------------------------------------------------
// ComplexPauliSum

ComplexPauliSum::ComplexPauliSum(std::uint32_t n_qubits) : n_(n_qubits) { check_width(n_qubits); }

ComplexPauliSum::ComplexPauliSum(std::complex<double> coeff, const PauliString &s) : n_(s.n_qubits()) {
    add(coeff, s);
}

ComplexPauliSum &ComplexPauliSum::add(std::complex<double> coeff, const PauliString &s) {
    if (s.n_qubits() != n_) {
        throw std::invalid_argument("Pauli size mismatch in sum");
    }
    terms_[{s.x_mask(), s.z_mask()}] += coeff * s.phase_factor();
    return *this;
}

ComplexPauliSum &ComplexPauliSum::operator+=(const ComplexPauliSum &other) {
    if (other.n_ != n_) {
        throw std::invalid_argument("Pauli size mismatch in sum");
    }
    for (const auto &[key, c] : other.terms_) {
        terms_[key] += c;
    }
    return *this;
}

ComplexPauliSum ComplexPauliSum::operator*(std::complex<double> scale) const {
    ComplexPauliSum out = *this;
    for (auto &[key, c] : out.terms_) {
        c *= scale;
    }
    return out;
}

ComplexPauliSum ComplexPauliSum::adjoint() const {
    ComplexPauliSum out = *this;
    for (auto &[key, c] : out.terms_) {
        c = std::conj(c);
    }
    return out;
}

void ComplexPauliSum::prune(double tol) {
    std::erase_if(terms_, [tol](const auto &kv) { return std::abs(kv.second) <= tol; });
}

std::vector<ComplexPauliSum::Term> ComplexPauliSum::terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto &[key, c] : terms_) {
        out.push_back({c, PauliString(n_, key.first, key.second)});
    }
    return out;
}

double ComplexPauliSum::one_norm() const {
    double total = 0.0;
    for (const auto &[key, c] : terms_) {
        total += std::abs(c);
    }
    return total;
}

double ComplexPauliSum::distance(const ComplexPauliSum &other) const {
    ComplexPauliSum diff = *this;
    diff += other * -1.0;
    return diff.one_norm();
}

PauliSum ComplexPauliSum::to_hermitian(double tol, double drop_tol) const {
    PauliSum out(n_);
    for (const auto &[key, c] : terms_) {
        if (std::abs(c.imag()) > tol) {
            throw std::invalid_argument("Pauli sum is not Hermitian (imaginary coefficient " +
                                        std::to_string(c.imag()) + ")");
        }
        if (std::abs(c.real()) >= drop_tol && c.real() != 0.0) {
            out.add(c.real(), PauliString(n_, key.first, key.second));
        }
    }
    return out;
}

Eigen::MatrixXcd ComplexPauliSum::to_dense() const {
    if (n_ > kMaxUnitaryQubits) {
        throw ResourceLimitError("dense Pauli sums are limited to " + std::to_string(kMaxUnitaryQubits) + " qubits");
    }
    const Eigen::Index dim = Eigen::Index{1} << n_;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &[key, c] : terms_) {
        m += c * cliffload::to_dense(PauliString(n_, key.first, key.second));
    }
    return m;
}

ComplexPauliSum multiply(const ComplexPauliSum &a, const ComplexPauliSum &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("Pauli size mismatch in product");
    }
    ComplexPauliSum out(a.n_qubits());
    for (const auto &ta : a.terms()) {
        for (const auto &tb : b.terms()) {
            out.add(ta.coeff * tb.coeff, multiply(ta.string, tb.string));
        }
    }
    return out;
}

ComplexPauliSum commutator(const ComplexPauliSum &a, const ComplexPauliSum &b) {
    ComplexPauliSum out = multiply(a, b);
    out += multiply(b, a) * -1.0;
    out.prune(0.0);
    return out;
}

ComplexPauliSum anticommutator_residual(std::size_t mu, std::size_t nu, std::size_t L, std::uint32_t n_qubits) {
    const PauliString a = p_operator(mu, L, n_qubits);
    const PauliString b = p_operator(nu, L, n_qubits);
    ComplexPauliSum out(n_qubits);
    out.add(1.0, multiply(a, b));
    out.add(1.0, multiply(b, a));
    if (mu == nu) {
        out.add(-2.0, PauliString(n_qubits));
    }
    out.prune(0.0);
    return out;
}

double anticommutator_norm(std::size_t mu, std::size_t nu, std::size_t L, std::uint32_t n_qubits) {
    return anticommutator_residual(mu, nu, L, n_qubits).one_norm();
}

}  // namespace cliffload
