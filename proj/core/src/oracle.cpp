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

#include "cliffload/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "cliffload/error.hpp"

namespace cliffload {

namespace {

using cd = std::complex<double>;

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Eigen::MatrixXcd single(char which) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    switch (which) {
        case 'I':
            m << 1, 0, 0, 1;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case '+':  // (X - iY)/2 = |1><0|
            m(1, 0) = 1;
            break;
        case '-':  // (X + iY)/2 = |0><1|
            m(0, 1) = 1;
            break;
        default:
            throw std::logic_error("bad factor");
    }
    return m;
}

// Kronecker product with factors[q] on mode q+1; the highest mode is the most
// significant factor so that basis bit q is mode q+1.
Eigen::MatrixXcd chain(const std::vector<char> &factors) {
    Eigen::MatrixXcd out = single(factors.back());
    for (std::size_t q = factors.size() - 1; q-- > 0;) {
        out = kron(out, single(factors[q]));
    }
    return out;
}

void check_modes(std::uint32_t n_modes) {
    if (n_modes == 0) {
        throw std::invalid_argument("need at least one mode");
    }
    if (n_modes > kMaxDenseModes) {
        throw ResourceLimitError("dense Fock operators are limited to " + std::to_string(kMaxDenseModes) + " modes");
    }
}

FockOperatorMatrix ladder_operator(std::size_t mu, std::uint32_t n_modes, bool create) {
    check_modes(n_modes);
    if (mu == 0 || mu > n_modes) {
        throw std::invalid_argument("mode index out of range");
    }
    std::vector<char> f(n_modes, 'I');
    for (std::size_t q = 0; q + 1 < mu; ++q) {
        f[q] = 'Z';
    }
    f[mu - 1] = create ? '+' : '-';
    return {n_modes, create ? FockOperatorMatrix::Role::Creation : FockOperatorMatrix::Role::Annihilation, mu, 1,
            chain(f)};
}

void check_oracle_width(std::size_t n) {
    if (n > kMaxOracleQubits) {
        throw ResourceLimitError("oracle states are limited to " + std::to_string(kMaxOracleQubits) + " qubits");
    }
}

}  // namespace

FockOperatorMatrix FockOperatorMatrix::creation(std::size_t mu, std::uint32_t n_modes) {
    return ladder_operator(mu, n_modes, true);
}

FockOperatorMatrix FockOperatorMatrix::annihilation(std::size_t mu, std::uint32_t n_modes) {
    return ladder_operator(mu, n_modes, false);
}

FockOperatorMatrix FockOperatorMatrix::p(std::size_t mu, std::size_t L, std::uint32_t n_modes) {
    check_modes(n_modes);
    if (L == 0 || n_modes % L != 0 || mu == 0 || mu > n_modes / L) {
        throw std::invalid_argument("bad (mu, L) for the mode count");
    }
    if (L == 1) {
        FockOperatorMatrix out = creation(mu, n_modes);
        out.matrix += annihilation(mu, n_modes).matrix;
        out.role = Role::P;
        return out;
    }
    std::vector<char> f(n_modes, 'I');
    for (std::size_t j = 1; j < mu; ++j) {
        f[L * j - 1] = 'Z';
    }
    for (std::size_t q = L * (mu - 1); q < L * mu; ++q) {
        f[q] = 'X';
    }
    return {n_modes, Role::P, mu, L, chain(f)};
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t d) {
    std::vector<std::vector<std::size_t>> out;
    if (d > n) {
        return out;
    }
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) {
        idx[i] = i;
    }
    while (true) {
        out.push_back(idx);
        std::size_t i = d;
        while (i > 0 && idx[i - 1] == n - d + i - 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < d; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

namespace {

// Amplitude det(M_B) placed on the state whose occupied blocks are B.
StateVector block_oracle(const OrthonormalMatrix &m, std::size_t L) {
    const std::size_t n_qubits = L * m.rows();
    check_oracle_width(n_qubits);
    std::vector<cd> amps(std::size_t{1} << n_qubits, 0.0);
    const std::uint64_t block = (std::uint64_t{1} << L) - 1;
    for (const auto &rows : combinations(m.rows(), m.cols())) {
        std::vector<std::size_t> one_based(rows.size());
        std::uint64_t index = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            one_based[i] = rows[i] + 1;
            index |= block << (L * rows[i]);
        }
        amps[index] = minor_determinant(m, one_based);
    }
    // Orthonormal columns make the state normalized up to rounding.
    double norm2 = 0.0;
    for (const auto &a : amps) {
        norm2 += std::norm(a);
    }
    const double s = 1.0 / std::sqrt(norm2);
    for (auto &a : amps) {
        a *= s;
    }
    return StateVector::from_amplitudes(std::move(amps));
}

}  // namespace

StateVector slater_oracle_det(const OrthonormalMatrix &a) { return block_oracle(a, 1); }

StateVector slater_oracle_creation(const OrthonormalMatrix &a, SlaterConstruction construction) {
    const auto n = static_cast<std::uint32_t>(a.rows());
    check_modes(n);
    std::vector<Eigen::MatrixXcd> ops;
    for (std::size_t mu = 1; mu <= n; ++mu) {
        ops.push_back(construction == SlaterConstruction::Creation ? FockOperatorMatrix::creation(mu, n).matrix
                                                                   : FockOperatorMatrix::p(mu, 1, n).matrix);
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    psi(0) = 1.0;
    for (std::size_t l = 0; l < a.cols(); ++l) {
        Eigen::VectorXcd next = Eigen::VectorXcd::Zero(dim);
        for (std::size_t mu = 0; mu < n; ++mu) {
            if (a(mu, l) != 0.0) {
                next += a(mu, l) * (ops[mu] * psi);
            }
        }
        psi = std::move(next);
    }
    const double nrm = psi.norm();
    if (nrm < 1e-12) {
        throw std::invalid_argument("column operators annihilate the vacuum");
    }
    psi /= nrm;
    return StateVector::from_amplitudes(std::vector<cd>(psi.data(), psi.data() + psi.size()));
}

StateVector correlated_oracle(const OrthonormalMatrix &g, std::size_t L, std::uint32_t n_qubits) {
    if (L == 0 || n_qubits != L * g.rows()) {
        throw std::invalid_argument("qubit count must equal L times the matrix rows");
    }
    return block_oracle(g, L);
}

StateVector oracle_state(const OrthonormalMatrix &m, std::size_t L) {
    return L == 1 ? slater_oracle_det(m) : correlated_oracle(m, L, static_cast<std::uint32_t>(L * m.rows()));
}

VerifyReport compare_with_oracle(const Circuit &circuit, const OrthonormalMatrix &m, std::size_t L) {
    check_oracle_width(L * m.rows());
    const StateVector oracle = oracle_state(m, L);
    StateVector sim = run(circuit);

    VerifyReport r;
    r.n_qubits = circuit.n_qubits();
    r.L = L;
    r.two_qubit_depth = two_qubit_depth(circuit);
    r.gate_count = circuit.size();
    r.fidelity = fidelity(oracle, sim);

    const auto oa = oracle.amplitudes();
    std::size_t peak = 0;
    for (std::size_t i = 1; i < oa.size(); ++i) {
        if (std::abs(oa[i]) > std::abs(oa[peak])) {
            peak = i;
        }
    }
    r.global_phase = std::arg(sim[peak]) - std::arg(oa[peak]);
    r.global_phase = std::remainder(r.global_phase, 2.0 * std::numbers::pi);
    sim.rotate_phase(-r.global_phase);

    const auto sa = sim.amplitudes();
    for (std::size_t i = 0; i < sa.size(); ++i) {
        r.max_amp_error = std::max(r.max_amp_error, std::abs(sa[i] - oa[i]));
        if (oa[i] == 0.0) {
            r.off_support_mass += std::norm(sa[i]);
        }
        if (std::abs(sa[i]) > 1e-12) {
            r.support.push_back(fock_string(i, sim.n_qubits()));
        }
    }
    return r;
}

VerifyReport verify_preparation(const OrthonormalMatrix &m, std::size_t L, LadderStyle style) {
    check_oracle_width(L * m.rows());
    const LoaderPlan plan = make_plan(m, L);
    VerifyReport r = compare_with_oracle(circuit_from_plan(plan, style), m, L);
    r.root_fixup = std::any_of(plan.columns.begin(), plan.columns.end(),
                               [](const GivensSchedule &s) { return s.root_fixup; });
    return r;
}

void to_json(nlohmann::json &j, const VerifyReport &r) {
    j = nlohmann::json{{"fidelity", r.fidelity},
                       {"max_amp_error", r.max_amp_error},
                       {"global_phase", r.global_phase},
                       {"off_support_mass", r.off_support_mass},
                       {"support", r.support},
                       {"n_qubits", r.n_qubits},
                       {"L", r.L},
                       {"two_qubit_depth", r.two_qubit_depth},
                       {"gate_count", r.gate_count},
                       {"root_fixup", r.root_fixup}};
}

}  // namespace cliffload
