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

#include "cliffload/sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "cliffload/error.hpp"
#include "cliffload/parallel.hpp"

namespace cliffload {

namespace {

using cd = std::complex<double>;
using Index = std::int64_t;

constexpr cd kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int parity(std::uint64_t v) { return std::popcount(v) & 1; }

}  // namespace

StateVector::StateVector(std::uint32_t n_qubits) : n_(n_qubits) {
    if (n_qubits == 0) {
        throw std::invalid_argument("state needs at least one qubit");
    }
    if (n_qubits > kMaxStateQubits) {
        throw ResourceLimitError("statevectors are limited to " + std::to_string(kMaxStateQubits) + " qubits");
    }
    amps_.assign(std::size_t{1} << n_qubits, 0.0);
    amps_[0] = 1.0;
}

StateVector StateVector::basis(std::uint32_t n_qubits, std::uint64_t index) {
    StateVector s(n_qubits);
    if (index >= s.dim()) {
        throw std::invalid_argument("basis index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps) {
    if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
        throw std::invalid_argument("amplitude count must be a power of two >= 2");
    }
    StateVector s(static_cast<std::uint32_t>(std::countr_zero(amps.size())));
    s.amps_ = std::move(amps);
    if (std::abs(s.norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("amplitudes are not normalized");
    }
    return s;
}

double StateVector::norm() const {
    double total = 0.0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

void StateVector::rotate_phase(double phi) {
    const cd f = std::polar(1.0, phi);
    for (auto &a : amps_) {
        a *= f;
    }
}

void StateVector::apply(const Gate &g) {
    if (g.qubits[0] >= n_ || (g.is_two_qubit() && g.qubits[1] >= n_)) {
        throw std::invalid_argument("gate does not fit the state");
    }
    const Index dim = static_cast<Index>(amps_.size());
    cd *a = amps_.data();
    const Index m = Index{1} << g.qubits[0];
    const int threads = thread_count();

    // Visit each index pair (i, i | m) once with bit q clear in i.
    auto for_pairs = [&](auto &&body) {
        const Index half = dim / 2;
#pragma omp parallel for num_threads(threads) schedule(static) if (half >= (Index{1} << 14))
        for (Index t = 0; t < half; ++t) {
            const Index i = ((t & ~(m - 1)) << 1) | (t & (m - 1));
            body(i, i | m);
        }
    };

    switch (g.kind) {
        case GateKind::PauliX:
            for_pairs([a](Index i, Index j) { std::swap(a[i], a[j]); });
            break;
        case GateKind::Hadamard: {
            const double r = std::numbers::sqrt2 / 2;
            for_pairs([a, r](Index i, Index j) {
                const cd u = a[i];
                const cd v = a[j];
                a[i] = r * (u + v);
                a[j] = r * (u - v);
            });
            break;
        }
        case GateKind::RotX: {
            const double c = std::cos(g.angle / 2);
            const cd s(0.0, -std::sin(g.angle / 2));
            for_pairs([a, c, s](Index i, Index j) {
                const cd u = a[i];
                const cd v = a[j];
                a[i] = c * u + s * v;
                a[j] = s * u + c * v;
            });
            break;
        }
        case GateKind::RotZ: {
            const cd lo = std::polar(1.0, -g.angle / 2);
            const cd hi = std::polar(1.0, g.angle / 2);
            for_pairs([a, lo, hi](Index i, Index j) {
                a[i] *= lo;
                a[j] *= hi;
            });
            break;
        }
        case GateKind::CNot: {
            const Index cm = m;
            const Index tm = Index{1} << g.qubits[1];
            const Index quarter = dim / 4;
            const Index lo_m = std::min(cm, tm);
            const Index hi_m = std::max(cm, tm);
            // Enumerate indices with both bits clear, then swap |c=1,t=0> with |c=1,t=1>.
#pragma omp parallel for num_threads(threads) schedule(static) if (quarter >= (Index{1} << 14))
            for (Index t = 0; t < quarter; ++t) {
                Index i = ((t & ~(lo_m - 1)) << 1) | (t & (lo_m - 1));
                i = ((i & ~(hi_m - 1)) << 1) | (i & (hi_m - 1));
                std::swap(a[i | cm], a[i | cm | tm]);
            }
            break;
        }
    }
}

void StateVector::apply(const Circuit &c) {
    if (c.n_qubits() != n_) {
        throw std::invalid_argument("circuit width " + std::to_string(c.n_qubits()) + " does not match state width " +
                                    std::to_string(n_));
    }
    for (const auto &g : c.gates()) {
        apply(g);
    }
}

StateVector run(const Circuit &c) { return run(c, StateVector(c.n_qubits())); }

StateVector run(const Circuit &c, StateVector initial) {
    initial.apply(c);
    return initial;
}

namespace {

// sum_i conj(psi[i ^ x]) s_z(i) psi[i] over all i, for one Hermitian string
// with coefficient folded into `coeff` (already multiplied by i^{|x & z|}).
double term_dense(const cd *psi, Index dim, std::uint64_t x, std::uint64_t z, cd coeff) {
    if (x == 0) {
        double acc = 0.0;
        for (Index i = 0; i < dim; ++i) {
            const double p = std::norm(psi[i]);
            acc += parity(static_cast<std::uint64_t>(i) & z) ? -p : p;
        }
        return coeff.real() * acc;
    }
    // Pair i with i ^ x and visit only the member whose top x bit is clear;
    // the partner contributes the complex conjugate.
    const auto top = static_cast<Index>(std::uint64_t{1} << (63 - std::countl_zero(x)));
    cd acc = 0.0;
    for (Index i = 0; i < dim; ++i) {
        if (i & top) {
            continue;
        }
        const cd v = std::conj(psi[i ^ static_cast<Index>(x)]) * psi[i];
        acc += parity(static_cast<std::uint64_t>(i) & z) ? -v : v;
    }
    return 2.0 * (coeff * acc).real();
}

double term_sparse(const cd *psi, std::span<const Index> support, std::uint64_t x, std::uint64_t z, cd coeff) {
    cd acc = 0.0;
    for (const Index i : support) {
        const cd v = std::conj(psi[i ^ static_cast<Index>(x)]) * psi[i];
        acc += parity(static_cast<std::uint64_t>(i) & z) ? -v : v;
    }
    return (coeff * acc).real();
}

}  // namespace

double expectation(const PauliSum &h, const StateVector &psi, ExpectationMethod method) {
    if (h.n_qubits() != psi.n_qubits()) {
        throw std::invalid_argument("Hamiltonian width does not match the state");
    }
    const auto terms = h.terms();
    const auto amps = psi.amplitudes();
    const cd *a = amps.data();
    const auto dim = static_cast<Index>(amps.size());

    std::vector<Index> support;
    if (method != ExpectationMethod::Dense) {
        // Amplitudes below the cut are skipped. By Cauchy-Schwarz each term then
        // moves by at most |c| * |tail| * 2, so Auto only goes sparse when that
        // bound stays under 1e-12.
        constexpr double kCut = 1e-15;
        double tail = 0.0;
        for (Index i = 0; i < dim; ++i) {
            if (std::abs(a[i]) > kCut) {
                support.push_back(i);
            } else {
                tail += std::norm(a[i]);
            }
        }
        const bool small = support.size() * 8 <= amps.size();
        const bool safe = 2.0 * h.one_norm() * std::sqrt(tail) < 1e-12;
        if (method == ExpectationMethod::Auto && !(small && safe)) {
            method = ExpectationMethod::Dense;
            support.clear();
        }
    }

    std::vector<double> partial(terms.size(), 0.0);
    const int threads = thread_count();
    const auto n_terms = static_cast<Index>(terms.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic, 4)
    for (Index t = 0; t < n_terms; ++t) {
        const auto &term = terms[static_cast<std::size_t>(t)];
        const std::uint64_t x = term.string.x_mask();
        const std::uint64_t z = term.string.z_mask();
        const cd coeff = term.coeff * kIPow[std::popcount(x & z) & 3];
        partial[static_cast<std::size_t>(t)] =
            method == ExpectationMethod::Dense ? term_dense(a, dim, x, z, coeff) : term_sparse(a, support, x, z, coeff);
    }
    double total = 0.0;
    for (const double p : partial) {
        total += p;
    }
    return total;
}

double expectation(const ComplexPauliSum &h, const StateVector &psi) {
    return expectation(h.to_hermitian(1e-12), psi);
}

NumberMoments particle_number_moments(const StateVector &psi) {
    const auto amps = psi.amplitudes();
    double m1 = 0.0;
    double m2 = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        const double k = std::popcount(i);
        m1 += p * k;
        m2 += p * k * k;
    }
    return {m1, std::max(0.0, m2 - m1 * m1)};
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("fidelity of states with different widths");
    }
    cd overlap = 0.0;
    const auto aa = a.amplitudes();
    const auto bb = b.amplitudes();
    for (std::size_t i = 0; i < aa.size(); ++i) {
        overlap += std::conj(aa[i]) * bb[i];
    }
    return std::min(1.0, std::norm(overlap));
}

std::string fock_string(std::uint64_t index, std::uint32_t n_qubits) {
    std::string out(n_qubits, '0');
    for (std::uint32_t q = 0; q < n_qubits; ++q) {
        if ((index >> q) & 1U) {
            out[q] = '1';
        }
    }
    return out;
}

std::uint64_t fock_index(const std::string &bits) {
    if (bits.empty() || bits.size() > 64) {
        throw std::invalid_argument("bad Fock string length");
    }
    std::uint64_t index = 0;
    for (std::size_t q = 0; q < bits.size(); ++q) {
        if (bits[q] == '1') {
            index |= std::uint64_t{1} << q;
        } else if (bits[q] != '0') {
            throw std::invalid_argument("Fock string must contain only 0 and 1");
        }
    }
    return index;
}

nlohmann::json amplitude_dump(const StateVector &psi, double threshold) {
    auto out = nlohmann::json::array();
    const auto amps = psi.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (std::abs(amps[i]) > threshold) {
            out.push_back({fock_string(i, psi.n_qubits()), amps[i].real(), amps[i].imag()});
        }
    }
    return out;
}

}  // namespace cliffload
