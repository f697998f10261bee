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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cliffload/loader.hpp"
#include "cliffload/oracle.hpp"
#include "cliffload/pauli.hpp"
#include "cliffload/sim.hpp"
#include "test_util.hpp"

namespace cliffload {
namespace {

using testing::max_abs;

std::vector<std::uint32_t> iota_qubits(std::uint32_t k) {
    std::vector<std::uint32_t> q(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        q[i] = i;
    }
    return q;
}

OrthonormalMatrix columns_of(const OrthonormalMatrix &q, std::size_t first, std::size_t count) {
    std::vector<double> data(q.rows() * count);
    for (std::size_t r = 0; r < q.rows(); ++r) {
        for (std::size_t c = 0; c < count; ++c) {
            data[r * count + c] = q(r, first + c);
        }
    }
    return {q.rows(), count, std::move(data)};
}

TEST(CnotLadder, Examples) {
    const std::vector<std::uint32_t> one{3};
    EXPECT_TRUE(cnot_ladder(one, LadderStyle::Cascade).empty());
    EXPECT_TRUE(cnot_ladder(one, LadderStyle::LogTree).empty());
    const std::vector<std::uint32_t> two{1, 4};
    EXPECT_EQ(cnot_ladder(two, LadderStyle::Cascade), cnot_ladder(two, LadderStyle::LogTree));
    EXPECT_EQ(cnot_ladder(two, LadderStyle::Cascade).size(), 1u);
    const auto eight = iota_qubits(8);
    EXPECT_EQ(two_qubit_depth(cnot_ladder(eight, LadderStyle::Cascade)), 7u);
    EXPECT_EQ(two_qubit_depth(cnot_ladder(eight, LadderStyle::LogTree)), 3u);
    EXPECT_THROW(cnot_ladder(std::vector<std::uint32_t>{}, LadderStyle::Cascade), std::invalid_argument);
}

TEST(CnotLadder, ParityLandsOnLastQubit) {
    for (std::uint32_t k = 1; k <= 9; ++k) {
        const auto qubits = iota_qubits(k);
        for (const auto style : {LadderStyle::Cascade, LadderStyle::LogTree}) {
            const Circuit c = cnot_ladder(qubits, style, k);
            EXPECT_EQ(c.size(), k - 1u);
            if (style == LadderStyle::LogTree) {
                EXPECT_EQ(two_qubit_depth(c), ceil_log2(k));
            }
            for (std::uint64_t b = 0; b < (std::uint64_t{1} << k); ++b) {
                const StateVector s = run(c, StateVector::basis(k, b));
                std::uint64_t out = 0;
                for (std::uint64_t i = 0; i < s.dim(); ++i) {
                    if (std::abs(s[i]) > 0.5) {
                        out = i;
                    }
                }
                EXPECT_EQ((out >> (k - 1)) & 1U, static_cast<std::uint64_t>(std::popcount(b) & 1)) << k << " " << b;
            }
        }
    }
}

TEST(CnotLadder, LogTreeDepthForLargeK) {
    for (std::uint32_t k = 1; k <= 64; ++k) {
        EXPECT_EQ(two_qubit_depth(cnot_ladder(iota_qubits(k), LadderStyle::LogTree, k)), ceil_log2(k));
    }
}

TEST(GivensGate, ZeroAngleIsIdentity) {
    const Circuit c = givens_gate(1, 3, 0.0, 1, 4, LadderStyle::LogTree);
    EXPECT_LT(max_abs(unitary(c) - Eigen::MatrixXcd::Identity(16, 16)), 1e-12);
}

TEST(GivensGate, MatchesDenseExponential) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> angle(-2.0, 2.0);
    for (std::size_t L = 1; L <= 3; ++L) {
        for (std::uint32_t n = static_cast<std::uint32_t>(2 * L); n <= 9; n += static_cast<std::uint32_t>(L)) {
            for (std::size_t mu = 1; mu <= n / L; ++mu) {
                for (std::size_t nu = mu + 1; nu <= n / L; ++nu) {
                    const double theta = angle(rng);
                    // exp[theta p_nu p_mu] = exp[+i theta P].
                    const Eigen::MatrixXcd p = to_dense(givens_generator(mu, nu, L, n));
                    const Eigen::MatrixXcd expect = testing::pauli_rotation(p, -theta);
                    for (const auto style : {LadderStyle::Cascade, LadderStyle::LogTree}) {
                        EXPECT_LT(max_abs(unitary(givens_gate(mu, nu, theta, L, n, style)) - expect), 1e-12)
                            << L << " " << n << " " << mu << nu;
                    }
                    // Same thing written directly as the operator product.
                    if (n <= 6) {
                        const Eigen::MatrixXcd a = to_dense(p_operator(nu, L, n)) * to_dense(p_operator(mu, L, n)) *
                                                   std::complex<double>(theta);
                        EXPECT_LT(max_abs(a.exp() - expect), 1e-12);
                    }
                }
            }
        }
    }
}

TEST(GivensGate, PairwiseExample) {
    // exp[-i theta X1 Y2 X3 X4] is the rotation taken with angle -theta here.
    const double theta = 0.437;
    const Eigen::MatrixXcd p = to_dense(PauliString::from_string("X Y X X"));
    EXPECT_LT(max_abs(unitary(givens_gate(1, 2, -theta, 2, 4, LadderStyle::LogTree)) - testing::expm_pauli(p, theta)),
              1e-12);
}

TEST(GivensGate, ConjugationRotatesPOperators) {
    const Eigen::MatrixXcd p1 = to_dense(p_operator(1, 1, 2));
    const Eigen::MatrixXcd p2 = to_dense(p_operator(2, 1, 2));
    const Eigen::MatrixXcd u = unitary(givens_gate(1, 2, std::numbers::pi / 8, 1, 2, LadderStyle::LogTree));
    const double r = std::sqrt(0.5);
    EXPECT_LT(max_abs(u * p1 * u.adjoint() - (r * p1 + r * p2)), 1e-12);
    EXPECT_LT(max_abs(u * p2 * u.adjoint() - (r * p2 - r * p1)), 1e-12);
}

TEST(GivensGate, StylesAgreeAndDepthsDiffer) {
    for (std::size_t L = 1; L <= 2; ++L) {
        for (std::uint32_t n = static_cast<std::uint32_t>(2 * L); n <= 8; n += static_cast<std::uint32_t>(L)) {
            for (std::size_t mu = 1; mu <= n / L; ++mu) {
                for (std::size_t nu = mu + 1; nu <= n / L; ++nu) {
                    const Circuit a = givens_gate(mu, nu, 0.3, L, n, LadderStyle::Cascade);
                    const Circuit b = givens_gate(mu, nu, 0.3, L, n, LadderStyle::LogTree);
                    EXPECT_LT(max_abs(unitary(a) - unitary(b)), 1e-12);
                    EXPECT_LE(two_qubit_depth(b), two_qubit_depth(a));
                }
            }
        }
    }
}

TEST(GivensGate, RejectsBadIndices) {
    EXPECT_THROW(givens_gate(2, 2, 0.1, 1, 4, LadderStyle::LogTree), std::invalid_argument);
    EXPECT_THROW(givens_gate(1, 5, 0.1, 1, 4, LadderStyle::LogTree), std::invalid_argument);
    EXPECT_THROW(givens_gate(1, 2, 0.1, 3, 4, LadderStyle::LogTree), std::invalid_argument);
}

Eigen::MatrixXcd loader_operator(std::span<const double> x, std::size_t L) {
    const auto n = static_cast<std::uint32_t>(L * x.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
    for (std::size_t mu = 1; mu <= x.size(); ++mu) {
        m += x[mu - 1] * to_dense(p_operator(mu, L, n));
    }
    return m;
}

TEST(CliffordLoader, EqualsLinearCombination) {
    for (std::size_t L = 1; L <= 2; ++L) {
        for (std::size_t n = 1; n * L <= 8; ++n) {
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                const auto x = random_unit_vector(n, 31 * n + seed);
                for (const auto style : {LadderStyle::Cascade, LadderStyle::LogTree}) {
                    const Eigen::MatrixXcd u = unitary(clifford_loader(x, L, style));
                    EXPECT_LT(max_abs(u - loader_operator(x, L)), 1e-10) << L << " " << n << " " << seed;
                }
            }
        }
    }
}

TEST(CliffordLoader, EqualsLinearCombinationAtTenQubits) {
    for (std::size_t L = 1; L <= 2; ++L) {
        const auto x = random_unit_vector(10 / L, 77 + L);
        EXPECT_LT(max_abs(unitary(clifford_loader(x, L, LadderStyle::LogTree)) - loader_operator(x, L)), 1e-10);
    }
}

TEST(CliffordLoader, SignCasesAndInvolution) {
    for (const auto &x : std::vector<std::vector<double>>{{-1.0}, {1.0}, {-0.6, 0.8}, {0, -1}, {0, 0, -1, 0}}) {
        const Circuit c = clifford_loader(x, 1, LadderStyle::LogTree);
        const Eigen::MatrixXcd u = unitary(c);
        EXPECT_LT(max_abs(u - loader_operator(x, 1)), 1e-10);
        EXPECT_LT(max_abs(u * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())), 1e-10);
    }
}

TEST(CliffordLoader, BasisVectorIsP1) {
    const std::vector<double> e1{1, 0, 0, 0};
    EXPECT_LT(max_abs(unitary(clifford_loader(e1, 1, LadderStyle::LogTree)) - to_dense(p_operator(1, 1, 4))), 1e-12);
}

TEST(CliffordLoader, UnaryEncoding) {
    const std::vector<double> x{0.6, 0.8};
    const StateVector s = run(clifford_loader(x, 1, LadderStyle::LogTree));
    EXPECT_NEAR(std::abs(s[fock_index("10")] - 0.6), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(s[fock_index("01")] - 0.8), 0.0, 1e-12);
    const auto y = random_unit_vector(7, 3);
    const StateVector t = run(clifford_loader(y, 1, LadderStyle::Cascade));
    for (std::size_t mu = 0; mu < 7; ++mu) {
        EXPECT_NEAR(std::abs(t[std::uint64_t{1} << mu] - y[mu]), 0.0, 1e-12);
    }
    EXPECT_THROW(clifford_loader(std::vector<double>{0.6, 0.7}, 1, LadderStyle::Cascade), std::invalid_argument);
}

TEST(PrepareState, IdentityColumns) {
    const auto m = OrthonormalMatrix::identity_columns(5, 3);
    const StateVector s = run(prepare_state_circuit(m, 1, LadderStyle::LogTree));
    EXPECT_NEAR(std::abs(s[fock_index("11100")]), 1.0, 1e-12);
}

TEST(PrepareState, PairedSupport) {
    const OrthonormalMatrix g(2, 1, {0.28, 0.96});
    const StateVector s = run(prepare_state_circuit(g, 2, LadderStyle::LogTree));
    EXPECT_NEAR(std::abs(s[fock_index("1100")] - 0.28), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(s[fock_index("0011")] - 0.96), 0.0, 1e-12);
    double off = 0.0;
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        if (i != fock_index("1100") && i != fock_index("0011")) {
            off += std::norm(s[i]);
        }
    }
    EXPECT_LT(off, 1e-18);
}

TEST(PrepareState, AmplitudesAreMinorsUpToOneGlobalSign) {
    const auto m = random_orthonormal(6, 2, 9);
    const StateVector s = run(prepare_state_circuit(m, 1, LadderStyle::LogTree));
    const StateVector o = slater_oracle_det(m);
    std::size_t nonzero = 0;
    double sign = 0.0;
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        if (std::popcount(i) != 2) {
            EXPECT_LT(std::abs(s[i]), 1e-12);
            continue;
        }
        ++nonzero;
        EXPECT_LT(std::abs(s[i].imag()), 1e-12);
        if (sign == 0.0 && std::abs(o[i]) > 0.1) {
            sign = s[i].real() / o[i].real() > 0 ? 1.0 : -1.0;
        }
    }
    EXPECT_EQ(nonzero, 15u);
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        EXPECT_NEAR(s[i].real(), sign * o[i].real(), 1e-10);
    }
    // Products of d loaders carry (-1)^(d(d-1)/2).
    EXPECT_EQ(sign, -1.0);
}

TEST(PrepareState, GlobalSignFollowsColumnCount) {
    for (std::size_t d = 1; d <= 5; ++d) {
        const auto m = random_orthonormal(6, d, 50 + d);
        const StateVector s = run(prepare_state_circuit(m, 1, LadderStyle::LogTree));
        const StateVector o = slater_oracle_det(m);
        std::complex<double> overlap = 0.0;
        for (std::uint64_t i = 0; i < s.dim(); ++i) {
            overlap += std::conj(o[i]) * s[i];
        }
        const double expect = ((d * (d - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
        EXPECT_NEAR(overlap.real(), expect, 1e-10) << d;
        EXPECT_NEAR(overlap.imag(), 0.0, 1e-10);
    }
}

TEST(PrepareState, ParticleNumberEigenstate) {
    for (std::size_t d = 1; d <= 4; ++d) {
        const auto m = random_orthonormal(8, d, 70 + d);
        const auto moments = particle_number_moments(run(prepare_state_circuit(m, 1, LadderStyle::Cascade)));
        EXPECT_NEAR(moments.mean, static_cast<double>(d), 1e-10);
        EXPECT_LT(moments.variance, 1e-10);
    }
}

TEST(PrepareState, PlanPathIsTheSameCircuit) {
    const auto m = random_orthonormal(6, 3, 4);
    EXPECT_EQ(prepare_state_circuit(m, 1, LadderStyle::LogTree), circuit_from_plan(make_plan(m, 1), LadderStyle::LogTree));
}

TEST(PrepareState, HoleTrick) {
    const auto m = random_orthonormal(6, 4, 5);
    EXPECT_THROW(prepare_state_circuit(m, 1, LadderStyle::LogTree, true), std::invalid_argument);

    const auto q = random_orthonormal(6, 6, 12);
    const auto a = columns_of(q, 0, 4);
    const auto k = columns_of(q, 4, 2);
    EXPECT_THROW(prepare_state_circuit(a, 1, LadderStyle::LogTree, true, a), std::invalid_argument);
    const auto wrong = random_orthonormal(6, 2, 99);
    EXPECT_THROW(prepare_state_circuit(a, 1, LadderStyle::LogTree, true, wrong), std::invalid_argument);

    const Circuit hole = prepare_state_circuit(a, 1, LadderStyle::LogTree, true, k);
    const Circuit direct = prepare_state_circuit(a, 1, LadderStyle::LogTree);
    EXPECT_LT(two_qubit_depth(hole), two_qubit_depth(direct));

    // The hole state carries det(A_B) (-1)^(sum B): the minors of diag((-1)^mu) A.
    std::vector<double> flipped(a.data().begin(), a.data().end());
    for (std::size_t r = 0; r < 6; ++r) {
        if ((r + 1) % 2 == 1) {
            for (std::size_t c = 0; c < 4; ++c) {
                flipped[r * 4 + c] = -flipped[r * 4 + c];
            }
        }
    }
    const OrthonormalMatrix da(6, 4, flipped);
    EXPECT_GT(fidelity(run(hole), slater_oracle_det(da)), 1 - 1e-9);
    EXPECT_GT(fidelity(run(direct), slater_oracle_det(a)), 1 - 1e-9);
}

TEST(LoaderPlan, Json) {
    const auto m = random_orthonormal(8, 2, 6);
    const nlohmann::json j = make_plan(m, 1);
    EXPECT_EQ(j.at("loaders").size(), 2u);
    EXPECT_EQ(j.at("loaders")[0].at("layers").size(), 3u);
    EXPECT_EQ(j.at("L"), 1);
    EXPECT_EQ(j.at("hole_trick"), false);
}

TEST(Ladder, Names) {
    EXPECT_EQ(parse_ladder("cascade"), LadderStyle::Cascade);
    EXPECT_EQ(parse_ladder("logtree"), LadderStyle::LogTree);
    EXPECT_EQ(ladder_name(LadderStyle::Cascade), "cascade");
    EXPECT_THROW(parse_ladder("tree"), std::invalid_argument);
}

}  // namespace
}  // namespace cliffload
