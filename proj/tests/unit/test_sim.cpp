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

#include "cliffload/error.hpp"
#include "cliffload/loader.hpp"
#include "cliffload/parallel.hpp"
#include "cliffload/sim.hpp"
#include "test_util.hpp"

namespace cliffload {
namespace {

using cd = std::complex<double>;

StateVector random_state(std::uint32_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> nd;
    std::vector<cd> a(std::size_t{1} << n);
    double norm2 = 0.0;
    for (auto &v : a) {
        v = {nd(rng), nd(rng)};
        norm2 += std::norm(v);
    }
    for (auto &v : a) {
        v /= std::sqrt(norm2);
    }
    return StateVector::from_amplitudes(std::move(a));
}

PauliSum random_sum(std::uint32_t n, std::size_t terms, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << n) - 1);
    std::normal_distribution<double> nd;
    PauliSum h(n);
    for (std::size_t i = 0; i < terms; ++i) {
        h.add(nd(rng), PauliString(n, bits(rng), bits(rng)));
    }
    return h;
}

TEST(Run, Examples) {
    const StateVector s = run(Circuit(2));
    EXPECT_EQ(s[0], cd(1.0));
    Circuit x(2);
    x.append(Gate::x(0));
    EXPECT_EQ(run(x)[fock_index("10")], cd(1.0));
    const std::vector<double> v{0.6, 0.8};
    const StateVector l = run(clifford_loader(v, 1, LadderStyle::LogTree));
    EXPECT_NEAR(l[1].real(), 0.6, 1e-12);
    EXPECT_NEAR(l[2].real(), 0.8, 1e-12);
    EXPECT_THROW(run(Circuit(3), StateVector(2)), std::invalid_argument);
    EXPECT_THROW(StateVector(25), ResourceLimitError);
}

TEST(Run, MatchesDenseUnitary) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        const Circuit c = testing::random_circuit(5, 40, rng);
        const StateVector init = random_state(5, rng);
        const Eigen::VectorXcd expect = unitary(c) * testing::to_eigen(init);
        EXPECT_LT((testing::to_eigen(run(c, init)) - expect).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Run, NormPreservedAndInverseReturns) {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<std::uint32_t> width(1, 8);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::uint32_t n = width(rng);
        const Circuit c = testing::random_circuit(n, 20, rng);
        StateVector s = random_state(n, rng);
        const StateVector start = s;
        for (const auto &g : c.gates()) {
            s.apply(g);
            ASSERT_NEAR(s.norm(), 1.0, 1e-10);
        }
        s.apply(c.inverse());
        EXPECT_LT((testing::to_eigen(s) - testing::to_eigen(start)).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Run, LargeRegisterUsesParallelKernel) {
    std::mt19937_64 rng(3);
    const Circuit c = testing::random_circuit(16, 60, rng);
    StateVector s = run(c);
    set_thread_count(1);
    StateVector t = run(c);
    set_thread_count(0);
    EXPECT_EQ(testing::to_eigen(s), testing::to_eigen(t));
    EXPECT_NEAR(s.norm(), 1.0, 1e-10);
}

TEST(Expectation, Examples) {
    PauliSum z(3);
    z.add(1.0, PauliString::from_string("Z I I"));
    EXPECT_NEAR(expectation(z, StateVector(3)), 1.0, 1e-15);
    Circuit h(3);
    h.append(Gate::h(0));
    PauliSum x(3);
    x.add(1.0, PauliString::from_string("X I I"));
    EXPECT_NEAR(expectation(x, run(h)), 1.0, 1e-15);

    PauliSum number(4);
    for (std::uint32_t q = 0; q < 4; ++q) {
        PauliString zq(4);
        zq.set_letter(q, 'Z');
        number.add(0.5, PauliString(4));
        number.add(-0.5, zq);
    }
    const auto m = random_orthonormal(4, 2, 1);
    EXPECT_NEAR(expectation(number, run(prepare_state_circuit(m, 1, LadderStyle::LogTree))), 2.0, 1e-10);
}

TEST(Expectation, MatchesDenseForAllMethods) {
    std::mt19937_64 rng(4);
    for (std::uint32_t n = 1; n <= 8; ++n) {
        const PauliSum h = random_sum(n, 30, rng);
        const StateVector s = random_state(n, rng);
        const Eigen::VectorXcd v = testing::to_eigen(s);
        const double dense = (v.adjoint() * h.to_dense() * v)(0, 0).real();
        EXPECT_NEAR(expectation(h, s, ExpectationMethod::Dense), dense, 1e-10);
        EXPECT_NEAR(expectation(h, s, ExpectationMethod::Sparse), dense, 1e-10);
        EXPECT_NEAR(expectation(h, s, ExpectationMethod::Auto), dense, 1e-10);
    }
}

TEST(Expectation, SparseSupportState) {
    std::mt19937_64 rng(5);
    const PauliSum h = random_sum(10, 200, rng);
    const auto m = random_orthonormal(10, 2, 3);
    const StateVector s = run(prepare_state_circuit(m, 1, LadderStyle::LogTree));
    const double dense = expectation(h, s, ExpectationMethod::Dense);
    EXPECT_NEAR(expectation(h, s, ExpectationMethod::Sparse), dense, 1e-12);
    EXPECT_NEAR(expectation(h, s, ExpectationMethod::Auto), dense, 1e-12);
}

TEST(Expectation, RejectsNonHermitianComplexSum) {
    ComplexPauliSum h(1);
    h.add(cd(0.0, 1.0), PauliString::from_string("Z"));
    EXPECT_THROW(expectation(h, StateVector(1)), std::invalid_argument);
    ComplexPauliSum g(1);
    g.add(2.0, PauliString::from_string("Z"));
    EXPECT_NEAR(expectation(g, StateVector(1)), 2.0, 1e-15);
    EXPECT_THROW(expectation(PauliSum(2), StateVector(1)), std::invalid_argument);
}

TEST(ParticleNumber, Moments) {
    auto m = particle_number_moments(StateVector::basis(4, fock_index("1100")));
    EXPECT_NEAR(m.mean, 2.0, 1e-15);
    EXPECT_NEAR(m.variance, 0.0, 1e-15);
    const double r = std::sqrt(0.5);
    m = particle_number_moments(StateVector::from_amplitudes({0, r, r, 0}));
    EXPECT_NEAR(m.mean, 1.0, 1e-15);
    EXPECT_NEAR(m.variance, 0.0, 1e-15);
    m = particle_number_moments(StateVector::from_amplitudes({r, 0, 0, r}));
    EXPECT_NEAR(m.mean, 1.0, 1e-15);
    EXPECT_NEAR(m.variance, 1.0, 1e-15);
}

TEST(Fidelity, Examples) {
    std::mt19937_64 rng(6);
    const StateVector a = random_state(3, rng);
    EXPECT_NEAR(fidelity(a, a), 1.0, 1e-14);
    EXPECT_NEAR(fidelity(StateVector::basis(2, 1), StateVector::basis(2, 2)), 0.0, 1e-15);
    StateVector b = a;
    b.rotate_phase(1.234);
    EXPECT_NEAR(fidelity(a, b), 1.0, 1e-14);
    EXPECT_THROW(fidelity(a, StateVector(2)), std::invalid_argument);
}

TEST(FockString, Ordering) {
    EXPECT_EQ(fock_string(1, 4), "1000");
    EXPECT_EQ(fock_string(12, 4), "0011");
    EXPECT_EQ(fock_index("0011"), 12u);
    EXPECT_THROW(fock_index("01x"), std::invalid_argument);
}

TEST(AmplitudeDump, ListsNonzero) {
    const double r = std::sqrt(0.5);
    const auto j = amplitude_dump(StateVector::from_amplitudes({0, r, 0, cd(0, -r)}));
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0][0], "10");
    EXPECT_NEAR(j[1][2].get<double>(), -r, 1e-15);
    EXPECT_THROW(StateVector::from_amplitudes({1, 1}), std::invalid_argument);
}

}  // namespace
}  // namespace cliffload
