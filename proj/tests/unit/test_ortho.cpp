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
#include <set>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cliffload/oracle.hpp"
#include "cliffload/ortho.hpp"

namespace cliffload {
namespace {

using Pairs = std::vector<std::vector<IndexPair>>;

TEST(TreeIndexSets, Examples) {
    EXPECT_EQ(tree_index_sets(4), (Pairs{{{1, 2}, {3, 4}}, {{1, 3}}}));
    EXPECT_TRUE(tree_index_sets(1).empty());
    EXPECT_EQ(tree_index_sets(6), (Pairs{{{1, 2}, {3, 4}, {5, 6}}, {{1, 3}}, {{1, 5}}}));
    EXPECT_EQ(tree_index_sets(3), (Pairs{{{1, 2}}, {{1, 3}}}));
}

TEST(TreeIndexSets, LayerCountAndDisjointness) {
    for (std::size_t n = 1; n <= 70; ++n) {
        const auto sets = tree_index_sets(n);
        EXPECT_EQ(sets.size(), ceil_log2(n)) << n;
        std::size_t total = 0;
        for (const auto &layer : sets) {
            std::set<std::size_t> seen;
            for (const auto &[mu, nu] : layer) {
                EXPECT_LT(mu, nu);
                EXPECT_LE(nu, n);
                EXPECT_TRUE(seen.insert(mu).second);
                EXPECT_TRUE(seen.insert(nu).second);
            }
            total += layer.size();
        }
        // A tree over n leaves has n - 1 internal merges.
        EXPECT_EQ(total, n - 1) << n;
    }
}

TEST(CeilLog2, Values) {
    EXPECT_EQ(ceil_log2(1), 0u);
    EXPECT_EQ(ceil_log2(2), 1u);
    EXPECT_EQ(ceil_log2(3), 2u);
    EXPECT_EQ(ceil_log2(8), 3u);
    EXPECT_EQ(ceil_log2(9), 4u);
}

TEST(ZeroingAngle, Cases) {
    EXPECT_DOUBLE_EQ(zeroing_angle(1.0, 1.0), std::numbers::pi / 8);
    EXPECT_DOUBLE_EQ(zeroing_angle(0.0, 0.3), std::numbers::pi / 4);
    EXPECT_DOUBLE_EQ(zeroing_angle(0.0, -0.3), std::numbers::pi / 4);
    EXPECT_DOUBLE_EQ(zeroing_angle(0.0, 0.0), 0.0);
    EXPECT_DOUBLE_EQ(zeroing_angle(-1.0, 1.0), -std::numbers::pi / 8);
}

TEST(ComputeAngles, BasisVectorGivesZeroAngles) {
    const std::vector<double> x{1, 0, 0, 0};
    const auto s = compute_angles(x);
    ASSERT_EQ(s.layers.size(), 2u);
    for (const auto &layer : s.layers) {
        for (const auto &g : layer) {
            EXPECT_EQ(g.theta, 0.0);
        }
    }
    EXPECT_FALSE(s.root_fixup);
}

TEST(ComputeAngles, Examples) {
    const double r = 1 / std::sqrt(2.0);
    const std::vector<double> x2{r, r};
    const auto s2 = compute_angles(x2);
    ASSERT_EQ(s2.layers.size(), 1u);
    EXPECT_NEAR(s2.layers[0][0].theta, std::numbers::pi / 8, 1e-15);

    const std::vector<double> x4{0.5, 0.5, 0.5, 0.5};
    const auto s4 = compute_angles(x4);
    ASSERT_EQ(s4.layers.size(), 2u);
    EXPECT_NEAR(s4.layers[0][0].theta, std::numbers::pi / 8, 1e-15);
    EXPECT_NEAR(s4.layers[0][1].theta, std::numbers::pi / 8, 1e-15);
    EXPECT_NEAR(s4.layers[1][0].theta, std::numbers::pi / 8, 1e-15);
    const auto end = replay_schedule(s4, x4);
    EXPECT_NEAR(end[0], 1.0, 1e-15);
    for (std::size_t i = 1; i < 4; ++i) {
        EXPECT_NEAR(end[i], 0.0, 1e-15);
    }
}

TEST(ComputeAngles, RootFixupRestoresPositiveE1) {
    const std::vector<double> x{-0.6, 0.8};
    const auto s = compute_angles(x);
    EXPECT_TRUE(s.root_fixup);
    const auto end = replay_schedule(s, x);
    EXPECT_NEAR(end[0], 1.0, 1e-14);
    EXPECT_NEAR(end[1], 0.0, 1e-14);
}

TEST(ComputeAngles, RejectsNonUnit) {
    const std::vector<double> x{1.0, 1e-5};
    EXPECT_THROW(compute_angles(x), std::invalid_argument);
    EXPECT_THROW(compute_angles(std::vector<double>{}), std::invalid_argument);
    const std::vector<double> single{-1.0};
    EXPECT_TRUE(compute_angles(single).layers.empty());
}

TEST(ComputeAngles, ReplayPropertyRandom) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> size(2, 16);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = size(rng);
        const auto x = random_unit_vector(n, 1000 + trial);
        const auto s = compute_angles(x);
        const auto end = replay_schedule(s, x);
        worst = std::max(worst, std::abs(end[0] - 1.0));
        for (std::size_t i = 1; i < n; ++i) {
            worst = std::max(worst, std::abs(end[i]));
        }
        for (std::size_t l = 0; l < s.layers.size(); ++l) {
            for (std::size_t k = 0; k < s.layers[l].size(); ++k) {
                const double t = s.layers[l][k].theta;
                const bool root = l + 1 == s.layers.size() && k == 0;
                const double hi = root ? 3 * std::numbers::pi / 4 : std::numbers::pi / 4;
                EXPECT_GT(t, -std::numbers::pi / 4);
                EXPECT_LE(t, hi + 1e-15);
            }
        }
    }
    EXPECT_LT(worst, 1e-10);
}

TEST(ComputeAngles, HandlesZeroEntries) {
    const std::vector<double> x{0, 0, 0, -1, 0, 0};
    const auto end = replay_schedule(compute_angles(x), x);
    EXPECT_NEAR(end[0], 1.0, 1e-15);
}

TEST(OrthonormalMatrix, ValidatesInvariants) {
    EXPECT_THROW(OrthonormalMatrix(2, 3, std::vector<double>(6, 0.0)), std::invalid_argument);
    EXPECT_THROW(OrthonormalMatrix(2, 1, {1.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(OrthonormalMatrix(2, 1, {1.0}), std::invalid_argument);
    EXPECT_THROW(OrthonormalMatrix(2, 1, {NAN, 0.0}), std::invalid_argument);
    EXPECT_NO_THROW(OrthonormalMatrix(2, 1, {0.6, 0.8}));
}

TEST(OrthonormalMatrix, JsonRoundTrip) {
    const auto m = random_orthonormal(5, 3, 11);
    const nlohmann::json j = m;
    EXPECT_EQ(j.at("rows"), 5);
    EXPECT_EQ(j.at("cols"), 3);
    EXPECT_EQ(orthonormal_from_json(j), m);
    EXPECT_THROW(orthonormal_from_json(nlohmann::json{{"rows", 2}, {"cols", 1}, {"data", {1, 1}}}),
                 std::invalid_argument);
}

TEST(RandomOrthonormal, Properties) {
    EXPECT_LT(random_orthonormal(4, 2, 0).gram_error(), 1e-12);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto m = random_orthonormal(3, 3, seed);
        const std::vector<std::size_t> all{1, 2, 3};
        EXPECT_NEAR(std::abs(minor_determinant(m, all)), 1.0, 1e-10);
    }
    EXPECT_EQ(random_orthonormal(6, 3, 42), random_orthonormal(6, 3, 42));
    EXPECT_NE(random_orthonormal(6, 3, 42), random_orthonormal(6, 3, 43));
    EXPECT_THROW(random_orthonormal(2, 3, 0), std::invalid_argument);
}

TEST(MinorDeterminant, Examples) {
    const auto id = OrthonormalMatrix::identity_columns(5, 3);
    const std::vector<std::size_t> first{1, 2, 3};
    const std::vector<std::size_t> other{1, 2, 5};
    EXPECT_EQ(minor_determinant(id, first), 1.0);
    EXPECT_EQ(minor_determinant(id, other), 0.0);

    const auto m = random_orthonormal(4, 2, 3);
    const std::vector<std::size_t> b{2, 3};
    EXPECT_NEAR(minor_determinant(m, b), m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0), 1e-15);
}

TEST(MinorDeterminant, RejectsBadIndexSets) {
    const auto m = random_orthonormal(4, 2, 3);
    EXPECT_THROW(minor_determinant(m, std::vector<std::size_t>{2, 2}), std::invalid_argument);
    EXPECT_THROW(minor_determinant(m, std::vector<std::size_t>{3, 2}), std::invalid_argument);
    EXPECT_THROW(minor_determinant(m, std::vector<std::size_t>{0, 2}), std::invalid_argument);
    EXPECT_THROW(minor_determinant(m, std::vector<std::size_t>{1, 5}), std::invalid_argument);
    EXPECT_THROW(minor_determinant(m, std::vector<std::size_t>{1}), std::invalid_argument);
}

TEST(MinorDeterminant, LeibnizMatchesElimination) {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> nd;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<double> a(n * n);
            for (double &v : a) {
                v = nd(rng);
            }
            EXPECT_NEAR(leibniz_determinant(a, n), elimination_determinant(a, n), 1e-10);
        }
    }
}

TEST(MinorDeterminant, SquaredMinorsSumToOne) {
    for (std::size_t n = 1; n <= 10; ++n) {
        for (std::size_t d = 1; d <= n; ++d) {
            const auto m = random_orthonormal(n, d, 100 * n + d);
            double total = 0.0;
            for (const auto &rows : combinations(n, d)) {
                std::vector<std::size_t> b;
                for (auto r : rows) {
                    b.push_back(r + 1);
                }
                const double v = minor_determinant(m, b);
                total += v * v;
            }
            EXPECT_NEAR(total, 1.0, 1e-10) << n << "x" << d;
        }
    }
}

TEST(GivensSchedule, JsonShape) {
    const auto s = compute_angles(random_unit_vector(8, 1));
    const nlohmann::json j = s;
    EXPECT_EQ(j.at("n"), 8);
    EXPECT_EQ(j.at("layers").size(), 3u);
    EXPECT_EQ(j.at("layers")[0].size(), 4u);
    EXPECT_EQ(s.rotation_count(), 7u);
}

}  // namespace
}  // namespace cliffload
