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

#ifndef CLIFFLOAD_ORTHO_HPP
#define CLIFFLOAD_ORTHO_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace cliffload {

/// Real N x d matrix with orthonormal columns, stored row-major.
///
/// Construction validates transpose(M) * M == I to within `kOrthonormalTol`
/// entrywise, so every instance in circulation satisfies the invariant.
class OrthonormalMatrix {
  public:
    static constexpr double kOrthonormalTol = 1e-12;

    OrthonormalMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    /// The first `cols` columns of the rows x rows identity.
    static OrthonormalMatrix identity_columns(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    /// Zero-based element access.
    double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::vector<double> column(std::size_t c) const;
    std::span<const double> data() const noexcept { return data_; }

    /// Largest entrywise deviation of transpose(M) * M from the identity.
    double gram_error() const;

    bool operator==(const OrthonormalMatrix &) const = default;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

void to_json(nlohmann::json &j, const OrthonormalMatrix &m);
OrthonormalMatrix orthonormal_from_json(const nlohmann::json &j);

/// One Givens rotation of a binary-tree schedule. Indices are 1-based logical
/// mode indices with mu < nu.
struct GivensPair {
    std::size_t mu;
    std::size_t nu;
    double theta;

    bool operator==(const GivensPair &) const = default;
};

using IndexPair = std::pair<std::size_t, std::size_t>;

/// Binary-tree rotation schedule for a unit vector of length `n`.
/// `layers[s - 1]` holds sublayer s; pairs inside one sublayer are disjoint.
struct GivensSchedule {
    std::size_t n = 0;
    std::vector<std::vector<GivensPair>> layers;
    /// Set when the root rotation carries the extra pi/2 of the sign fix-up.
    bool root_fixup = false;

    std::size_t rotation_count() const noexcept;
    bool operator==(const GivensSchedule &) const = default;
};

void to_json(nlohmann::json &j, const GivensSchedule &s);

/// ceil(log2(n)) for n >= 1.
std::size_t ceil_log2(std::size_t n) noexcept;

/// Index pairs of the binary tree: sublayer s holds
/// {(2^s (k-1) + 1, 2^(s-1) (2k-1) + 1) : k >= 1} clipped to nu <= n,
/// for s = 1 .. ceil(log2 n).
std::vector<std::vector<IndexPair>> tree_index_sets(std::size_t n);

/// Rotation angle that zeroes x_nu against x_mu: half the arctangent of the
/// ratio, pi/4 when x_mu vanishes and 0 when both vanish.
double zeroing_angle(double x_mu, double x_nu) noexcept;

/// Applies one classical replay step in place:
/// (x_mu, x_nu) <- (cos 2t x_mu + sin 2t x_nu, -sin 2t x_mu + cos 2t x_nu).
void apply_replay_step(std::span<double> x, const GivensPair &g) noexcept;

/// Replays the schedule on a copy of `x`, sublayer 1 first.
std::vector<double> replay_schedule(const GivensSchedule &schedule, std::span<const double> x);

/// Resolves the angles that reduce the unit vector `x` to +e1 under
/// `replay_schedule`. When the plain half-arctangent replay ends at -e1, the
/// root rotation receives an extra pi/2.
///
/// Throws std::invalid_argument when |x| deviates from 1 by more than 1e-12
/// or when x is empty. For n == 1 the schedule is empty and x may be -1.
GivensSchedule compute_angles(std::span<const double> x);

/// det of the square minor of `m` restricted to the 1-based, strictly
/// increasing row set `rows` (|rows| == m.cols()). Leibniz expansion for
/// up to four columns, partial-pivot elimination above.
double minor_determinant(const OrthonormalMatrix &m, std::span<const std::size_t> rows);

/// Determinant routines behind minor_determinant, exposed so both can be
/// cross-checked. `a` is a row-major n x n matrix.
double leibniz_determinant(std::span<const double> a, std::size_t n);
double elimination_determinant(std::span<const double> a, std::size_t n);

/// Deterministic seeded orthonormal matrix (modified Gram-Schmidt with one
/// reorthogonalization pass over Gaussian samples).
OrthonormalMatrix random_orthonormal(std::size_t rows, std::size_t cols, std::uint64_t seed);

/// Seeded unit vector of length n.
std::vector<double> random_unit_vector(std::size_t n, std::uint64_t seed);

}  // namespace cliffload

#endif  // CLIFFLOAD_ORTHO_HPP
