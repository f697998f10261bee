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

#include "cliffload/ortho.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace cliffload {

OrthonormalMatrix::OrthonormalMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows_ == 0 || cols_ == 0) {
        throw std::invalid_argument("orthonormal matrix must have positive dimensions");
    }
    if (cols_ > rows_) {
        throw std::invalid_argument("orthonormal matrix needs cols <= rows, got " + std::to_string(rows_) +
                                    "x" + std::to_string(cols_));
    }
    if (data_.size() != rows_ * cols_) {
        throw std::invalid_argument("orthonormal matrix data has " + std::to_string(data_.size()) +
                                    " entries, expected " + std::to_string(rows_ * cols_));
    }
    for (double v : data_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("orthonormal matrix has a non-finite entry");
        }
    }
    if (double err = gram_error(); err > kOrthonormalTol) {
        throw std::invalid_argument("columns are not orthonormal (max Gram deviation " + std::to_string(err) +
                                    ")");
    }
}

OrthonormalMatrix OrthonormalMatrix::identity_columns(std::size_t rows, std::size_t cols) {
    std::vector<double> data(rows * cols, 0.0);
    for (std::size_t c = 0; c < std::min(rows, cols); ++c) {
        data[c * cols + c] = 1.0;
    }
    return OrthonormalMatrix(rows, cols, std::move(data));
}

std::vector<double> OrthonormalMatrix::column(std::size_t c) const {
    std::vector<double> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r] = (*this)(r, c);
    }
    return out;
}

double OrthonormalMatrix::gram_error() const {
    double worst = 0.0;
    for (std::size_t a = 0; a < cols_; ++a) {
        for (std::size_t b = a; b < cols_; ++b) {
            double dot = 0.0;
            for (std::size_t r = 0; r < rows_; ++r) {
                dot += (*this)(r, a) * (*this)(r, b);
            }
            worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
        }
    }
    return worst;
}

void to_json(nlohmann::json &j, const OrthonormalMatrix &m) {
    j = nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::vector<double>(m.data().begin(), m.data().end())}};
}

OrthonormalMatrix orthonormal_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
        throw std::invalid_argument(R"(matrix JSON must be an object with "rows", "cols" and "data")");
    }
    const auto &rows = j.at("rows");
    const auto &cols = j.at("cols");
    if (!rows.is_number_integer() || !cols.is_number_integer() || rows.get<long long>() <= 0 ||
        cols.get<long long>() <= 0) {
        throw std::invalid_argument("matrix JSON rows/cols must be positive integers");
    }
    if (!j.at("data").is_array()) {
        throw std::invalid_argument("matrix JSON data must be an array of numbers");
    }
    std::vector<double> data;
    for (const auto &v : j.at("data")) {
        if (!v.is_number()) {
            throw std::invalid_argument("matrix JSON data must be an array of numbers");
        }
        data.push_back(v.get<double>());
    }
    return OrthonormalMatrix(rows.get<std::size_t>(), cols.get<std::size_t>(), std::move(data));
}

std::size_t GivensSchedule::rotation_count() const noexcept {
    std::size_t total = 0;
    for (const auto &layer : layers) {
        total += layer.size();
    }
    return total;
}

void to_json(nlohmann::json &j, const GivensSchedule &s) {
    auto layers = nlohmann::json::array();
    for (const auto &layer : s.layers) {
        auto out = nlohmann::json::array();
        for (const auto &g : layer) {
            out.push_back({{"mu", g.mu}, {"nu", g.nu}, {"theta", g.theta}});
        }
        layers.push_back(std::move(out));
    }
    j = nlohmann::json{{"n", s.n}, {"layers", std::move(layers)}, {"root_fixup", s.root_fixup}};
}

std::size_t ceil_log2(std::size_t n) noexcept {
    if (n <= 1) {
        return 0;
    }
    return static_cast<std::size_t>(std::bit_width(n - 1));
}

std::vector<std::vector<IndexPair>> tree_index_sets(std::size_t n) {
    std::vector<std::vector<IndexPair>> layers;
    const std::size_t depth = ceil_log2(n);
    for (std::size_t s = 1; s <= depth; ++s) {
        const std::size_t stride = std::size_t{1} << s;
        const std::size_t half = stride >> 1;
        std::vector<IndexPair> layer;
        for (std::size_t k = 1;; ++k) {
            const std::size_t mu = stride * (k - 1) + 1;
            const std::size_t nu = half * (2 * k - 1) + 1;
            if (nu > n) {
                break;
            }
            layer.emplace_back(mu, nu);
        }
        layers.push_back(std::move(layer));
    }
    return layers;
}

double zeroing_angle(double x_mu, double x_nu) noexcept {
    if (x_mu == 0.0) {
        return x_nu == 0.0 ? 0.0 : std::numbers::pi / 4;
    }
    return 0.5 * std::atan(x_nu / x_mu);
}

void apply_replay_step(std::span<double> x, const GivensPair &g) noexcept {
    const double c = std::cos(2 * g.theta);
    const double s = std::sin(2 * g.theta);
    double &a = x[g.mu - 1];
    double &b = x[g.nu - 1];
    const double na = c * a + s * b;
    const double nb = -s * a + c * b;
    a = na;
    b = nb;
}

std::vector<double> replay_schedule(const GivensSchedule &schedule, std::span<const double> x) {
    if (x.size() != schedule.n) {
        throw std::invalid_argument("replay vector length does not match schedule size");
    }
    std::vector<double> v(x.begin(), x.end());
    for (const auto &layer : schedule.layers) {
        for (const auto &g : layer) {
            apply_replay_step(v, g);
        }
    }
    return v;
}

GivensSchedule compute_angles(std::span<const double> x) {
    if (x.empty()) {
        throw std::invalid_argument("compute_angles needs a non-empty vector");
    }
    double norm2 = 0.0;
    for (double v : x) {
        norm2 += v * v;
    }
    if (!std::isfinite(norm2) || std::abs(std::sqrt(norm2) - 1.0) > 1e-12) {
        throw std::invalid_argument("compute_angles needs a unit vector, got norm " + std::to_string(std::sqrt(norm2)));
    }

    GivensSchedule schedule;
    schedule.n = x.size();
    std::vector<double> work(x.begin(), x.end());
    for (const auto &pairs : tree_index_sets(schedule.n)) {
        std::vector<GivensPair> layer;
        layer.reserve(pairs.size());
        for (const auto &[mu, nu] : pairs) {
            GivensPair g{mu, nu, zeroing_angle(work[mu - 1], work[nu - 1])};
            apply_replay_step(work, g);
            work[nu - 1] = 0.0;
            layer.push_back(g);
        }
        schedule.layers.push_back(std::move(layer));
    }
    // Half-angle steps keep the sign of x_mu, so the root can land on -e1.
    if (work[0] < 0 && !schedule.layers.empty()) {
        schedule.layers.back().front().theta += std::numbers::pi / 2;
        schedule.root_fixup = true;
    }
    return schedule;
}

double leibniz_determinant(std::span<const double> a, std::size_t n) {
    if (a.size() != n * n) {
        throw std::invalid_argument("determinant input is not square");
    }
    if (n == 0) {
        return 1.0;
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double total = 0.0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                inversions += perm[i] > perm[j] ? 1 : 0;
            }
        }
        double term = (inversions % 2 == 0) ? 1.0 : -1.0;
        // Column c takes row perm[c], matching sum_sigma sgn(sigma) prod_c A[sigma_c, c].
        for (std::size_t c = 0; c < n; ++c) {
            term *= a[perm[c] * n + c];
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

double elimination_determinant(std::span<const double> a, std::size_t n) {
    if (a.size() != n * n) {
        throw std::invalid_argument("determinant input is not square");
    }
    std::vector<double> m(a.begin(), a.end());
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(m[r * n + col]) > std::abs(m[pivot * n + col])) {
                pivot = r;
            }
        }
        if (m[pivot * n + col] == 0.0) {
            return 0.0;
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(m[pivot * n + c], m[col * n + c]);
            }
            det = -det;
        }
        const double p = m[col * n + col];
        det *= p;
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = m[r * n + col] / p;
            if (f == 0.0) {
                continue;
            }
            for (std::size_t c = col; c < n; ++c) {
                m[r * n + c] -= f * m[col * n + c];
            }
        }
    }
    return det;
}

double minor_determinant(const OrthonormalMatrix &m, std::span<const std::size_t> rows) {
    const std::size_t d = m.cols();
    if (rows.size() != d) {
        throw std::invalid_argument("minor row set must have exactly cols() = " + std::to_string(d) + " entries");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 1 || rows[i] > m.rows()) {
            throw std::invalid_argument("minor row index " + std::to_string(rows[i]) + " outside 1.." +
                                        std::to_string(m.rows()));
        }
        if (i > 0 && rows[i] <= rows[i - 1]) {
            throw std::invalid_argument("minor row indices must be strictly increasing");
        }
    }
    std::vector<double> sub(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t c = 0; c < d; ++c) {
            sub[i * d + c] = m(rows[i] - 1, c);
        }
    }
    return d <= 4 ? leibniz_determinant(sub, d) : elimination_determinant(sub, d);
}

OrthonormalMatrix random_orthonormal(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    if (cols > rows) {
        throw std::invalid_argument("random_orthonormal needs cols <= rows");
    }
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("random_orthonormal needs positive dimensions");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    // Column-major scratch space.
    std::vector<std::vector<double>> q(cols, std::vector<double>(rows));
    for (std::size_t c = 0; c < cols; ++c) {
        for (;;) {
            for (auto &v : q[c]) {
                v = normal(rng);
            }
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t p = 0; p < c; ++p) {
                    double dot = 0.0;
                    for (std::size_t r = 0; r < rows; ++r) {
                        dot += q[p][r] * q[c][r];
                    }
                    for (std::size_t r = 0; r < rows; ++r) {
                        q[c][r] -= dot * q[p][r];
                    }
                }
            }
            double norm = 0.0;
            for (double v : q[c]) {
                norm += v * v;
            }
            norm = std::sqrt(norm);
            if (norm > 1e-8) {
                for (auto &v : q[c]) {
                    v /= norm;
                }
                break;
            }
        }
    }
    std::vector<double> data(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            data[r * cols + c] = q[c][r];
        }
    }
    return OrthonormalMatrix(rows, cols, std::move(data));
}

std::vector<double> random_unit_vector(std::size_t n, std::uint64_t seed) {
    return random_orthonormal(n, 1, seed).column(0);
}

}  // namespace cliffload
