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

#include "cliffload/chem.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <regex>
#include <sstream>
#include <unordered_map>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>
#include <nlohmann/json.hpp>

#include "cliffload/error.hpp"

namespace cliffload {

namespace {

using cd = std::complex<double>;

constexpr cd kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

FciDump FciDump::zeros(std::size_t n_orb, std::size_t n_elec) {
    FciDump f;
    f.n_orb = n_orb;
    f.n_elec = n_elec;
    f.h1.assign(n_orb * n_orb, 0.0);
    f.g2.assign(n_orb * n_orb * n_orb * n_orb, 0.0);
    return f;
}

void FciDump::set_h(std::size_t i, std::size_t j, double v) {
    h1[i * n_orb + j] = v;
    h1[j * n_orb + i] = v;
}

void FciDump::set_g(std::size_t i, std::size_t j, std::size_t k, std::size_t l, double v) {
    const std::size_t n = n_orb;
    auto at = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) -> double & {
        return g2[((a * n + b) * n + c) * n + d];
    };
    at(i, j, k, l) = v;
    at(j, i, k, l) = v;
    at(i, j, l, k) = v;
    at(j, i, l, k) = v;
    at(k, l, i, j) = v;
    at(l, k, i, j) = v;
    at(k, l, j, i) = v;
    at(l, k, j, i) = v;
}

double FciDump::symmetry_error() const {
    double err = 0.0;
    const std::size_t n = n_orb;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            err = std::max(err, std::abs(h(i, j) - h(j, i)));
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t l = 0; l < n; ++l) {
                    const double v = g(i, j, k, l);
                    err = std::max({err, std::abs(v - g(j, i, k, l)), std::abs(v - g(i, j, l, k)),
                                    std::abs(v - g(k, l, i, j))});
                }
            }
        }
    }
    return err;
}

FcidumpParseError::FcidumpParseError(Kind kind, std::size_t line, const std::string &what)
    : std::runtime_error("FCIDUMP line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

namespace {

using Kind = FcidumpParseError::Kind;

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
    return out;
}

bool parse_double(std::string token, double &out) {
    // Fortran writers may emit exponents as D.
    std::replace(token.begin(), token.end(), 'D', 'E');
    std::replace(token.begin(), token.end(), 'd', 'e');
    const char *first = token.data();
    if (!token.empty() && token[0] == '+') {
        ++first;
    }
    const char *last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && std::isfinite(out);
}

bool parse_int(const std::string &token, long &out) {
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

long namelist_int(const std::string &header, const std::string &key, std::size_t line, bool required) {
    const std::regex re("(^|[^A-Z0-9_])" + key + "\\s*=\\s*([-+]?[0-9]+)");
    std::smatch m;
    if (!std::regex_search(header, m, re)) {
        if (required) {
            throw FcidumpParseError(Kind::MalformedNamelist, line, "namelist is missing " + key);
        }
        return 0;
    }
    return std::stol(m[2].str());
}

}  // namespace

FciDump parse_fcidump(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;

    // Namelist.
    std::string header;
    bool started = false;
    bool closed = false;
    std::size_t header_line = 1;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string u = upper(raw);
        if (!started) {
            if (u.find_first_not_of(" \t\r") == std::string::npos) {
                continue;
            }
            const auto pos = u.find("&FCI");
            if (pos == std::string::npos) {
                throw FcidumpParseError(Kind::MalformedNamelist, line_no, "expected an &FCI namelist");
            }
            started = true;
            header_line = line_no;
        }
        const auto end_amp = u.find("&END");
        const auto end_slash = u.find('/');
        const auto end = std::min(end_amp, end_slash);
        header += ' ' + u.substr(0, end == std::string::npos ? u.size() : end);
        if (end != std::string::npos) {
            closed = true;
            break;
        }
    }
    if (!started) {
        throw FcidumpParseError(Kind::MalformedNamelist, std::max<std::size_t>(line_no, 1), "empty input");
    }
    if (!closed) {
        throw FcidumpParseError(Kind::MalformedNamelist, line_no, "namelist is not closed by &END or /");
    }
    const long norb = namelist_int(header, "NORB", header_line, true);
    const long nelec = namelist_int(header, "NELEC", header_line, true);
    if (norb <= 0 || nelec < 0 || nelec > 2 * norb) {
        throw FcidumpParseError(Kind::MalformedNamelist, header_line, "NORB/NELEC out of range");
    }
    FciDump f = FciDump::zeros(static_cast<std::size_t>(norb), static_cast<std::size_t>(nelec));
    f.ms2 = static_cast<int>(namelist_int(header, "MS2", header_line, false));

    // Integral lines.
    while (std::getline(in, raw)) {
        ++line_no;
        std::istringstream fields(raw);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) {
            tok.push_back(t);
        }
        if (tok.empty()) {
            continue;
        }
        if (tok.size() != 5) {
            throw FcidumpParseError(Kind::NonNumeric, line_no, "expected 'value i j k l', got " +
                                                                   std::to_string(tok.size()) + " fields");
        }
        double value = 0.0;
        if (!parse_double(tok[0], value)) {
            throw FcidumpParseError(Kind::NonNumeric, line_no, "bad integral value '" + tok[0] + "'");
        }
        long idx[4];
        for (int t = 0; t < 4; ++t) {
            if (!parse_int(tok[t + 1], idx[t])) {
                throw FcidumpParseError(Kind::NonNumeric, line_no, "bad index '" + tok[t + 1] + "'");
            }
            if (idx[t] < 0 || idx[t] > norb) {
                throw FcidumpParseError(Kind::IndexOutOfRange, line_no,
                                        "index " + std::to_string(idx[t]) + " outside 0.." + std::to_string(norb));
            }
        }
        const auto [i, j, k, l] = idx;
        if (i == 0 && j == 0 && k == 0 && l == 0) {
            f.core_energy = value;
        } else if (i > 0 && j == 0 && k == 0 && l == 0) {
            continue;  // orbital energy
        } else if (i > 0 && j > 0 && k == 0 && l == 0) {
            f.set_h(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), value);
        } else if (i > 0 && j > 0 && k > 0 && l > 0) {
            f.set_g(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1),
                    static_cast<std::size_t>(l - 1), value);
        } else {
            throw FcidumpParseError(Kind::IndexOutOfRange, line_no, "unrecognized index pattern");
        }
    }
    return f;
}

FciDump read_fcidump(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open FCIDUMP file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_fcidump(buf.str());
}

std::string serialize_fcidump(const FciDump &f) {
    std::string out = "&FCI NORB=" + std::to_string(f.n_orb) + ",NELEC=" + std::to_string(f.n_elec) +
                      ",MS2=" + std::to_string(f.ms2) + ",\n&END\n";
    char buf[128];
    auto line = [&](double v, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        std::snprintf(buf, sizeof(buf), "%.17g %zu %zu %zu %zu\n", v, i, j, k, l);
        out += buf;
    };
    const std::size_t n = f.n_orb;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t l = 0; l <= k; ++l) {
                    if (i * n + j < k * n + l) {
                        continue;
                    }
                    const double v = f.g(i, j, k, l);
                    if (v != 0.0) {
                        line(v, i + 1, j + 1, k + 1, l + 1);
                    }
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            if (f.h(i, j) != 0.0) {
                line(f.h(i, j), i + 1, j + 1, 0, 0);
            }
        }
    }
    line(f.core_energy, 0, 0, 0, 0);
    return out;
}

double MolecularHamiltonian::energy(const StateVector &psi) const { return constant + expectation(pauli, psi); }

PauliSum MolecularHamiltonian::full() const {
    PauliSum out = pauli;
    if (constant != 0.0) {
        out.add(constant, PauliString(n_qubits));
    }
    return out;
}

ComplexPauliSum jw_creation(std::uint32_t q, std::uint32_t n_qubits) {
    if (q >= n_qubits) {
        throw std::invalid_argument("qubit index out of range");
    }
    const std::uint64_t zs = (std::uint64_t{1} << q) - 1;
    const std::uint64_t bit = std::uint64_t{1} << q;
    ComplexPauliSum out(n_qubits);
    out.add(0.5, PauliString(n_qubits, bit, zs));
    out.add(cd(0.0, -0.5), PauliString(n_qubits, bit, zs | bit));
    return out;
}

ComplexPauliSum jw_annihilation(std::uint32_t q, std::uint32_t n_qubits) { return jw_creation(q, n_qubits).adjoint(); }

MolecularHamiltonian jw_hamiltonian(const FciDump &f) {
    if (f.n_orb == 0 || f.n_orb > kMaxHamiltonianOrbitals) {
        throw ResourceLimitError("Hamiltonians are limited to " + std::to_string(kMaxHamiltonianOrbitals) +
                                 " spatial orbitals");
    }
    const auto n_qubits = static_cast<std::uint32_t>(2 * f.n_orb);
    std::vector<ComplexPauliSum> cre;
    std::vector<ComplexPauliSum> ann;
    for (std::uint32_t q = 0; q < n_qubits; ++q) {
        cre.push_back(jw_creation(q, n_qubits));
        ann.push_back(jw_annihilation(q, n_qubits));
    }
    ComplexPauliSum h(n_qubits);
    h.add(f.core_energy, PauliString(n_qubits));
    auto so = [](std::size_t p, std::size_t spin) { return static_cast<std::uint32_t>(2 * p + spin); };

    const std::size_t n = f.n_orb;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            const double hpq = f.h(p, q);
            if (hpq == 0.0) {
                continue;
            }
            for (std::size_t s = 0; s < 2; ++s) {
                h += multiply(cre[so(p, s)], ann[so(q, s)]) * hpq;
            }
        }
    }
    // 1/2 sum (pr|qs) a^dag_{p s} a^dag_{q t} a_{s t} a_{r s}
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t s = 0; s < n; ++s) {
                    const double v = f.g(p, r, q, s);
                    if (v == 0.0) {
                        continue;
                    }
                    for (std::size_t sa = 0; sa < 2; ++sa) {
                        for (std::size_t sb = 0; sb < 2; ++sb) {
                            const auto P = so(p, sa);
                            const auto Q = so(q, sb);
                            const auto R = so(r, sa);
                            const auto S = so(s, sb);
                            if (P == Q || R == S) {
                                continue;
                            }
                            h += multiply(multiply(cre[P], cre[Q]), multiply(ann[S], ann[R])) * (0.5 * v);
                        }
                    }
                }
            }
        }
    }
    PauliSum real = h.to_hermitian(1e-10, 1e-12);
    MolecularHamiltonian out{n_qubits, real.without_identity(), real.identity_coeff()};
    return out;
}

double hf_energy(const MolecularHamiltonian &h, std::size_t d) {
    if (d > h.n_qubits) {
        throw std::invalid_argument("more electrons than spin orbitals");
    }
    const std::uint64_t ref = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
    double e = h.constant;
    for (const auto &t : h.pauli.terms()) {
        e += t.coeff * expectation_sign(t.string, ref).real();
    }
    return e;
}

namespace {

std::vector<std::uint64_t> sector_basis(std::uint32_t n, std::size_t d) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
        if (static_cast<std::size_t>(std::popcount(i)) == d) {
            out.push_back(i);
        }
    }
    return out;
}

// Lowest eigenvalue of a Hermitian sparse matrix by Lanczos with full
// reorthogonalization.
double lanczos_lowest(const Eigen::SparseMatrix<cd> &a) {
    const Eigen::Index dim = a.rows();
    const Eigen::Index max_iter = std::min<Eigen::Index>(dim, 400);
    std::vector<Eigen::VectorXcd> basis;
    std::vector<double> alpha;
    std::vector<double> beta;
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(dim);
    // Fixed deterministic start with broad overlap.
    for (Eigen::Index i = 0; i < dim; ++i) {
        v(i) = 1.0 + 0.01 * static_cast<double>(i % 7);
    }
    v.normalize();
    double previous = std::numeric_limits<double>::infinity();
    double lowest = previous;
    for (Eigen::Index it = 0; it < max_iter; ++it) {
        basis.push_back(v);
        Eigen::VectorXcd w = a * v;
        alpha.push_back(v.dot(w).real());
        for (const auto &b : basis) {
            w -= b.dot(w) * b;
        }
        for (const auto &b : basis) {
            w -= b.dot(w) * b;
        }
        const double bnorm = w.norm();
        const auto m = static_cast<Eigen::Index>(alpha.size());
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
        for (Eigen::Index i = 0; i < m; ++i) {
            t(i, i) = alpha[static_cast<std::size_t>(i)];
            if (i + 1 < m) {
                t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
            }
        }
        lowest = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(t, Eigen::EigenvaluesOnly).eigenvalues()(0);
        if (bnorm < 1e-12 || std::abs(lowest - previous) < 1e-13) {
            break;
        }
        previous = lowest;
        beta.push_back(bnorm);
        v = w / bnorm;
    }
    return lowest;
}

}  // namespace

double fci_ground_energy(const MolecularHamiltonian &h, std::size_t d, std::size_t dense_limit) {
    if (h.n_qubits > kMaxFciQubits) {
        throw ResourceLimitError("FCI is limited to " + std::to_string(kMaxFciQubits) + " qubits");
    }
    if (d > h.n_qubits) {
        throw std::invalid_argument("more electrons than spin orbitals");
    }
    const auto basis = sector_basis(h.n_qubits, d);
    std::unordered_map<std::uint64_t, Eigen::Index> position;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        position[basis[i]] = static_cast<Eigen::Index>(i);
    }
    const auto dim = static_cast<Eigen::Index>(basis.size());
    std::vector<Eigen::Triplet<cd>> entries;
    const auto terms = h.pauli.terms();
    for (Eigen::Index c = 0; c < dim; ++c) {
        const std::uint64_t col = basis[static_cast<std::size_t>(c)];
        entries.emplace_back(c, c, h.constant);
        for (const auto &t : terms) {
            const std::uint64_t x = t.string.x_mask();
            const std::uint64_t z = t.string.z_mask();
            const auto it = position.find(col ^ x);
            if (it == position.end()) {
                continue;
            }
            const unsigned k = static_cast<unsigned>(std::popcount(x & z)) + 2U * (std::popcount(col & z) & 1U);
            entries.emplace_back(it->second, c, t.coeff * kIPow[k & 3U]);
        }
    }
    Eigen::SparseMatrix<cd> m(dim, dim);
    m.setFromTriplets(entries.begin(), entries.end());
    if (static_cast<std::size_t>(dim) <= dense_limit) {
        const Eigen::MatrixXcd dense(m);
        return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(dense, Eigen::EigenvaluesOnly).eigenvalues()(0);
    }
    return lanczos_lowest(m);
}

double dense_penalty_ground_energy(const MolecularHamiltonian &h, std::size_t d, double penalty) {
    Eigen::MatrixXcd m = h.full().to_dense();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const double diff = static_cast<double>(std::popcount(static_cast<std::uint64_t>(i))) - static_cast<double>(d);
        m(i, i) += penalty * diff * diff;
    }
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

void to_json(nlohmann::json &j, const MolecularHamiltonian &h) {
    auto terms = nlohmann::json::array();
    for (const auto &t : h.pauli.terms()) {
        std::string letters;
        for (std::uint32_t q = 0; q < h.n_qubits; ++q) {
            letters += t.string.letter(q);
        }
        terms.push_back({letters, t.coeff});
    }
    j = nlohmann::json{{"n_qubits", h.n_qubits}, {"constant", h.constant}, {"terms", std::move(terms)}};
}

}  // namespace cliffload
