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

#include "cliffload/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "cliffload/error.hpp"

namespace cliffload {

using cd = std::complex<double>;

std::string_view gate_name(GateKind kind) noexcept {
    switch (kind) {
        case GateKind::PauliX:
            return "x";
        case GateKind::Hadamard:
            return "h";
        case GateKind::RotX:
            return "rx";
        case GateKind::RotZ:
            return "rz";
        case GateKind::CNot:
            return "cx";
    }
    return "?";
}

Gate Gate::inverse() const noexcept {
    Gate g = *this;
    if (kind == GateKind::RotX || kind == GateKind::RotZ) {
        g.angle = -angle;
    }
    return g;
}

Circuit::Circuit(std::uint32_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
}

Circuit &Circuit::append(const Gate &g) {
    if (g.qubits[0] >= n_qubits_ || (g.is_two_qubit() && g.qubits[1] >= n_qubits_)) {
        throw std::invalid_argument("gate qubit index out of range for a " + std::to_string(n_qubits_) +
                                    "-qubit circuit");
    }
    if (g.is_two_qubit() && g.qubits[0] == g.qubits[1]) {
        throw std::invalid_argument("CNot control and target must differ");
    }
    if (!std::isfinite(g.angle)) {
        throw std::invalid_argument("gate angle must be finite");
    }
    Gate stored = g;
    if (!g.is_two_qubit()) {
        stored.qubits[1] = 0;
    }
    if (g.kind != GateKind::RotX && g.kind != GateKind::RotZ) {
        stored.angle = 0.0;
    }
    gates_.push_back(stored);
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.n_qubits_ > n_qubits_) {
        throw std::invalid_argument("cannot append a wider circuit");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit out(n_qubits_);
    out.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.gates_.push_back(it->inverse());
    }
    return out;
}

std::size_t Circuit::two_qubit_gate_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [](const Gate &g) { return g.is_two_qubit(); }));
}

std::size_t two_qubit_depth(const Circuit &c) {
    std::vector<std::size_t> frontier(c.n_qubits(), 0);
    std::size_t depth = 0;
    for (const auto &g : c.gates()) {
        if (!g.is_two_qubit()) {
            continue;
        }
        const std::size_t next = std::max(frontier[g.qubits[0]], frontier[g.qubits[1]]) + 1;
        frontier[g.qubits[0]] = next;
        frontier[g.qubits[1]] = next;
        depth = std::max(depth, next);
    }
    return depth;
}

Circuit cancel_adjacent_cnots(const Circuit &c) {
    std::vector<std::optional<Gate>> work(c.gates().begin(), c.gates().end());
    bool changed = true;
    while (changed) {
        changed = false;
        // Index of the most recent surviving gate touching each qubit.
        std::vector<std::ptrdiff_t> last(c.n_qubits(), -1);
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (!work[i]) {
                continue;
            }
            const Gate &g = *work[i];
            if (g.is_two_qubit()) {
                const auto a = last[g.qubits[0]];
                const auto b = last[g.qubits[1]];
                if (a >= 0 && a == b && *work[static_cast<std::size_t>(a)] == g) {
                    work[static_cast<std::size_t>(a)].reset();
                    work[i].reset();
                    changed = true;
                    // Rewind both wires to "unknown" so nothing pairs across the gap.
                    last[g.qubits[0]] = -1;
                    last[g.qubits[1]] = -1;
                    continue;
                }
                last[g.qubits[0]] = static_cast<std::ptrdiff_t>(i);
                last[g.qubits[1]] = static_cast<std::ptrdiff_t>(i);
            } else {
                last[g.qubits[0]] = static_cast<std::ptrdiff_t>(i);
            }
        }
    }
    Circuit out(c.n_qubits());
    for (const auto &g : work) {
        if (g) {
            out.append(*g);
        }
    }
    return out;
}

Eigen::MatrixXcd gate_matrix(const Gate &g) {
    const cd i1(0.0, 1.0);
    switch (g.kind) {
        case GateKind::PauliX: {
            Eigen::MatrixXcd m(2, 2);
            m << 0, 1, 1, 0;
            return m;
        }
        case GateKind::Hadamard: {
            Eigen::MatrixXcd m(2, 2);
            const double r = std::numbers::sqrt2 / 2;
            m << r, r, r, -r;
            return m;
        }
        case GateKind::RotX: {
            Eigen::MatrixXcd m(2, 2);
            const double c = std::cos(g.angle / 2);
            const double s = std::sin(g.angle / 2);
            m << c, -i1 * s, -i1 * s, c;
            return m;
        }
        case GateKind::RotZ: {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
            m(0, 0) = std::exp(-i1 * (g.angle / 2));
            m(1, 1) = std::exp(i1 * (g.angle / 2));
            return m;
        }
        case GateKind::CNot: {
            // Basis |t c> with the control in the low bit.
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
            m(0, 0) = 1;
            m(2, 2) = 1;
            m(3, 1) = 1;
            m(1, 3) = 1;
            return m;
        }
    }
    throw std::logic_error("unknown gate kind");
}

namespace {

using RowMajorMatrix = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Left-multiplies `u` by the full-register matrix of `g`, acting on row bits.
void left_apply(RowMajorMatrix &u, const Gate &g) {
    const Eigen::Index dim = u.rows();
    if (g.kind == GateKind::CNot) {
        const Eigen::Index cm = Eigen::Index{1} << g.qubits[0];
        const Eigen::Index tm = Eigen::Index{1} << g.qubits[1];
        for (Eigen::Index r = 0; r < dim; ++r) {
            if ((r & cm) && !(r & tm)) {
                u.row(r).swap(u.row(r | tm));
            }
        }
        return;
    }
    const Eigen::MatrixXcd m = gate_matrix(g);
    const Eigen::Index mask = Eigen::Index{1} << g.qubits[0];
    for (Eigen::Index r = 0; r < dim; ++r) {
        if (r & mask) {
            continue;
        }
        const Eigen::Index s = r | mask;
        const cd m00 = m(0, 0);
        const cd m01 = m(0, 1);
        const cd m10 = m(1, 0);
        const cd m11 = m(1, 1);
        cd *a = u.row(r).data();
        cd *b = u.row(s).data();
        for (Eigen::Index k = 0; k < dim; ++k) {
            const cd x = a[k];
            const cd y = b[k];
            a[k] = m00 * x + m01 * y;
            b[k] = m10 * x + m11 * y;
        }
    }
}

}  // namespace

Eigen::MatrixXcd unitary(const Circuit &c) {
    if (c.n_qubits() > kMaxUnitaryQubits) {
        throw ResourceLimitError("unitary extraction is limited to " + std::to_string(kMaxUnitaryQubits) +
                                 " qubits");
    }
    const Eigen::Index dim = Eigen::Index{1} << c.n_qubits();
    RowMajorMatrix u = RowMajorMatrix::Identity(dim, dim);
    for (const auto &g : c.gates()) {
        left_apply(u, g);
    }
    return Eigen::MatrixXcd(u);
}

namespace {

std::string format_angle(double a) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", a + 0.0);  // folds -0 into 0
    return buf;
}

}  // namespace

std::string to_qasm(const Circuit &c) {
    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" + std::to_string(c.n_qubits()) + "];\n";
    for (const auto &g : c.gates()) {
        out += gate_name(g.kind);
        if (g.kind == GateKind::RotX || g.kind == GateKind::RotZ) {
            out += "(" + format_angle(g.angle) + ")";
        }
        out += " q[" + std::to_string(g.qubits[0]) + "]";
        if (g.is_two_qubit()) {
            out += ",q[" + std::to_string(g.qubits[1]) + "]";
        }
        out += ";\n";
    }
    return out;
}

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::uint32_t parse_qubit_ref(const std::string &tok, std::size_t line_no) {
    const auto open = tok.find("q[");
    const auto close = tok.find(']');
    if (open == std::string::npos || close == std::string::npos || close < open + 3) {
        throw std::invalid_argument("qasm line " + std::to_string(line_no) + ": bad qubit reference '" + tok + "'");
    }
    return static_cast<std::uint32_t>(std::stoul(tok.substr(open + 2, close - open - 2)));
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
    std::optional<Circuit> circuit;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (const auto cpos = line.find("//"); cpos != std::string::npos) {
            line = trim(line.substr(0, cpos));
        }
        if (line.empty()) {
            continue;
        }
        if (line.back() != ';') {
            throw std::invalid_argument("qasm line " + std::to_string(line_no) + ": missing ';'");
        }
        line.pop_back();
        if (line.rfind("OPENQASM", 0) == 0 || line.rfind("include", 0) == 0) {
            continue;
        }
        if (line.rfind("qreg", 0) == 0) {
            if (circuit) {
                throw std::invalid_argument("qasm: only one register is supported");
            }
            circuit.emplace(parse_qubit_ref(line, line_no) + 0U);
            continue;
        }
        if (!circuit) {
            throw std::invalid_argument("qasm line " + std::to_string(line_no) + ": gate before qreg");
        }
        // "<name>[(angle)] q[a][,q[b]]"
        const auto space = line.find(' ');
        if (space == std::string::npos) {
            throw std::invalid_argument("qasm line " + std::to_string(line_no) + ": malformed gate");
        }
        std::string head = line.substr(0, space);
        const std::string args = trim(line.substr(space + 1));
        double angle = 0.0;
        if (const auto paren = head.find('('); paren != std::string::npos) {
            if (head.back() != ')') {
                throw std::invalid_argument("qasm line " + std::to_string(line_no) + ": malformed angle");
            }
            angle = std::stod(head.substr(paren + 1, head.size() - paren - 2));
            head = head.substr(0, paren);
        }
        const auto comma = args.find(',');
        const std::uint32_t q0 = parse_qubit_ref(args.substr(0, comma), line_no);
        if (head == "cx") {
            if (comma == std::string::npos) {
                throw std::invalid_argument("qasm line " + std::to_string(line_no) + ": cx needs two qubits");
            }
            circuit->append(Gate::cnot(q0, parse_qubit_ref(args.substr(comma + 1), line_no)));
        } else if (head == "x") {
            circuit->append(Gate::x(q0));
        } else if (head == "h") {
            circuit->append(Gate::h(q0));
        } else if (head == "rx") {
            circuit->append(Gate::rx(q0, angle));
        } else if (head == "rz") {
            circuit->append(Gate::rz(q0, angle));
        } else {
            throw std::invalid_argument("qasm line " + std::to_string(line_no) + ": unsupported gate '" + head + "'");
        }
    }
    if (!circuit) {
        throw std::invalid_argument("qasm: no qreg declaration");
    }
    return std::move(*circuit);
}

void to_json(nlohmann::json &j, const Gate &g) {
    j = nlohmann::json{{"kind", gate_name(g.kind)}};
    if (g.is_two_qubit()) {
        j["qubits"] = {g.qubits[0], g.qubits[1]};
    } else {
        j["qubits"] = {g.qubits[0]};
    }
    if (g.kind == GateKind::RotX || g.kind == GateKind::RotZ) {
        j["angle"] = g.angle;
    }
}

void to_json(nlohmann::json &j, const Circuit &c) {
    j = nlohmann::json{{"n", c.n_qubits()}, {"gates", nlohmann::json::array()}};
    for (const auto &g : c.gates()) {
        j["gates"].push_back(g);
    }
}

Circuit circuit_from_json(const nlohmann::json &j) {
    Circuit c(j.at("n").get<std::uint32_t>());
    for (const auto &g : j.at("gates")) {
        const auto kind = g.at("kind").get<std::string>();
        const auto &qs = g.at("qubits");
        const auto q0 = qs.at(0).get<std::uint32_t>();
        if (kind == "cx") {
            c.append(Gate::cnot(q0, qs.at(1).get<std::uint32_t>()));
        } else if (kind == "x") {
            c.append(Gate::x(q0));
        } else if (kind == "h") {
            c.append(Gate::h(q0));
        } else if (kind == "rx") {
            c.append(Gate::rx(q0, g.at("angle").get<double>()));
        } else if (kind == "rz") {
            c.append(Gate::rz(q0, g.at("angle").get<double>()));
        } else {
            throw std::invalid_argument("unknown gate kind '" + kind + "'");
        }
    }
    return c;
}

}  // namespace cliffload
