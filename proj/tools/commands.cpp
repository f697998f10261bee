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

#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cliffload/chem.hpp"
#include "cliffload/circuit.hpp"
#include "cliffload/error.hpp"
#include "cliffload/loader.hpp"
#include "cliffload/oracle.hpp"
#include "cliffload/ortho.hpp"
#include "cliffload/vqe.hpp"

namespace cliffload::cli {
namespace {

struct Common {
    std::string ladder = "logtree";
    std::size_t L = 1;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::string out;
};

void add_common(CLI::App *cmd, Common &c, std::size_t default_L) {
    c.L = default_L;
    cmd->add_option("--ladder", c.ladder, "CNOT ladder: cascade or logtree")
        ->check(CLI::IsMember({"cascade", "logtree"}))
        ->capture_default_str();
    cmd->add_option("--L", c.L, "Correlation width")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--seed", c.seed, "Seed for random inputs")->capture_default_str();
    cmd->add_option("--tol", c.tol, "Tolerance")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--out", c.out, "Output path or prefix");
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw std::invalid_argument("cannot write " + path);
    }
}

struct MatrixInput {
    std::string path;
    std::string random;
};

void add_matrix_input(CLI::App *cmd, MatrixInput &m) {
    cmd->add_option("matrix", m.path, "Matrix JSON {rows, cols, data}");
    cmd->add_option("--random", m.random, "Seeded random input of shape RxC instead of a file");
}

OrthonormalMatrix load_matrix(const MatrixInput &in, std::uint64_t seed) {
    if (in.path.empty() == in.random.empty()) {
        throw std::invalid_argument("give exactly one of a matrix file or --random RxC");
    }
    if (!in.random.empty()) {
        std::size_t rows = 0;
        std::size_t cols = 0;
        char sep = 0;
        std::istringstream ss(in.random);
        if (!(ss >> rows >> sep >> cols) || (sep != 'x' && sep != 'X') || !ss.eof() || cols == 0 || cols > rows) {
            throw std::invalid_argument("--random expects RxC with 1 <= C <= R, got '" + in.random + "'");
        }
        return random_orthonormal(rows, cols, seed);
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(in.path));
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(in.path + ": " + e.what());
    }
    try {
        return orthonormal_from_json(j);
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(in.path + ": " + e.what());
    } catch (const std::invalid_argument &e) {
        throw std::invalid_argument(in.path + ": " + e.what());
    }
}

std::vector<std::size_t> parse_list(const std::string &text, bool pow2_only) {
    std::vector<std::size_t> values;
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        std::size_t lo = 0;
        std::size_t hi = 0;
        std::size_t step = 1;
        char c1 = 0;
        char c2 = 0;
        std::istringstream ss(text);
        if (!(ss >> lo >> c1 >> hi) || c1 != ':') {
            throw std::invalid_argument("bad range '" + text + "'");
        }
        if (ss >> c2) {
            if (c2 != ':' || !(ss >> step) || step == 0) {
                throw std::invalid_argument("bad range '" + text + "'");
            }
        }
        for (std::size_t v = lo; v <= hi; v += step) {
            values.push_back(v);
        }
    } else {
        std::istringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t pos = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(item, &pos);
            } catch (const std::exception &) {
                pos = 0;
            }
            if (pos == 0 || pos != item.size()) {
                throw std::invalid_argument("bad list entry '" + item + "'");
            }
            values.push_back(v);
        }
    }
    if (pow2_only) {
        std::erase_if(values, [](std::size_t v) { return v == 0 || (v & (v - 1)) != 0; });
    }
    if (values.empty()) {
        throw std::invalid_argument("empty list '" + text + "'");
    }
    return values;
}

int cmd_synth(const Common &c, const MatrixInput &in, std::ostream &out) {
    const OrthonormalMatrix m = load_matrix(in, c.seed);
    const LadderStyle style = parse_ladder(c.ladder);
    const LoaderPlan plan = make_plan(m, c.L);
    const Circuit circuit = circuit_from_plan(plan, style);
    nlohmann::json j = plan;
    j["ladder"] = c.ladder;
    j["two_qubit_depth"] = two_qubit_depth(circuit);
    j["gate_count"] = circuit.size();
    const std::string qasm = to_qasm(circuit);
    if (c.out.empty()) {
        out << qasm;
        return kOk;
    }
    write_file(c.out + ".qasm", qasm);
    write_file(c.out + ".plan.json", j.dump(2) + "\n");
    out << "wrote " << c.out << ".qasm and " << c.out << ".plan.json (" << circuit.size() << " gates, two-qubit depth "
        << two_qubit_depth(circuit) << ")\n";
    return kOk;
}

int cmd_verify(const Common &c, const MatrixInput &in, double corrupt, std::ostream &out) {
    const OrthonormalMatrix m = load_matrix(in, c.seed);
    const LadderStyle style = parse_ladder(c.ladder);
    LoaderPlan plan = make_plan(m, c.L);
    if (corrupt != 0.0) {
        for (auto &schedule : plan.columns) {
            if (schedule.rotation_count() > 0) {
                schedule.layers.front().front().theta += corrupt;
                break;
            }
        }
    }
    VerifyReport report = compare_with_oracle(circuit_from_plan(plan, style), m, c.L);
    for (const auto &schedule : plan.columns) {
        report.root_fixup = report.root_fixup || schedule.root_fixup;
    }
    nlohmann::json j = report;
    j["ladder"] = c.ladder;
    const bool ok = report.fidelity > 1.0 - c.tol;
    j["pass"] = ok;
    if (c.out.empty()) {
        out << j.dump(2) << "\n";
    } else {
        write_file(c.out, j.dump(2) + "\n");
        out << (ok ? "PASS" : "FAIL") << " fidelity " << report.fidelity << "\n";
    }
    return ok ? kOk : kVerifyFailed;
}

struct DepthArgs {
    std::string n_list = "4,8,16,32,64";
    std::string d_list = "2,4,8";
    std::string l_list;
    bool pow2 = false;
    bool cancel = false;
};

double analytic_depth(std::size_t N, std::size_t d, std::size_t L) {
    const auto c = static_cast<double>(ceil_log2(N / L));
    return (2.0 * static_cast<double>(d) / static_cast<double>(L)) *
           (c * c + (1.0 + 2.0 * std::log2(static_cast<double>(L))) * c);
}

int cmd_depth(const Common &c, const DepthArgs &a, std::ostream &out, std::ostream &err) {
    const LadderStyle style = parse_ladder(c.ladder);
    const auto ns = parse_list(a.n_list, a.pow2);
    const auto ds = parse_list(a.d_list, false);
    const auto ls = a.l_list.empty() ? std::vector<std::size_t>{c.L} : parse_list(a.l_list, false);
    std::string table = "N,d,L,measured,analytic,baseline,ratio";
    if (a.cancel) {
        table += ",measured_cancel";
    }
    table += "\n";
    std::map<std::pair<std::size_t, std::size_t>, std::optional<std::size_t>> crossover;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> largest;
    char buf[256];
    for (std::size_t L : ls) {
        for (std::size_t d : ds) {
            for (std::size_t N : ns) {
                if (L == 0 || d == 0 || d > N || N % L != 0 || d % L != 0) {
                    continue;
                }
                const OrthonormalMatrix m = random_orthonormal(N / L, d / L, c.seed);
                const Circuit circuit = prepare_state_circuit(m, L, style);
                const std::size_t measured = two_qubit_depth(circuit);
                const std::size_t baseline = 2 * N;
                std::snprintf(buf, sizeof(buf), "%zu,%zu,%zu,%zu,%.10g,%zu,%.6f", N, d, L, measured,
                              analytic_depth(N, d, L), baseline,
                              static_cast<double>(measured) / static_cast<double>(baseline));
                table += buf;
                if (a.cancel) {
                    table += "," + std::to_string(two_qubit_depth(cancel_adjacent_cnots(circuit)));
                }
                table += "\n";
                auto &x = crossover[{d, L}];
                if (measured < baseline && (!x || N < *x)) {
                    x = N;
                }
                largest[{d, L}] = std::max(largest[{d, L}], N);
            }
        }
    }
    if (c.out.empty()) {
        out << table;
    } else {
        write_file(c.out, table);
    }
    for (const auto &[key, n] : crossover) {
        if (n) {
            err << "crossover d=" << key.first << " L=" << key.second << ": N=" << *n << "\n";
        } else {
            err << "crossover d=" << key.first << " L=" << key.second << ": none for N <= " << largest[key] << "\n";
        }
    }
    return kOk;
}

struct VqeArgs {
    std::string path;
    std::size_t max_iter = 200;
    double perturbation = 0.0;
};

int cmd_vqe(const Common &c, const VqeArgs &a, std::ostream &out) {
    const FciDump f = read_fcidump(a.path);
    const MolecularHamiltonian h = jw_hamiltonian(f);
    VqeOptions opts;
    opts.L = c.L;
    opts.style = parse_ladder(c.ladder);
    opts.minimize.tol = c.tol;
    opts.minimize.max_iter = a.max_iter;
    opts.perturbation = a.perturbation;
    opts.seed = c.seed;
    const VqeResult r = run_vqe(h, f.n_elec, opts);
    char buf[256];
    std::snprintf(buf, sizeof(buf), "E_HF     %.12f\nE_FCI    %.12f\nE_opt    %.12f\n", r.e_hf, r.e_fci, r.energy);
    out << buf;
    if (r.fraction) {
        std::snprintf(buf, sizeof(buf), "fraction %.9f\n", *r.fraction);
        out << buf;
    } else {
        out << "fraction n/a\n";
    }
    out << "iterations " << r.iterations << (r.converged ? " (converged)" : " (not converged)") << "\n";
    if (!c.out.empty()) {
        const nlohmann::json j = r;
        write_file(c.out + ".json", j.dump(2) + "\n");
        write_file(c.out + ".trace.csv", trace_csv(r.trace));
    }
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Clifford-loader state preparation: synthesis, verification, depth and VQE", "cliffload"};
    app.require_subcommand(1);

    Common synth_c;
    MatrixInput synth_in;
    auto *synth = app.add_subcommand("synth", "Write the preparation circuit as QASM plus its angle plan");
    add_common(synth, synth_c, 1);
    add_matrix_input(synth, synth_in);

    Common verify_c;
    MatrixInput verify_in;
    double corrupt = 0.0;
    auto *verify = app.add_subcommand("verify", "Compare the simulated preparation with the determinant oracle");
    add_common(verify, verify_c, 1);
    add_matrix_input(verify, verify_in);
    verify->add_option("--corrupt-angle", corrupt)->group("");

    Common depth_c;
    DepthArgs depth_a;
    auto *depth = app.add_subcommand("depth", "Tabulate measured and analytic two-qubit depth as CSV");
    add_common(depth, depth_c, 1);
    depth->add_option("--N", depth_a.n_list, "Mode counts: list a,b,c or range lo:hi[:step]")->capture_default_str();
    depth->add_option("--d", depth_a.d_list, "Electron counts")->capture_default_str();
    depth->add_option("--L-list", depth_a.l_list, "Several widths at once (overrides --L)");
    depth->add_flag("--pow2", depth_a.pow2, "Keep only powers of two from --N");
    depth->add_flag("--cancel", depth_a.cancel, "Add a column with adjacent CNOT pairs cancelled");

    Common vqe_c;
    VqeArgs vqe_a;
    auto *vqe = app.add_subcommand("vqe", "Optimize the correlated ansatz on an FCIDUMP Hamiltonian");
    add_common(vqe, vqe_c, 2);
    vqe->add_option("fcidump", vqe_a.path, "FCIDUMP file")->required();
    vqe->add_option("--max-iter", vqe_a.max_iter, "Iteration cap")->capture_default_str();
    vqe->add_option("--perturb", vqe_a.perturbation, "Uniform start perturbation in radians")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*synth) {
            return cmd_synth(synth_c, synth_in, out);
        }
        if (*verify) {
            return cmd_verify(verify_c, verify_in, corrupt, out);
        }
        if (*depth) {
            return cmd_depth(depth_c, depth_a, out, err);
        }
        return cmd_vqe(vqe_c, vqe_a, out);
    } catch (const ResourceLimitError &e) {
        err << "resource limit: " << e.what() << "\n";
        return kResourceLimit;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace cliffload::cli
