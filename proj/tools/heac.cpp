// Copyright 2026 The heac Authors
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

// heac: compile circuits into hardware-efficient ansatz schedules and run the
// verification oracles from the command line.

#include <bit>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "heac/equivalence.hpp"
#include "heac/f2_matrix.hpp"
#include "heac/gadget_table.hpp"
#include "heac/rycnot.hpp"
#include "heac/ryrzcz.hpp"
#include "heac/schedule_json.hpp"
#include "heac/unitary.hpp"
#include "heac/xprop.hpp"

namespace {

using namespace heac;

struct RunConfig {
    std::string kind = "ryrzcz";
    std::string input_path;
    std::string output_path;
    std::string report_path;
    std::string table_path;
    int simulation_cap = kDefaultSimulationCap;
    double tolerance = 1e-9;
    int n = 0;
    int max_n = 10;
    int max_k = 16;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

CompileResult compile(HeaKind kind, const Circuit &c) {
    return kind == HeaKind::RyRzCz ? ryrzcz::compile_ryrzcz(c) : rycnot::compile_rycnot(c);
}

void print_report(const DepthReport &r, std::ostream &out = std::cout) {
    out << "depth " << r.compiled_depth << (r.within_bound() ? " <= " : " > ") << "bound "
              << r.closed_form_bound << (r.within_bound() ? "" : "  BOUND EXCEEDED") << "\n";
    out << "ancillas " << r.ancilla_count << "\n";
}

int cmd_compile(const RunConfig &cfg) {
    const HeaKind kind = parse_kind(cfg.kind);
    const Circuit c = parse_circuit(read_file(cfg.input_path));
    const CompileResult res = compile(kind, c);
    const std::string json = schedule_to_json(res.schedule) + "\n";
    if (cfg.output_path.empty()) {
        std::cout << json;
    } else {
        std::ofstream(cfg.output_path, std::ios::binary) << json;
    }
    if (!cfg.report_path.empty()) std::ofstream(cfg.report_path) << report_to_json(res.report, 2) << "\n";
    print_report(res.report, cfg.output_path.empty() ? std::cerr : std::cout);
    return 0;
}

int cmd_verify(const RunConfig &cfg) {
    const HeaKind kind = parse_kind(cfg.kind);
    const Circuit c = parse_circuit(read_file(cfg.input_path));
    const CompileResult res = compile(kind, c);
    const UnitaryMatrix got = circuit_unitary(schedule_to_circuit(res.schedule), cfg.simulation_cap);
    UnitaryMatrix want = circuit_unitary(c, cfg.simulation_cap);
    double sector = 0;
    if (res.report.ancilla_count > 0) {
        const Eigen::Index d = want.rows();
        sector = phase_aligned_distance(got.topLeftCorner(d, d), want);
        want = with_idle_high_qubits(want, res.report.ancilla_count);
    }
    const double dist = phase_aligned_distance(got, want);
    const bool ok = dist <= cfg.tolerance && sector <= cfg.tolerance;
    std::cout << "N=" << c.num_qubits() << "  verify " << cfg.kind << "  distance " << fmt(dist);
    if (res.report.ancilla_count > 0) std::cout << "  ancilla-zero-sector " << fmt(sector);
    std::cout << "  (tol " << fmt(cfg.tolerance) << ")  " << (ok ? "PASS" : "FAIL") << "\n";
    print_report(res.report);
    return ok ? 0 : 1;
}

int cmd_ladder_order(const RunConfig &cfg) {
    const int n = cfg.n;
    const std::uint64_t order = ladder_order(n);
    const std::uint64_t bound = std::bit_ceil(static_cast<std::uint64_t>(n));
    const bool law = ladder_f2(n).pow(bound).is_identity();
    double err = 0;
    if (n <= cfg.simulation_cap) {
        std::vector<Gate> gates;
        const std::vector<Gate> ladder = ladder_gates(HeaKind::RyCnot, n);
        for (std::uint64_t i = 0; i < bound; ++i) gates.insert(gates.end(), ladder.begin(), ladder.end());
        const UnitaryMatrix u = circuit_unitary(Circuit(n, gates), cfg.simulation_cap);
        err = (u - UnitaryMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
    }
    const bool ok = law && bound % order == 0 && err <= 1e-12;
    std::cout << "N=" << n << "  ladder-order  order " << order << " (bound " << bound << ")  "
              << (ok ? "PASS" : "FAIL") << "  max_error " << fmt(err) << "\n";
    return ok ? 0 : 1;
}

int cmd_gadget_check(const RunConfig &cfg) {
    const rycnot::GadgetTable table = cfg.table_path.empty() ? rycnot::GadgetTable::reference()
                                                            : rycnot::GadgetTable::parse(read_file(cfg.table_path));
    const HeaSchedule s = rycnot::synth_cnot21_gadget(table);
    const UnitaryMatrix got = circuit_unitary(schedule_to_circuit(s), cfg.simulation_cap);
    const UnitaryMatrix want = circuit_unitary(Circuit(6, {Gate::cnot(2, 1)}));
    const double dist = phase_aligned_distance(got, want);
    const bool ok = dist <= cfg.tolerance && s.depth() == 128;
    std::cout << "N=6  gadget-check  depth " << s.depth() << "  " << (ok ? "PASS" : "FAIL") << "  max_error "
              << fmt(dist) << "\n";
    if (!ok) {
        for (const auto &d : rycnot::diff_tables(rycnot::GadgetTable::reference(), table)) {
            std::cerr << "theta_{" << d.m << "," << d.i << "}: reference " << d.expected.str() << ", table "
                      << d.actual.str() << "\n";
        }
        std::cerr << "gadget-check failed: CNOT(2->1) distance " << fmt(dist) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_xprop_check(const RunConfig &cfg) {
    bool all = true;
    for (int n = 2; n <= cfg.max_n; ++n) {
        bool ok = true;
        for (int k = 1; k <= cfg.max_k; ++k) {
            const auto counts = count_x_bruteforce(n, k);
            for (int j = 1; j <= n; ++j) ok &= counts[xprop_wire_for_index(n, j) - 1] == count_x_formula(k, j);
        }
        const int period = static_cast<int>(std::bit_ceil(static_cast<unsigned>(n + 1)));
        for (const auto &v : count_x_bruteforce(n, period)) ok &= (v % 2) == 0;
        double err = 0;
        if (n <= std::min(8, cfg.simulation_cap)) {
            const UnitaryMatrix u = circuit_unitary(x_ladder_word(n, period, XLadderWord::LadderThenX));
            err = (u - UnitaryMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
            ok &= err <= 1e-12;
        }
        std::cout << "N=" << n << "  xprop  k<=" << cfg.max_k << " period " << period << "  "
                  << (ok ? "PASS" : "FAIL") << "  max_error " << fmt(err) << "\n";
        all &= ok;
    }
    return all ? 0 : 1;
}

int cmd_depth_report(const RunConfig &cfg) {
    const HeaKind kind = parse_kind(cfg.kind);
    const Circuit c = parse_circuit(read_file(cfg.input_path));
    const CompileResult res = compile(kind, c);
    for (const auto &[gate, count] : res.report.input_gate_counts) {
        std::cout << gate << " x" << count << "  bound each " << gate_depth_bound(kind, gate, c.num_qubits())
                  << "\n";
    }
    print_report(res.report);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Compile circuits into hardware-efficient ansatz schedules"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&cfg](CLI::App *sub) {
        sub->add_option("--sim-cap", cfg.simulation_cap, "Largest register simulated densely")
            ->check(CLI::Range(1, 14));
        sub->add_option("--tol", cfg.tolerance, "Phase-aligned distance tolerance")
            ->check(CLI::PositiveNumber);
    };
    auto add_kind_input = [&cfg](CLI::App *sub) {
        sub->add_option("--kind", cfg.kind, "Ansatz kind")->check(CLI::IsMember({"ryrzcz", "rycnot"}));
        sub->add_option("input", cfg.input_path, "Circuit file")->required()->check(CLI::ExistingFile);
    };

    CLI::App *compile_cmd = app.add_subcommand("compile", "Write the schedule JSON and the depth report");
    add_kind_input(compile_cmd);
    compile_cmd->add_option("-o,--output", cfg.output_path, "Schedule JSON path (stdout when omitted)");
    compile_cmd->add_option("--report", cfg.report_path, "Depth report JSON path");

    CLI::App *verify_cmd = app.add_subcommand("verify", "Compile and compare unitaries");
    add_kind_input(verify_cmd);
    add_common(verify_cmd);

    CLI::App *order_cmd = app.add_subcommand("ladder-order", "Order of the CNOT ladder over GF(2)");
    order_cmd->add_option("N", cfg.n, "Wire count")->required()->check(CLI::Range(2, 1 << 16));
    add_common(order_cmd);

    CLI::App *gadget_cmd = app.add_subcommand("gadget-check", "Validate the six-wire CNOT gadget table");
    gadget_cmd->add_option("--table", cfg.table_path, "Angle table file")->check(CLI::ExistingFile);
    add_common(gadget_cmd);

    CLI::App *xprop_cmd = app.add_subcommand("xprop-check", "X-propagation counts against the closed form");
    xprop_cmd->add_option("--max-n", cfg.max_n)->check(CLI::Range(2, 64));
    xprop_cmd->add_option("--max-k", cfg.max_k)->check(CLI::Range(1, 4096));
    add_common(xprop_cmd);

    CLI::App *report_cmd = app.add_subcommand("depth-report", "Compiled depth against the closed-form bound");
    add_kind_input(report_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compile_cmd) return cmd_compile(cfg);
        if (*verify_cmd) return cmd_verify(cfg);
        if (*order_cmd) return cmd_ladder_order(cfg);
        if (*gadget_cmd) return cmd_gadget_check(cfg);
        if (*xprop_cmd) return cmd_xprop_check(cfg);
        if (*report_cmd) return cmd_depth_report(cfg);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
