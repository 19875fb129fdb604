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

#include "heac/circuit.hpp"

#include <charconv>
#include <sstream>

namespace heac {

namespace {

struct NameEntry {
    std::string_view name;
    GateKind kind;
};

constexpr NameEntry kNames[] = {
    {"h", GateKind::H},       {"t", GateKind::T},   {"s", GateKind::S},       {"sdg", GateKind::Sdag},
    {"x", GateKind::X},       {"ry", GateKind::Ry}, {"rz", GateKind::Rz},     {"cnot", GateKind::CNOT},
    {"cz", GateKind::CZ},     {"swap", GateKind::SWAP},
};

void check_index(int q) {
    if (q < 1) throw std::invalid_argument("qubit index must be >= 1, got " + std::to_string(q));
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_index(std::string_view tok, int line) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line, "expected integer, got '" + std::string(tok) + "'");
    }
    return v;
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    for (const auto &e : kNames) {
        if (e.kind == kind) return e.name;
    }
    return "?";
}

bool is_two_qubit(GateKind kind) {
    return kind == GateKind::CNOT || kind == GateKind::CZ || kind == GateKind::SWAP;
}

bool is_rotation(GateKind kind) { return kind == GateKind::Ry || kind == GateKind::Rz; }

Gate Gate::single(GateKind kind, int q) {
    if (is_two_qubit(kind) || is_rotation(kind)) {
        throw std::invalid_argument("gate '" + std::string(gate_name(kind)) + "' is not a fixed single-qubit gate");
    }
    check_index(q);
    return Gate{kind, {q, 0}, Angle()};
}

Gate Gate::rotation(GateKind kind, int q, Angle angle) {
    if (!is_rotation(kind)) throw std::invalid_argument("not a rotation kind");
    check_index(q);
    return Gate{kind, {q, 0}, angle};
}

Gate Gate::two(GateKind kind, int a, int b) {
    if (!is_two_qubit(kind)) throw std::invalid_argument("not a two-qubit kind");
    check_index(a);
    check_index(b);
    if (a == b) throw std::invalid_argument("two-qubit gate on a single wire " + std::to_string(a));
    return Gate{kind, {a, b}, Angle()};
}

std::string Gate::str() const {
    std::string out(gate_name(kind));
    out += ' ';
    out += std::to_string(qubits[0]);
    if (is_two_qubit(kind)) {
        out += ' ';
        out += std::to_string(qubits[1]);
    } else if (is_rotation(kind)) {
        out += ' ';
        out += angle.str();
    }
    return out;
}

Circuit::Circuit(int num_qubits, std::vector<Gate> gates) : num_qubits_(num_qubits), gates_(std::move(gates)) {
    if (num_qubits_ < 1) throw std::invalid_argument("circuit needs at least one qubit");
    for (const Gate &g : gates_) {
        for (int i = 0; i < g.arity(); ++i) {
            if (g.qubits[i] < 1 || g.qubits[i] > num_qubits_) {
                throw std::invalid_argument("gate '" + g.str() + "' exceeds " + std::to_string(num_qubits_) +
                                            " qubits");
            }
        }
    }
}

Circuit Circuit::then(const Circuit &later) const {
    if (later.num_qubits_ != num_qubits_) throw std::invalid_argument("qubit count mismatch in concatenation");
    std::vector<Gate> gates = gates_;
    gates.insert(gates.end(), later.gates_.begin(), later.gates_.end());
    return Circuit(num_qubits_, std::move(gates));
}

ParseError::ParseError(int line, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Circuit parse_circuit(std::string_view text) {
    int num_qubits = -1;
    std::vector<Gate> gates;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;

        if (toks[0] == "qubits") {
            if (num_qubits != -1) throw ParseError(line_no, "duplicate 'qubits' header");
            if (toks.size() != 2) throw ParseError(line_no, "expected 'qubits <N>'");
            num_qubits = parse_index(toks[1], line_no);
            if (num_qubits < 1) throw ParseError(line_no, "qubit count must be positive");
            continue;
        }
        if (num_qubits == -1) throw ParseError(line_no, "gate before 'qubits' header");

        const NameEntry *entry = nullptr;
        for (const auto &e : kNames) {
            if (e.name == toks[0]) entry = &e;
        }
        if (entry == nullptr) throw ParseError(line_no, "unknown gate '" + std::string(toks[0]) + "'");

        std::size_t want = is_two_qubit(entry->kind) || is_rotation(entry->kind) ? 3 : 2;
        if (toks.size() != want) {
            throw ParseError(line_no, "'" + std::string(entry->name) + "' takes " + std::to_string(want - 1) +
                                          " operands");
        }
        int a = parse_index(toks[1], line_no);
        int b = 0;
        if (is_two_qubit(entry->kind)) b = parse_index(toks[2], line_no);
        for (int i = 0; i < (is_two_qubit(entry->kind) ? 2 : 1); ++i) {
            int q = i == 0 ? a : b;
            if (q < 1 || q > num_qubits) {
                throw ParseError(line_no, "qubit index " + std::to_string(q) + " out of range 1.." +
                                              std::to_string(num_qubits));
            }
        }
        try {
            if (is_two_qubit(entry->kind)) {
                gates.push_back(Gate::two(entry->kind, a, b));
            } else if (is_rotation(entry->kind)) {
                gates.push_back(Gate::rotation(entry->kind, a, Angle::parse(toks[2])));
            } else {
                gates.push_back(Gate::single(entry->kind, a));
            }
        } catch (const std::invalid_argument &e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (num_qubits == -1) throw ParseError(line_no, "missing 'qubits' header");
    return Circuit(num_qubits, std::move(gates));
}

std::string format_circuit(const Circuit &circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.num_qubits() << "\n";
    for (const Gate &g : circuit.gates()) out << g.str() << "\n";
    return out.str();
}

}  // namespace heac
