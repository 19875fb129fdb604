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

#ifndef HEAC_CIRCUIT_HPP
#define HEAC_CIRCUIT_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "heac/angle.hpp"

namespace heac {

enum class GateKind { H, T, S, Sdag, X, Ry, Rz, CNOT, CZ, SWAP };

/// Lower-case mnemonic used by the circuit text format ("h", "sdg", "cnot", ...).
std::string_view gate_name(GateKind kind);
bool is_two_qubit(GateKind kind);
bool is_rotation(GateKind kind);

/// One gate. Qubits are 1-based. For CNOT, q0 is the control and q1 the target.
/// CZ and SWAP are symmetric but keep the order they were written in.
struct Gate {
    GateKind kind = GateKind::H;
    std::array<int, 2> qubits{0, 0};
    Angle angle;  // meaningful for Ry and Rz only

    static Gate single(GateKind kind, int q);
    static Gate rotation(GateKind kind, int q, Angle angle);
    static Gate two(GateKind kind, int a, int b);

    static Gate h(int q) { return single(GateKind::H, q); }
    static Gate t(int q) { return single(GateKind::T, q); }
    static Gate s(int q) { return single(GateKind::S, q); }
    static Gate sdag(int q) { return single(GateKind::Sdag, q); }
    static Gate x(int q) { return single(GateKind::X, q); }
    static Gate ry(int q, Angle a) { return rotation(GateKind::Ry, q, a); }
    static Gate rz(int q, Angle a) { return rotation(GateKind::Rz, q, a); }
    static Gate cnot(int control, int target) { return two(GateKind::CNOT, control, target); }
    static Gate cz(int a, int b) { return two(GateKind::CZ, a, b); }
    static Gate swap(int a, int b) { return two(GateKind::SWAP, a, b); }

    int arity() const { return is_two_qubit(kind) ? 2 : 1; }
    bool operator==(const Gate &other) const = default;

    /// Text-format line for this gate, e.g. "cnot 2 1" or "ry 3 -1/2".
    std::string str() const;
};

/// An ordered gate list on num_qubits wires; gates()[0] acts first.
class Circuit {
   public:
    /// Throws std::invalid_argument if any gate index falls outside 1..num_qubits.
    explicit Circuit(int num_qubits, std::vector<Gate> gates = {});

    int num_qubits() const { return num_qubits_; }
    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

    /// This circuit followed in time by `later`. Both must share num_qubits.
    Circuit then(const Circuit &later) const;

    bool operator==(const Circuit &other) const = default;

   private:
    int num_qubits_;
    std::vector<Gate> gates_;
};

/// Raised by parse_circuit. `line()` is 1-based.
class ParseError : public std::runtime_error {
   public:
    ParseError(int line, const std::string &message);
    int line() const { return line_; }

   private:
    int line_;
};

Circuit parse_circuit(std::string_view text);
std::string format_circuit(const Circuit &circuit);

}  // namespace heac

#endif
