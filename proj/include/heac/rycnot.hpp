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

#ifndef HEAC_RYCNOT_HPP
#define HEAC_RYCNOT_HPP

#include "heac/circuit.hpp"
#include "heac/gadget_table.hpp"
#include "heac/routing.hpp"
#include "heac/schedule.hpp"

namespace heac::rycnot {

/// Idle wires appended above the data register, numbered N+1..N+4.
inline constexpr int kAncillaCount = 4;

/// Zero-angle depth realizing the inverse CNOT ladder on N wires:
/// 2^ceil(log2 N) - 1. Throws std::invalid_argument for N < 2.
int ladder_cnot_inverse_depth(int num_wires);

/// Six-wire schedule of depth 128 built from `table`. With the reference
/// table it equals CNOT(2 -> 1) on wires 1, 2.
HeaSchedule synth_cnot21_gadget(const GadgetTable &table = GadgetTable::reference());

/// The gadget placed on wires window..window+5 of a `num_wires` register with
/// zero angles elsewhere. The full-register ladder and its inverse exchange
/// roles when num_wires - window is even. Depth is 16 * 2^ceil(log2 num_wires).
/// Throws std::invalid_argument unless 1 <= window and window + 5 <= num_wires.
HeaSchedule embed_gadget(const GadgetTable &table, int num_wires, int window);

enum class Direction {
    Down,  // CNOT(k+1 -> k)
    Up,    // CNOT(k -> k+1)
};

/// Adjacent CNOT on (q_k, q_{k+1}) for a register of N data qubits plus
/// kAncillaCount idle wires. Up is Down conjugated by Ry(+-pi/2) on both wires,
/// folded into the boundary layers. Requires 1 <= k <= N - 1.
HeaSchedule synth_nn_cnot(int k, Direction direction, int num_data_qubits,
                          const GadgetTable &table = GadgetTable::reference());

/// Any CNOT on the data register via route_cnot.
HeaSchedule synth_cnot(int control, int target, int num_data_qubits);

/// SWAP as three CNOTs with alternating direction.
HeaSchedule synth_swap(int a, int b, int num_data_qubits);

/// X on data qubit q, exact: CNOT(a->q) times its conjugate by Ry(pi) on a
/// neighbouring data wire a. Needs at least two data qubits.
HeaSchedule synth_x(int q, int num_data_qubits);

/// H as X followed by Ry(-pi/2).
HeaSchedule synth_h(int q, int num_data_qubits);

/// CZ as H(b) CNOT(a->b) H(b).
HeaSchedule synth_cz(int a, int b, int num_data_qubits);

/// Accepts Ry, X, H, CNOT, CZ and SWAP; anything else raises
/// std::invalid_argument.
/// The schedule has N + kAncillaCount wires and depth equal to the sum of the
/// per-gate depths.
CompileResult compile_rycnot(const Circuit &circuit);

}  // namespace heac::rycnot

#endif
