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

#ifndef HEAC_RYRZCZ_HPP
#define HEAC_RYRZCZ_HPP

#include <array>
#include <span>
#include <vector>

#include "heac/circuit.hpp"
#include "heac/routing.hpp"
#include "heac/schedule.hpp"

namespace heac::ryrzcz {

/// Depth-0 schedule for one single-qubit gate (H, T, S, Sdag, X, Ry or Rz).
/// Other wires get zero angles. Throws std::invalid_argument otherwise.
HeaSchedule synth_single(const Gate &gate, int num_qubits);

/// Depth-0 schedule for single-qubit gates applied in the given time order.
/// Each wire's product must reduce to Ry followed by Rz, else
/// std::invalid_argument.
HeaSchedule synth_layer(std::span<const Gate> gates, int num_qubits);

/// D_k acts on qubits 1..k+1: CZ on (1,2),(3,4),..., then H on qubits 2..k+1,
/// then CZ on (2,3),(4,5),...
struct DkParams {
    int k = 1;
    int num_qubits = 2;
    bool dagger = false;
};

/// Schedule of depth exactly 16k realizing D_k (or its inverse).
/// Throws std::invalid_argument unless 1 <= k and k + 1 <= num_qubits.
HeaSchedule synth_dk(const DkParams &params);

/// CZ on (q_k, q_{k+1}) for 1 <= k < N. Depth is 32k - 14.
HeaSchedule synth_nn_cz(int k, int num_qubits);

/// CNOT between adjacent wires: H on the target around a CZ. Depth 32k - 10
/// with k the lower wire.
HeaSchedule synth_nn_cnot(int control, int target, int num_qubits);

/// Any CNOT, from route_cnot and synth_nn_cnot merged in order.
HeaSchedule synth_cnot(int control, int target, int num_qubits);

/// CZ as H(target) CNOT H(target), or the adjacent construction when |a-b| = 1.
HeaSchedule synth_cz(int a, int b, int num_qubits);

/// SWAP as three CNOTs with alternating direction.
HeaSchedule synth_swap(int a, int b, int num_qubits);

/// Lowers every gate on its own and merges the pieces in order. Accepts
/// H, T, S, Sdag, X, Ry, Rz, CNOT, CZ and SWAP. No ancillas are used.
CompileResult compile_ryrzcz(const Circuit &circuit);

}  // namespace heac::ryrzcz

#endif
