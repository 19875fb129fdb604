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

#ifndef HEAC_UNITARY_HPP
#define HEAC_UNITARY_HPP

#include <Eigen/Dense>
#include <stdexcept>

#include "heac/circuit.hpp"

namespace heac {

/// Dense 2^N x 2^N matrix. Basis index bit (q - 1) holds qubit q.
using UnitaryMatrix = Eigen::MatrixXcd;

inline constexpr int kDefaultSimulationCap = 12;

class SimulationCapError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// 2x2 matrix of a single-qubit gate.
Eigen::Matrix2cd single_qubit_matrix(const Gate &gate);

/// u <- G u, where G is `gate` acting on a register of log2(u.rows()) qubits.
void apply_gate(UnitaryMatrix &u, const Gate &gate);

/// Product of the circuit's gates, earliest gate rightmost.
/// Throws SimulationCapError when num_qubits > cap.
UnitaryMatrix circuit_unitary(const Circuit &circuit, int cap = kDefaultSimulationCap);

/// u (x) I on `extra` idle qubits placed above the register of u.
UnitaryMatrix with_idle_high_qubits(const UnitaryMatrix &u, int extra);

}  // namespace heac

#endif
