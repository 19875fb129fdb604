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

#include "heac/unitary.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace heac {

namespace {

using cd = std::complex<double>;

int register_size(const UnitaryMatrix &u) {
    int n = 0;
    while ((Eigen::Index{1} << n) < u.rows()) ++n;
    return n;
}

void apply_single(UnitaryMatrix &u, int bit, const Eigen::Matrix2cd &g) {
    const Eigen::Index dim = u.rows();
    const Eigen::Index mask = Eigen::Index{1} << bit;
    const cd g00 = g(0, 0), g01 = g(0, 1), g10 = g(1, 0), g11 = g(1, 1);
    const bool diagonal = g01 == cd(0) && g10 == cd(0);
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
        cd *col = u.data() + c * dim;
        for (Eigen::Index i = 0; i < dim; ++i) {
            if (i & mask) continue;
            cd a = col[i];
            cd b = col[i | mask];
            if (diagonal) {
                col[i] = g00 * a;
                col[i | mask] = g11 * b;
            } else {
                col[i] = g00 * a + g01 * b;
                col[i | mask] = g10 * a + g11 * b;
            }
        }
    }
}

}  // namespace

Eigen::Matrix2cd single_qubit_matrix(const Gate &gate) {
    const double r = 1.0 / std::sqrt(2.0);
    const cd i(0, 1);
    Eigen::Matrix2cd m;
    switch (gate.kind) {
        case GateKind::H:
            m << r, r, r, -r;
            break;
        case GateKind::T:
            m << 1, 0, 0, std::exp(i * (M_PI / 4));
            break;
        case GateKind::S:
            m << 1, 0, 0, i;
            break;
        case GateKind::Sdag:
            m << 1, 0, 0, -i;
            break;
        case GateKind::X:
            m << 0, 1, 1, 0;
            break;
        case GateKind::Ry: {
            double h = gate.angle.radians() / 2;
            m << std::cos(h), -std::sin(h), std::sin(h), std::cos(h);
            break;
        }
        case GateKind::Rz: {
            double h = gate.angle.radians() / 2;
            m << std::exp(-i * h), 0, 0, std::exp(i * h);
            break;
        }
        default:
            throw std::invalid_argument("not a single-qubit gate: " + gate.str());
    }
    return m;
}

void apply_gate(UnitaryMatrix &u, const Gate &gate) {
    const int n = register_size(u);
    for (int k = 0; k < gate.arity(); ++k) {
        if (gate.qubits[k] > n) throw std::invalid_argument("gate '" + gate.str() + "' outside register");
    }
    const Eigen::Index dim = u.rows();
    if (!is_two_qubit(gate.kind)) {
        if (is_rotation(gate.kind) && gate.angle.is_zero()) return;
        apply_single(u, gate.qubits[0] - 1, single_qubit_matrix(gate));
        return;
    }
    const Eigen::Index ma = Eigen::Index{1} << (gate.qubits[0] - 1);
    const Eigen::Index mb = Eigen::Index{1} << (gate.qubits[1] - 1);
    switch (gate.kind) {
        case GateKind::CNOT:
            // Rows with control set swap their target partner.
            for (Eigen::Index i = 0; i < dim; ++i) {
                if ((i & ma) && !(i & mb)) u.row(i).swap(u.row(i | mb));
            }
            break;
        case GateKind::CZ:
            for (Eigen::Index i = 0; i < dim; ++i) {
                if ((i & ma) && (i & mb)) u.row(i) *= -1.0;
            }
            break;
        case GateKind::SWAP:
            for (Eigen::Index i = 0; i < dim; ++i) {
                if ((i & ma) && !(i & mb)) u.row(i).swap(u.row((i & ~ma) | mb));
            }
            break;
        default:
            break;
    }
}

UnitaryMatrix circuit_unitary(const Circuit &circuit, int cap) {
    if (circuit.num_qubits() > cap) {
        throw SimulationCapError("circuit has " + std::to_string(circuit.num_qubits()) +
                                 " qubits, simulation cap is " + std::to_string(cap));
    }
    const Eigen::Index dim = Eigen::Index{1} << circuit.num_qubits();
    UnitaryMatrix u = UnitaryMatrix::Identity(dim, dim);
    for (const Gate &g : circuit.gates()) apply_gate(u, g);
    return u;
}

UnitaryMatrix with_idle_high_qubits(const UnitaryMatrix &u, int extra) {
    const Eigen::Index d = u.rows();
    const Eigen::Index copies = Eigen::Index{1} << extra;
    UnitaryMatrix out = UnitaryMatrix::Zero(d * copies, d * copies);
    for (Eigen::Index b = 0; b < copies; ++b) out.block(b * d, b * d, d, d) = u;
    return out;
}

}  // namespace heac
