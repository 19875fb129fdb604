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

#include "heac/rycnot.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace heac::rycnot {

namespace {

// Appends rotation layers one entangler at a time.
class LayerBuilder {
   public:
    explicit LayerBuilder(int n) : n_(n), layers_(1, RotationLayer(n)) {}

    void ry(int q, const Angle &a) { layers_.back()[q - 1].y += a; }
    void entangle(int count) {
        for (int i = 0; i < count; ++i) layers_.emplace_back(n_);
    }
    HeaSchedule build() && { return HeaSchedule(HeaKind::RyCnot, n_, std::move(layers_)); }

   private:
    int n_;
    std::vector<RotationLayer> layers_;
};

int ladder_period(int n) { return static_cast<int>(std::bit_ceil(static_cast<unsigned>(n))); }

// Block order in time is m = 8 down to 1, then the closing layer m = 0.
// Wire w of the gadget maps to register wire base + w.
HeaSchedule build_gadget(const GadgetTable &t, int n, int base, int fwd, int inv) {
    LayerBuilder b(n);
    for (int m = GadgetTable::kBlocks; m >= 1; --m) {
        for (int i = 1; i <= 6; ++i) b.ry(base + i, t.at(m, i + 10));
        b.entangle(fwd);
        for (int i = 1; i <= 4; ++i) b.ry(base + i + 1, t.at(m, i + 6));
        b.entangle(inv);
        for (int i = 1; i <= 4; ++i) b.ry(base + i + 1, t.at(m, i + 2));
        b.entangle(inv);
        for (int i = 1; i <= 2; ++i) b.ry(base + i + 2, t.at(m, i));
        b.entangle(fwd);
    }
    for (int i = 1; i <= GadgetTable::kClosingAngles; ++i) b.ry(base + i, t.at(0, i));
    return std::move(b).build();
}

void check_data_pair(int a, int b, int n) {
    if (a < 1 || b < 1 || a > n || b > n) {
        throw std::invalid_argument("qubits (" + std::to_string(a) + ", " + std::to_string(b) +
                                    ") outside data register 1.." + std::to_string(n));
    }
    if (a == b) throw std::invalid_argument("two-qubit gate needs distinct qubits, got " + std::to_string(a));
}

}  // namespace

int ladder_cnot_inverse_depth(int num_wires) {
    if (num_wires < 2) throw std::invalid_argument("ladder needs at least 2 wires");
    return ladder_period(num_wires) - 1;
}

HeaSchedule synth_cnot21_gadget(const GadgetTable &table) { return embed_gadget(table, 6, 1); }

HeaSchedule embed_gadget(const GadgetTable &table, int num_wires, int window) {
    if (window < 1 || window + 5 > num_wires) {
        throw std::invalid_argument("gadget window " + std::to_string(window) + ".." + std::to_string(window + 5) +
                                    " outside 1.." + std::to_string(num_wires));
    }
    const int inv = ladder_cnot_inverse_depth(num_wires);
    const bool matched = (num_wires - window - 1) % 2 == 0;
    return matched ? build_gadget(table, num_wires, window - 1, 1, inv)
                   : build_gadget(table, num_wires, window - 1, inv, 1);
}

HeaSchedule synth_nn_cnot(int k, Direction direction, int num_data_qubits, const GadgetTable &table) {
    if (k < 1 || k > num_data_qubits - 1) {
        throw std::invalid_argument("adjacent CNOT index k=" + std::to_string(k) + " needs 1 <= k <= " +
                                    std::to_string(num_data_qubits - 1));
    }
    const int n = num_data_qubits + kAncillaCount;
    HeaSchedule down = embed_gadget(table, n, k);
    if (direction == Direction::Down) return down;
    // CNOT(k -> k+1) = W^dag CNOT(k+1 -> k) W with W = Ry(pi/2) on k, Ry(-pi/2) on k+1.
    std::vector<RotationLayer> layers = down.layers();
    layers.front()[k - 1].y += Angle(1, 2);
    layers.front()[k].y += Angle(-1, 2);
    layers.back()[k - 1].y += Angle(-1, 2);
    layers.back()[k].y += Angle(1, 2);
    return HeaSchedule(HeaKind::RyCnot, n, std::move(layers));
}

HeaSchedule synth_cnot(int control, int target, int num_data_qubits) {
    check_data_pair(control, target, num_data_qubits);
    std::vector<HeaSchedule> parts;
    for (const auto &[c, t] : route_cnot(control, target)) {
        parts.push_back(synth_nn_cnot(std::min(c, t), c > t ? Direction::Down : Direction::Up, num_data_qubits));
    }
    return merge_schedules(parts);
}

HeaSchedule synth_swap(int a, int b, int num_data_qubits) {
    check_data_pair(a, b, num_data_qubits);
    const HeaSchedule parts[] = {synth_cnot(a, b, num_data_qubits), synth_cnot(b, a, num_data_qubits),
                                 synth_cnot(a, b, num_data_qubits)};
    return merge_schedules(parts);
}

HeaSchedule synth_x(int q, int num_data_qubits) {
    if (num_data_qubits < 2) throw std::invalid_argument("X needs a second data qubit in the rycnot ansatz");
    if (q < 1 || q > num_data_qubits) throw std::invalid_argument("qubit " + std::to_string(q) + " out of range");
    const int a = q < num_data_qubits ? q + 1 : q - 1;
    const Direction dir = a > q ? Direction::Down : Direction::Up;
    // Ry(pi) on the control flips which control value fires, so
    // CNOT(a->q) . Ry(-pi)_a CNOT(a->q) Ry(pi)_a = X_q exactly.
    HeaSchedule flipped = synth_nn_cnot(std::min(a, q), dir, num_data_qubits);
    std::vector<RotationLayer> layers = flipped.layers();
    layers.front()[a - 1].y += Angle(1);
    layers.back()[a - 1].y += Angle(-1);
    const HeaSchedule parts[] = {HeaSchedule(HeaKind::RyCnot, flipped.num_qubits(), std::move(layers)),
                                 synth_nn_cnot(std::min(a, q), dir, num_data_qubits)};
    return merge_schedules(parts);
}

HeaSchedule synth_h(int q, int num_data_qubits) {
    // H X = Ry(-pi/2), so H is X followed by Ry(-pi/2).
    std::vector<RotationLayer> layers = synth_x(q, num_data_qubits).layers();
    layers.back()[q - 1].y += Angle(-1, 2);
    return HeaSchedule(HeaKind::RyCnot, num_data_qubits + kAncillaCount, std::move(layers));
}

HeaSchedule synth_cz(int a, int b, int num_data_qubits) {
    check_data_pair(a, b, num_data_qubits);
    const HeaSchedule parts[] = {synth_h(b, num_data_qubits), synth_cnot(a, b, num_data_qubits),
                                 synth_h(b, num_data_qubits)};
    return merge_schedules(parts);
}

CompileResult compile_rycnot(const Circuit &circuit) {
    const int n = circuit.num_qubits();
    const int wires = n + kAncillaCount;
    std::vector<HeaSchedule> parts;
    for (const Gate &g : circuit.gates()) {
        switch (g.kind) {
            case GateKind::Ry: {
                std::vector<RotationLayer> layers(1, RotationLayer(wires));
                layers[0][g.qubits[0] - 1].y = g.angle;
                parts.emplace_back(HeaKind::RyCnot, wires, std::move(layers));
                break;
            }
            case GateKind::X:
                parts.push_back(synth_x(g.qubits[0], n));
                break;
            case GateKind::H:
                parts.push_back(synth_h(g.qubits[0], n));
                break;
            case GateKind::CNOT:
                parts.push_back(synth_cnot(g.qubits[0], g.qubits[1], n));
                break;
            case GateKind::CZ:
                parts.push_back(synth_cz(g.qubits[0], g.qubits[1], n));
                break;
            case GateKind::SWAP:
                parts.push_back(synth_swap(g.qubits[0], g.qubits[1], n));
                break;
            default:
                // Every reachable operator is real; T, S, Sdag and Rz are not
                // real up to global phase.
                throw std::invalid_argument("gate '" + g.str() + "' is not supported by the rycnot ansatz");
        }
    }
    HeaSchedule schedule = parts.empty() ? HeaSchedule::zeros(HeaKind::RyCnot, wires) : merge_schedules(parts);
    DepthReport report;
    report.compiled_depth = schedule.depth();
    report.input_gate_counts = count_gates(circuit);
    report.closed_form_bound = depth_bound(HeaKind::RyCnot, report.input_gate_counts, n);
    report.ancilla_count = kAncillaCount;
    return CompileResult{std::move(schedule), std::move(report)};
}

}  // namespace heac::rycnot
