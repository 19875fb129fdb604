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

#include "heac/schedule.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace heac {

std::string_view kind_name(HeaKind kind) { return kind == HeaKind::RyRzCz ? "ryrzcz" : "rycnot"; }

HeaKind parse_kind(std::string_view name) {
    if (name == "ryrzcz") return HeaKind::RyRzCz;
    if (name == "rycnot") return HeaKind::RyCnot;
    throw std::invalid_argument("unknown ansatz kind '" + std::string(name) + "'");
}

HeaSchedule::HeaSchedule(HeaKind kind, int num_qubits, std::vector<RotationLayer> layers)
    : kind_(kind), num_qubits_(num_qubits), layers_(std::move(layers)) {
    if (num_qubits_ < 1) throw std::invalid_argument("schedule needs at least one qubit");
    if (layers_.empty()) throw std::invalid_argument("schedule needs at least one rotation layer");
    for (const RotationLayer &layer : layers_) {
        if (static_cast<int>(layer.size()) != num_qubits_) {
            throw std::invalid_argument("rotation layer width " + std::to_string(layer.size()) +
                                        " != qubit count " + std::to_string(num_qubits_));
        }
        if (kind_ == HeaKind::RyCnot) {
            for (const WireAngles &w : layer) {
                if (!w.z.is_zero()) throw std::invalid_argument("rycnot layer carries an Rz angle");
            }
        }
    }
}

HeaSchedule HeaSchedule::zeros(HeaKind kind, int num_qubits, int depth) {
    if (depth < 0) throw std::invalid_argument("negative depth");
    return HeaSchedule(kind, num_qubits,
                       std::vector<RotationLayer>(depth + 1, RotationLayer(std::max(num_qubits, 0))));
}

std::vector<Gate> ladder_gates(HeaKind kind, int n) {
    std::vector<Gate> out;
    if (kind == HeaKind::RyRzCz) {
        for (int first = 1; first <= 2; ++first) {
            for (int a = first; a + 1 <= n; a += 2) out.push_back(Gate::cz(a, a + 1));
        }
    } else {
        for (int top = n; top >= n - 1; --top) {
            for (int c = top; c - 1 >= 1; c -= 2) out.push_back(Gate::cnot(c, c - 1));
        }
    }
    return out;
}

Circuit schedule_to_circuit(const HeaSchedule &s) {
    const int n = s.num_qubits();
    const std::vector<Gate> ladder = ladder_gates(s.kind(), n);
    std::vector<Gate> gates;
    gates.reserve(s.layers().size() * (2 * n + ladder.size()));
    for (std::size_t i = 0; i < s.layers().size(); ++i) {
        if (i > 0) gates.insert(gates.end(), ladder.begin(), ladder.end());
        for (int q = 1; q <= n; ++q) {
            const WireAngles &w = s.layers()[i][q - 1];
            gates.push_back(Gate::ry(q, w.y));
            if (s.kind() == HeaKind::RyRzCz) gates.push_back(Gate::rz(q, w.z));
        }
    }
    return Circuit(n, std::move(gates));
}

HeaSchedule merge_schedules(std::span<const HeaSchedule> parts) {
    if (parts.empty()) throw std::invalid_argument("merge of an empty schedule list");
    const HeaKind kind = parts.front().kind();
    const int n = parts.front().num_qubits();
    for (const HeaSchedule &p : parts) {
        if (p.kind() != kind) throw std::invalid_argument("merge of mixed ansatz kinds");
        if (p.num_qubits() != n) throw std::invalid_argument("merge of mixed qubit counts");
    }
    std::vector<RotationLayer> layers = parts.front().layers();
    for (std::size_t j = 1; j < parts.size(); ++j) {
        const auto &next = parts[j].layers();
        if (kind == HeaKind::RyRzCz) {
            layers.emplace_back(n);
            layers.insert(layers.end(), next.begin(), next.end());
        } else {
            RotationLayer &joint = layers.back();
            for (int q = 0; q < n; ++q) joint[q].y += next.front()[q].y;
            layers.insert(layers.end(), next.begin() + 1, next.end());
        }
    }
    return HeaSchedule(kind, n, std::move(layers));
}

GateCounts count_gates(const Circuit &circuit) {
    GateCounts counts;
    for (const Gate &g : circuit.gates()) {
        std::string key(gate_name(g.kind));
        if (g.arity() == 2 && std::abs(g.qubits[0] - g.qubits[1]) == 1) key += "_nn";
        ++counts[key];
    }
    return counts;
}

namespace {

std::int64_t ryrzcz_cnot_bound(std::int64_t n) { return 192 * n * n - 16 * n - 122; }

std::int64_t rycnot_nn_bound(std::int64_t n) {
    return 16 * static_cast<std::int64_t>(std::bit_ceil(static_cast<std::uint64_t>(n + 4)));
}

std::int64_t rycnot_cnot_bound(std::int64_t n) { return 96 * n * n + 400 * n - 400; }

}  // namespace

std::int64_t gate_depth_bound(HeaKind kind, const std::string &gate, int num_qubits) {
    const std::int64_t n = num_qubits;
    if (kind == HeaKind::RyRzCz) {
        if (gate == "h" || gate == "t" || gate == "s" || gate == "sdg" || gate == "x" || gate == "ry" ||
            gate == "rz") {
            return 0;
        }
        if (gate == "cnot" || gate == "cnot_nn") return ryrzcz_cnot_bound(n);
        if (gate == "cz_nn") return 32 * n + 18;
        // Distant CZ is H.CNOT.H on the target: two extra junctions.
        if (gate == "cz") return ryrzcz_cnot_bound(n) + 4;
        if (gate == "swap_nn") return 3 * (32 * n + 22) + 4;
        if (gate == "swap") return 3 * ryrzcz_cnot_bound(n) + 4;
    } else {
        if (gate == "ry") return 0;
        // X and H each cost two adjacent CNOTs.
        if (gate == "x" || gate == "h") return 2 * rycnot_nn_bound(n);
        if (gate == "cnot_nn") return rycnot_nn_bound(n);
        if (gate == "cz_nn") return 5 * rycnot_nn_bound(n);
        if (gate == "cz") return rycnot_cnot_bound(n) + 4 * rycnot_nn_bound(n);
        if (gate == "cnot") return rycnot_cnot_bound(n);
        if (gate == "swap_nn") return 3 * rycnot_nn_bound(n);
        if (gate == "swap") return 3 * rycnot_cnot_bound(n);
    }
    throw std::invalid_argument("gate '" + gate + "' is not supported by the " + std::string(kind_name(kind)) +
                                " ansatz");
}

std::int64_t depth_bound(HeaKind kind, const GateCounts &counts, int num_qubits) {
    std::int64_t total = 0;
    std::int64_t pieces = 0;
    for (const auto &[gate, count] : counts) {
        if (count < 0) throw std::invalid_argument("negative gate count for '" + gate + "'");
        total += count * gate_depth_bound(kind, gate, num_qubits);
        pieces += count;
    }
    if (kind == HeaKind::RyRzCz && pieces > 1) total += 2 * (pieces - 1);
    return total;
}

}  // namespace heac
