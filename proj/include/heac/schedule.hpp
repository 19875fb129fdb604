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

#ifndef HEAC_SCHEDULE_HPP
#define HEAC_SCHEDULE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "heac/angle.hpp"
#include "heac/circuit.hpp"

namespace heac {

enum class HeaKind { RyRzCz, RyCnot };

std::string_view kind_name(HeaKind kind);  // "ryrzcz" or "rycnot"
HeaKind parse_kind(std::string_view name);

/// Angles applied to one wire inside a rotation layer: Ry first, then Rz.
/// RyCnot schedules keep z at zero.
struct WireAngles {
    Angle y;
    Angle z;
    bool operator==(const WireAngles &other) const = default;
};

/// One rotation layer; entry q-1 belongs to qubit q.
using RotationLayer = std::vector<WireAngles>;

/// Parameters of a hardware-efficient ansatz of depth M: M+1 rotation layers
/// with one entangling ladder between each consecutive pair.
class HeaSchedule {
   public:
    /// Throws std::invalid_argument when layers is empty, a layer has the wrong
    /// width, or an RyCnot layer carries a nonzero z angle.
    HeaSchedule(HeaKind kind, int num_qubits, std::vector<RotationLayer> layers);

    /// All-zero schedule of the given depth.
    static HeaSchedule zeros(HeaKind kind, int num_qubits, int depth = 0);

    HeaKind kind() const { return kind_; }
    int num_qubits() const { return num_qubits_; }
    int depth() const { return static_cast<int>(layers_.size()) - 1; }
    const std::vector<RotationLayer> &layers() const { return layers_; }
    const RotationLayer &layer(int i) const { return layers_.at(i); }

    bool operator==(const HeaSchedule &other) const = default;

   private:
    HeaKind kind_;
    int num_qubits_;
    std::vector<RotationLayer> layers_;
};

/// The fixed entangler as gates. RyRzCz: CZ on (1,2),(3,4),... then (2,3),(4,5),...
/// RyCnot: CNOT(N->N-1),(N-2->N-3),... then (N-1->N-2),(N-3->N-4),...
std::vector<Gate> ladder_gates(HeaKind kind, int num_qubits);

/// Layer 0, then for each further layer the ladder followed by that layer.
Circuit schedule_to_circuit(const HeaSchedule &schedule);

/// One schedule equal to applying `parts` in order.
/// RyRzCz joins parts through a zero layer and two ladders (ladder^2 = I), so
/// depth = 2d - 2 + sum M_j. RyCnot adds the boundary Ry angles, so depth = sum M_j.
/// Throws std::invalid_argument on an empty list or a kind/width mismatch.
HeaSchedule merge_schedules(std::span<const HeaSchedule> parts);

/// Gate multiset keyed by name. Two-qubit gates on adjacent wires use the
/// "_nn" suffix ("cnot_nn", "cz_nn", "swap_nn").
using GateCounts = std::map<std::string, std::int64_t>;

GateCounts count_gates(const Circuit &circuit);

/// Closed-form worst-case depth for compiling the multiset on N data qubits.
/// Throws std::invalid_argument for a gate name the kind does not support.
std::int64_t depth_bound(HeaKind kind, const GateCounts &counts, int num_qubits);

/// Worst-case depth of a single gate of that name, without merge overhead.
std::int64_t gate_depth_bound(HeaKind kind, const std::string &gate, int num_qubits);

struct DepthReport {
    std::int64_t compiled_depth = 0;
    std::int64_t closed_form_bound = 0;
    GateCounts input_gate_counts;
    int ancilla_count = 0;

    /// compiled_depth <= closed_form_bound. The compilers never fail on a violation;
    /// they surface it here.
    bool within_bound() const { return compiled_depth <= closed_form_bound; }
};

struct CompileResult {
    HeaSchedule schedule;
    DepthReport report;
};

}  // namespace heac

#endif
