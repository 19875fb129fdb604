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

#include "heac/ryrzcz.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace heac::ryrzcz {

namespace {

// A building block of the D_k family: either one layer of single-qubit gates
// (in time order) or a bare ladder between two zero layers.
struct Fragment {
    bool ladder = false;
    std::vector<Gate> gates;
};

using Fragments = std::vector<Fragment>;

Fragment layer(std::vector<Gate> gates) { return Fragment{false, std::move(gates)}; }
Fragment ladder() { return Fragment{true, {}}; }

// A schedule plus Rz angles that act before it. Rz commutes with CZ, so the
// prefix can ride in the z slot of the zero layer that opens a junction.
struct Piece {
    HeaSchedule body;
    std::vector<Angle> pre_z;
};

struct Rot {
    bool y;
    Angle angle;
};

void append_rotations(std::vector<Rot> &out, const Gate &g) {
    switch (g.kind) {
        case GateKind::H:
            out.push_back({true, Angle(-1, 2)});
            out.push_back({false, Angle(1)});
            break;
        case GateKind::T:
            out.push_back({false, Angle(1, 4)});
            break;
        case GateKind::S:
            out.push_back({false, Angle(1, 2)});
            break;
        case GateKind::Sdag:
            out.push_back({false, Angle(-1, 2)});
            break;
        case GateKind::X:
            // Rz(pi) Ry(pi) = iX.
            out.push_back({true, Angle(1)});
            out.push_back({false, Angle(1)});
            break;
        case GateKind::Ry:
            out.push_back({true, g.angle});
            break;
        case GateKind::Rz:
            out.push_back({false, g.angle});
            break;
        default:
            throw std::invalid_argument("'" + g.str() + "' is not a single-qubit gate");
    }
}

Piece lower_layer(std::span<const Gate> gates, int n) {
    std::vector<std::vector<Rot>> per_wire(n);
    for (const Gate &g : gates) {
        if (g.arity() != 1 || g.qubits[0] > n) {
            throw std::invalid_argument("'" + g.str() + "' cannot join a rotation layer on " + std::to_string(n) +
                                        " qubits");
        }
        append_rotations(per_wire[g.qubits[0] - 1], g);
    }
    RotationLayer body(n);
    std::vector<Angle> pre(n);
    for (int q = 0; q < n; ++q) {
        std::vector<Rot> merged;
        for (const Rot &r : per_wire[q]) {
            if (!merged.empty() && merged.back().y == r.y) {
                merged.back().angle += r.angle;
                if (merged.back().angle.is_zero()) merged.pop_back();
            } else if (!r.angle.is_zero()) {
                merged.push_back(r);
            }
        }
        std::size_t i = 0;
        if (merged.size() >= 2 && !merged[0].y && merged[1].y) pre[q] = merged[i++].angle;
        if (i < merged.size() && merged[i].y) body[q].y = merged[i++].angle;
        if (i < merged.size() && !merged[i].y) body[q].z = merged[i++].angle;
        if (i != merged.size()) {
            throw std::invalid_argument("gates on qubit " + std::to_string(q + 1) +
                                        " do not reduce to Rz Ry Rz");
        }
    }
    return Piece{HeaSchedule(HeaKind::RyRzCz, n, {std::move(body)}), std::move(pre)};
}

Piece lower(const Fragment &f, int n) {
    if (f.ladder) return Piece{HeaSchedule::zeros(HeaKind::RyRzCz, n, 1), std::vector<Angle>(n)};
    return lower_layer(f.gates, n);
}

// Merge with the RyRzCz junction rule, folding each prefix into the zero layer
// that precedes its piece.
HeaSchedule join(const Fragments &fragments, int n) {
    if (fragments.empty()) return HeaSchedule::zeros(HeaKind::RyRzCz, n);
    std::vector<RotationLayer> layers;
    for (std::size_t j = 0; j < fragments.size(); ++j) {
        Piece p = lower(fragments[j], n);
        if (j == 0) {
            for (const Angle &a : p.pre_z) {
                if (!a.is_zero()) throw std::logic_error("leading fragment carries an Rz prefix");
            }
        } else {
            RotationLayer bridge(n);
            for (int q = 0; q < n; ++q) bridge[q].z = p.pre_z[q];
            layers.push_back(std::move(bridge));
        }
        layers.insert(layers.end(), p.body.layers().begin(), p.body.layers().end());
    }
    return HeaSchedule(HeaKind::RyRzCz, n, std::move(layers));
}

Gate dagger(const Gate &g) {
    switch (g.kind) {
        case GateKind::H:
        case GateKind::X:
            return g;
        case GateKind::S:
            return Gate::sdag(g.qubits[0]);
        case GateKind::Sdag:
            return Gate::s(g.qubits[0]);
        case GateKind::Ry:
        case GateKind::Rz:
            return Gate::rotation(g.kind, g.qubits[0], -g.angle);
        default:
            throw std::logic_error("no fragment-level inverse for '" + g.str() + "'");
    }
}

Fragments dagger(const Fragments &fs) {
    Fragments out;
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
        Fragment f{it->ladder, {}};
        for (auto g = it->gates.rbegin(); g != it->gates.rend(); ++g) f.gates.push_back(dagger(*g));
        out.push_back(std::move(f));
    }
    return out;
}

// D_k in time order: 7k + 1 fragments, 2k of them ladders, so the joined
// depth is 2(7k + 1) - 2 + 2k = 16k. D_0 is the identity.
Fragments dk_fragments(int k) {
    if (k == 0) return {layer({})};
    Fragments f = {layer({Gate::sdag(1)}),
                   layer({Gate::h(1)}),
                   ladder(),
                   layer({Gate::h(1), Gate::s(1)}),
                   layer({Gate::h(1)}),
                   ladder(),
                   layer({Gate::h(1), Gate::sdag(2)}),
                   layer({Gate::h(2)})};
    // Grow from D_{m-2} (on m-1 wires) to D_{m-1} (on m wires).
    for (int m = 3; m <= k + 1; ++m) {
        const int a = m - 1;
        const int b = m;
        Fragments next;
        if (m % 2 == 0) {
            next.push_back(layer({Gate::sdag(a)}));
            next.insert(next.end(), f.begin(), f.end());
            next.push_back(ladder());
            next.push_back(layer({Gate::h(a), Gate::s(a)}));
            next.push_back(layer({Gate::h(a)}));
            next.push_back(ladder());
            next.push_back(layer({Gate::sdag(b)}));
            next.push_back(layer({Gate::h(b)}));
        } else {
            next.push_back(layer({Gate::h(b)}));
            next.push_back(layer({Gate::s(b)}));
            next.push_back(ladder());
            next.push_back(layer({Gate::h(a)}));
            next.push_back(layer({Gate::sdag(a), Gate::h(a)}));
            next.push_back(ladder());
            next.insert(next.end(), f.begin(), f.end());
            next.push_back(layer({Gate::s(a)}));
        }
        f = std::move(next);
    }
    return f;
}

void check_pair(int a, int b, int n) {
    if (a < 1 || b < 1 || a > n || b > n) {
        throw std::invalid_argument("qubits (" + std::to_string(a) + ", " + std::to_string(b) + ") outside 1.." +
                                    std::to_string(n));
    }
    if (a == b) throw std::invalid_argument("two-qubit gate needs distinct qubits, got " + std::to_string(a));
}

// CZ(k, k+1) = D_k D_{k-1}^dag H_{k+1} for even k and H_{k+1} D_{k-1}^dag D_k for
// odd k (operator order). H_{k+1} shares a layer with the outer fragment of
// D_{k-1}^dag, which never touches wire k+1.
Fragments nn_cz_fragments(int k) {
    Fragments inner = dagger(dk_fragments(k - 1));
    Fragments outer = dk_fragments(k);
    Fragments out;
    if (k % 2 == 0) {
        inner.front().gates.insert(inner.front().gates.begin(), Gate::h(k + 1));
        out = std::move(inner);
        out.insert(out.end(), outer.begin(), outer.end());
    } else {
        inner.back().gates.push_back(Gate::h(k + 1));
        out = std::move(outer);
        out.insert(out.end(), inner.begin(), inner.end());
    }
    return out;
}

Fragments nn_cnot_fragments(int control, int target) {
    Fragments out = {layer({Gate::h(target)})};
    Fragments cz = nn_cz_fragments(std::min(control, target));
    out.insert(out.end(), cz.begin(), cz.end());
    out.push_back(layer({Gate::h(target)}));
    return out;
}

Fragments cnot_fragments(int control, int target) {
    Fragments out;
    for (const auto &[c, t] : heac::route_cnot(control, target)) {
        Fragments part = nn_cnot_fragments(c, t);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace

HeaSchedule synth_single(const Gate &gate, int num_qubits) {
    if (gate.arity() != 1) throw std::invalid_argument("'" + gate.str() + "' is not a single-qubit gate");
    if (gate.qubits[0] > num_qubits) {
        throw std::invalid_argument("'" + gate.str() + "' outside " + std::to_string(num_qubits) + " qubits");
    }
    return synth_layer(std::span<const Gate>(&gate, 1), num_qubits);
}

HeaSchedule synth_layer(std::span<const Gate> gates, int num_qubits) {
    Piece p = lower_layer(gates, num_qubits);
    for (int q = 0; q < num_qubits; ++q) {
        if (!p.pre_z[q].is_zero()) {
            throw std::invalid_argument("gates on qubit " + std::to_string(q + 1) +
                                        " need an Rz before the Ry of a single layer");
        }
    }
    return p.body;
}

HeaSchedule synth_dk(const DkParams &params) {
    if (params.k < 1) throw std::invalid_argument("D_k needs k >= 1, got " + std::to_string(params.k));
    if (params.k + 1 > params.num_qubits) {
        throw std::invalid_argument("D_" + std::to_string(params.k) + " needs " + std::to_string(params.k + 1) +
                                    " qubits, have " + std::to_string(params.num_qubits));
    }
    Fragments f = dk_fragments(params.k);
    return join(params.dagger ? dagger(f) : f, params.num_qubits);
}

HeaSchedule synth_nn_cz(int k, int num_qubits) {
    if (k < 1 || k >= num_qubits) {
        throw std::invalid_argument("adjacent CZ index k=" + std::to_string(k) + " needs 1 <= k < " +
                                    std::to_string(num_qubits));
    }
    return join(nn_cz_fragments(k), num_qubits);
}

HeaSchedule synth_nn_cnot(int control, int target, int num_qubits) {
    check_pair(control, target, num_qubits);
    if (std::abs(control - target) != 1) throw std::invalid_argument("synth_nn_cnot needs adjacent qubits");
    return join(nn_cnot_fragments(control, target), num_qubits);
}

HeaSchedule synth_cnot(int control, int target, int num_qubits) {
    check_pair(control, target, num_qubits);
    return join(cnot_fragments(control, target), num_qubits);
}

HeaSchedule synth_cz(int a, int b, int num_qubits) {
    check_pair(a, b, num_qubits);
    if (std::abs(a - b) == 1) return synth_nn_cz(std::min(a, b), num_qubits);
    Fragments out = {layer({Gate::h(b)})};
    Fragments mid = cnot_fragments(a, b);
    out.insert(out.end(), mid.begin(), mid.end());
    out.push_back(layer({Gate::h(b)}));
    return join(out, num_qubits);
}

HeaSchedule synth_swap(int a, int b, int num_qubits) {
    check_pair(a, b, num_qubits);
    Fragments out;
    for (const auto &[c, t] : {std::array<int, 2>{a, b}, {b, a}, {a, b}}) {
        Fragments part = cnot_fragments(c, t);
        out.insert(out.end(), part.begin(), part.end());
    }
    return join(out, num_qubits);
}

CompileResult compile_ryrzcz(const Circuit &circuit) {
    const int n = circuit.num_qubits();
    std::vector<HeaSchedule> parts;
    parts.reserve(circuit.size());
    for (const Gate &g : circuit.gates()) {
        switch (g.kind) {
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
                parts.push_back(synth_single(g, n));
        }
    }
    HeaSchedule schedule = parts.empty() ? HeaSchedule::zeros(HeaKind::RyRzCz, n) : merge_schedules(parts);
    DepthReport report;
    report.compiled_depth = schedule.depth();
    report.input_gate_counts = count_gates(circuit);
    report.closed_form_bound = depth_bound(HeaKind::RyRzCz, report.input_gate_counts, n);
    report.ancilla_count = 0;
    return CompileResult{std::move(schedule), std::move(report)};
}

}  // namespace heac::ryrzcz
