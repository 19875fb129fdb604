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

#include <gtest/gtest.h>

#include <random>

#include "heac/equivalence.hpp"
#include "heac/ryrzcz.hpp"
#include "heac/unitary.hpp"
#include "oracles.hpp"

using namespace heac;
using namespace heac::ryrzcz;

namespace {

UnitaryMatrix sim(const HeaSchedule &s) { return circuit_unitary(schedule_to_circuit(s)); }

UnitaryMatrix embedded(GateKind kind, int q, int n) {
    return oracle::unitary(Circuit(n, {Gate::single(kind, q)}));
}

}  // namespace

TEST(SynthSingle, HadamardAngles) {
    HeaSchedule s = synth_single(Gate::h(2), 3);
    EXPECT_EQ(s.depth(), 0);
    EXPECT_EQ(s.layer(0)[1], (WireAngles{Angle(-1, 2), Angle(1)}));
    EXPECT_EQ(s.layer(0)[0], WireAngles{});
    EXPECT_EQ(s.layer(0)[2], WireAngles{});
}

TEST(SynthSingle, TAngles) {
    EXPECT_EQ(synth_single(Gate::t(1), 1).layer(0)[0], (WireAngles{Angle(0), Angle(1, 4)}));
}

TEST(SynthSingle, MatchesTextbookUpToPhase) {
    for (GateKind k : {GateKind::H, GateKind::T, GateKind::S, GateKind::Sdag, GateKind::X}) {
        for (int n = 1; n <= 3; ++n) {
            for (int q = 1; q <= n; ++q) {
                EXPECT_LE(phase_aligned_distance(sim(synth_single(Gate::single(k, q), n)), embedded(k, q, n)), 1e-12);
            }
        }
    }
    HeaSchedule ry = synth_single(Gate::ry(1, Angle(1, 3)), 1);
    EXPECT_LE(phase_aligned_distance(sim(ry), UnitaryMatrix(oracle::textbook(GateKind::Ry, oracle::kPi / 3))), 1e-12);
}

TEST(SynthSingle, ZeroScheduleIsIdentity) {
    UnitaryMatrix u = sim(HeaSchedule::zeros(HeaKind::RyRzCz, 3));
    EXPECT_LT((u - UnitaryMatrix::Identity(8, 8)).norm(), 1e-15);
}

TEST(SynthSingle, RejectsTwoQubitGate) {
    EXPECT_THROW(synth_single(Gate::cnot(1, 2), 2), std::invalid_argument);
    EXPECT_THROW(synth_single(Gate::h(3), 2), std::invalid_argument);
}

TEST(SynthLayer, SThenHAngles) {
    // H followed by S in time is Rz(3pi/2) Ry(-pi/2).
    std::vector<Gate> sh = {Gate::h(1), Gate::s(1)};
    HeaSchedule s = synth_layer(sh, 1);
    EXPECT_EQ(s.layer(0)[0], (WireAngles{Angle(-1, 2), Angle(3, 2)}));
    UnitaryMatrix want = oracle::unitary(Circuit(1, sh));
    EXPECT_LE(phase_aligned_distance(sim(s), want), 1e-12);
}

TEST(SynthLayer, RejectsShapesBeyondOneLayer) {
    std::vector<Gate> zyz = {Gate::s(1), Gate::h(1)};
    EXPECT_THROW(synth_layer(zyz, 1), std::invalid_argument);
    std::vector<Gate> yzy = {Gate::ry(1, Angle(1, 3)), Gate::rz(1, Angle(1, 3)), Gate::ry(1, Angle(1, 3))};
    EXPECT_THROW(synth_layer(yzy, 1), std::invalid_argument);
    std::vector<Gate> cancel = {Gate::h(1), Gate::h(1)};
    EXPECT_THROW(synth_layer(cancel, 1), std::invalid_argument);
    std::vector<Gate> merged = {Gate::ry(1, Angle(1, 3)), Gate::ry(1, Angle(-1, 3)), Gate::t(1), Gate::t(1)};
    EXPECT_EQ(synth_layer(merged, 1).layer(0)[0], (WireAngles{Angle(0), Angle(1, 2)}));
}

TEST(SynthDk, FirstMemberMatchesExplicitGateList) {
    // D_1 spelled out gate by gate in time order.
    std::vector<Gate> g = {Gate::sdag(1), Gate::h(1)};
    oracle::cz_ladder(g, 2);
    g.insert(g.end(), {Gate::h(1), Gate::s(1), Gate::h(1)});
    oracle::cz_ladder(g, 2);
    g.insert(g.end(), {Gate::h(1), Gate::sdag(2), Gate::h(2)});
    const UnitaryMatrix explicit_list = oracle::unitary(Circuit(2, g));
    EXPECT_LE(oracle::aligned(explicit_list, oracle::unitary(oracle::dk_pattern(1, 2))), 1e-12);

    HeaSchedule d1 = synth_dk({1, 2, false});
    EXPECT_EQ(d1.depth(), 16);
    EXPECT_LE(phase_aligned_distance(sim(d1), explicit_list), 1e-10);
}

TEST(SynthDk, MatchesPatternAndDepth) {
    for (int k = 1; k <= 5; ++k) {
        for (int n = k + 1; n <= 7; ++n) {
            const UnitaryMatrix want = circuit_unitary(oracle::dk_pattern(k, n));
            HeaSchedule d = synth_dk({k, n, false});
            HeaSchedule dd = synth_dk({k, n, true});
            EXPECT_EQ(d.depth(), 16 * k);
            EXPECT_EQ(dd.depth(), 16 * k);
            EXPECT_LE(phase_aligned_distance(sim(d), want), 1e-10) << "k=" << k << " N=" << n;
            EXPECT_LE(phase_aligned_distance(sim(dd), want.adjoint()), 1e-10) << "k=" << k << " N=" << n;
        }
    }
    EXPECT_EQ(synth_dk({3, 4, false}).depth(), 48);
}

TEST(SynthDk, DaggerUndoes) {
    std::vector<HeaSchedule> parts = {synth_dk({1, 2, false}), synth_dk({1, 2, true})};
    UnitaryMatrix u = sim(merge_schedules(parts));
    EXPECT_LE(phase_aligned_distance(u, UnitaryMatrix::Identity(4, 4)), 1e-10);
}

TEST(SynthDk, InvalidParams) {
    EXPECT_THROW(synth_dk({0, 3, false}), std::invalid_argument);
    EXPECT_THROW(synth_dk({3, 3, false}), std::invalid_argument);
}

TEST(SynthNnCz, TwoWires) {
    UnitaryMatrix want = UnitaryMatrix::Identity(4, 4);
    want(3, 3) = -1;
    EXPECT_LE(phase_aligned_distance(sim(synth_nn_cz(1, 2)), want), 1e-10);
}

TEST(SynthNnCz, AllPositionsUpToSixWires) {
    for (int n = 2; n <= 6; ++n) {
        for (int k = 1; k < n; ++k) {
            HeaSchedule s = synth_nn_cz(k, n);
            const UnitaryMatrix want = oracle::unitary(Circuit(n, {Gate::cz(k, k + 1)}));
            EXPECT_LE(phase_aligned_distance(sim(s), want), 1e-10) << "k=" << k << " N=" << n;
            EXPECT_EQ(s.depth(), 32 * k - 14) << "k=" << k;
            EXPECT_LE(s.depth(), 32 * k + 18);
        }
    }
}

TEST(SynthNnCz, SymmetricInItsWires) {
    for (int n = 2; n <= 5; ++n) {
        for (int k = 1; k < n; ++k) {
            const UnitaryMatrix u = sim(synth_nn_cz(k, n));
            const UnitaryMatrix sw = oracle::unitary(Circuit(n, {Gate::swap(k, k + 1)}));
            EXPECT_LE(phase_aligned_distance(sw * u * sw, u), 1e-10);
        }
    }
}

TEST(SynthNnCz, IndexRange) {
    EXPECT_THROW(synth_nn_cz(0, 3), std::invalid_argument);
    EXPECT_THROW(synth_nn_cz(3, 3), std::invalid_argument);
}

TEST(Routing, CnotCountIsSixDMinusFive) {
    EXPECT_EQ(route_cnot(1, 3).size(), 7u);
    for (int c = 1; c <= 9; ++c) {
        for (int t = 1; t <= 9; ++t) {
            if (c == t) continue;
            auto r = route_cnot(c, t);
            EXPECT_EQ(static_cast<int>(r.size()), 6 * std::abs(c - t) - 5);
            std::vector<Gate> g;
            for (auto [a, b] : r) {
                EXPECT_EQ(std::abs(a - b), 1);
                g.push_back(Gate::cnot(a, b));
            }
            if (std::max(c, t) <= 6) {
                const int n = std::max(c, t);
                EXPECT_LT((oracle::unitary(Circuit(n, g)) - oracle::unitary(Circuit(n, {Gate::cnot(c, t)}))).norm(),
                          1e-12);
            }
        }
    }
    EXPECT_THROW(route_cnot(2, 2), std::invalid_argument);
}

TEST(SynthCnot, Examples) {
    EXPECT_LE(phase_aligned_distance(sim(synth_cnot(2, 1, 2)), oracle::unitary(Circuit(2, {Gate::cnot(2, 1)}))),
              1e-10);
    EXPECT_LE(phase_aligned_distance(sim(synth_cnot(3, 1, 4)), oracle::unitary(Circuit(4, {Gate::cnot(3, 1)}))),
              1e-10);
    EXPECT_THROW(synth_cnot(1, 1, 2), std::invalid_argument);
    EXPECT_THROW(synth_cnot(1, 3, 2), std::invalid_argument);
}

TEST(SynthCnot, AllPairsUpToFourWires) {
    for (int n = 2; n <= 4; ++n) {
        for (int c = 1; c <= n; ++c) {
            for (int t = 1; t <= n; ++t) {
                if (c == t) continue;
                EXPECT_LE(phase_aligned_distance(sim(synth_cnot(c, t, n)),
                                                 oracle::unitary(Circuit(n, {Gate::cnot(c, t)}))),
                          1e-10);
            }
        }
    }
}

TEST(SynthCnot, DepthWithinBound) {
    for (int n = 2; n <= 12; ++n) {
        for (int c = 1; c <= n; ++c) {
            for (int t = 1; t <= n; ++t) {
                if (c == t) continue;
                EXPECT_LE(synth_cnot(c, t, n).depth(), 192 * n * n - 16 * n - 122);
                EXPECT_LE(synth_cz(c, t, n).depth(), gate_depth_bound(HeaKind::RyRzCz, "cz", n));
                EXPECT_LE(synth_swap(c, t, n).depth(), gate_depth_bound(HeaKind::RyRzCz, "swap", n));
            }
        }
    }
}

TEST(SynthCzSwap, Unitaries) {
    for (int n = 2; n <= 4; ++n) {
        for (int a = 1; a <= n; ++a) {
            for (int b = 1; b <= n; ++b) {
                if (a == b) continue;
                EXPECT_LE(phase_aligned_distance(sim(synth_cz(a, b, n)), oracle::unitary(Circuit(n, {Gate::cz(a, b)}))),
                          1e-10);
                EXPECT_LE(phase_aligned_distance(sim(synth_swap(a, b, n)),
                                                 oracle::unitary(Circuit(n, {Gate::swap(a, b)}))),
                          1e-10);
            }
        }
    }
}

TEST(CompileRyRzCz, Empty) {
    CompileResult r = compile_ryrzcz(Circuit(3));
    EXPECT_EQ(r.schedule, HeaSchedule::zeros(HeaKind::RyRzCz, 3));
    EXPECT_EQ(r.report.compiled_depth, 0);
    EXPECT_EQ(r.report.closed_form_bound, 0);
}

TEST(CompileRyRzCz, HadamardSquared) {
    CompileResult r = compile_ryrzcz(Circuit(1, {Gate::h(1), Gate::h(1)}));
    EXPECT_LE(phase_aligned_distance(sim(r.schedule), UnitaryMatrix::Identity(2, 2)), 1e-10);
    EXPECT_EQ(r.report.compiled_depth, 2);
}

TEST(CompileRyRzCz, RandomCircuitsAllGateKinds) {
    std::mt19937_64 rng(20260101);
    const std::vector<GateKind> kinds = {GateKind::H,  GateKind::T,  GateKind::S,    GateKind::Sdag, GateKind::X,
                                         GateKind::Ry, GateKind::Rz, GateKind::CNOT, GateKind::CZ,   GateKind::SWAP};
    for (int t = 0; t < 40; ++t) {
        const int n = 1 + t % 4;
        Circuit c = oracle::random_circuit(rng, n, 6, kinds);
        CompileResult r = compile_ryrzcz(c);
        EXPECT_LE(phase_aligned_distance(sim(r.schedule), oracle::unitary(c)), 1e-9) << format_circuit(c);
        EXPECT_TRUE(r.report.within_bound());
        EXPECT_EQ(r.report.ancilla_count, 0);
        EXPECT_EQ(r.schedule.num_qubits(), n);
    }
}

TEST(CompileRyRzCz, SixGateHTCnotOnThreeWires) {
    std::mt19937_64 rng(6);
    Circuit c = oracle::random_circuit(rng, 3, 6, {GateKind::H, GateKind::T, GateKind::CNOT});
    EXPECT_LE(phase_aligned_distance(sim(compile_ryrzcz(c).schedule), oracle::unitary(c)), 1e-9);
}

TEST(CzLadder, Involution) {
    for (int n = 2; n <= 8; ++n) {
        UnitaryMatrix u = sim(HeaSchedule::zeros(HeaKind::RyRzCz, n, 2));
        EXPECT_LT((u - UnitaryMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff(), 1e-12);
    }
}
