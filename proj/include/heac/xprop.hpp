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

#ifndef HEAC_XPROP_HPP
#define HEAC_XPROP_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "heac/circuit.hpp"

namespace heac {

using BigInt = boost::multiprecision::cpp_int;

/// Time order of one period in the word repeated k times.
enum class XLadderWord {
    /// X on the top wire, then the inverse ladder. This is the word whose
    /// counts follow the closed form C(k + floor(j/2), j).
    XThenInverseLadder,
    /// Ladder, then X on the top wire. Counts follow C(k + floor((j-1)/2), j).
    LadderThenX,
};

/// X gates pushed to the end of the word. counts[q-1] is the number of X
/// gates that land on qubit q; ladders_crossed is the propagation frontier.
struct XPropagationState {
    std::vector<BigInt> counts;
    int ladders_crossed = 0;
};

/// Appends one period of `word` to a state whose X gates already sit at the end.
/// Counts never decrease.
void advance(XPropagationState &state, XLadderWord word);

inline constexpr std::int64_t kDefaultXPropWorkCap = 4'000'000;

/// Final X count on each qubit q_1..q_N after propagating every X of the
/// k-period word through the remaining CNOTs. X on a control spawns an X on
/// the target; X on a target passes unchanged.
/// Throws std::invalid_argument for N < 2, k < 1 or N*k above work_cap.
std::vector<BigInt> count_x_bruteforce(int n, int k, XLadderWord word = XLadderWord::XThenInverseLadder,
                                       std::int64_t work_cap = kDefaultXPropWorkCap);

/// C(k + floor(j/2), j), exact. Throws std::invalid_argument for k < 1 or j < 1.
BigInt count_x_formula(std::int64_t k, std::int64_t j);

/// Index j of count_x_formula counts wires from the top: j = 1 is qubit N.
constexpr int xprop_wire_for_index(int n, int j) { return n + 1 - j; }

/// Exact binomial coefficient; zero when b > a.
BigInt binomial(std::int64_t a, std::int64_t b);

/// C(a, b) mod 2 by Lucas: odd iff every set bit of b is set in a.
int lucas_parity(std::uint64_t a, std::uint64_t b);

/// The k-period word as a gate list on N wires, for dense simulation.
Circuit x_ladder_word(int n, int k, XLadderWord word);

}  // namespace heac

#endif
