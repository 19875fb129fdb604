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

#include "heac/xprop.hpp"

#include <stdexcept>
#include <string>

#include "heac/schedule.hpp"

namespace heac {

namespace {

std::vector<Gate> inverse_ladder(int n) {
    std::vector<Gate> ladder = ladder_gates(HeaKind::RyCnot, n);
    return {ladder.rbegin(), ladder.rend()};
}

void push_through(std::vector<BigInt> &counts, const std::vector<Gate> &cnots) {
    for (const Gate &g : cnots) counts[g.qubits[1] - 1] += counts[g.qubits[0] - 1];
}

}  // namespace

void advance(XPropagationState &state, XLadderWord word) {
    const int n = static_cast<int>(state.counts.size());
    if (word == XLadderWord::XThenInverseLadder) {
        state.counts[n - 1] += 1;
        push_through(state.counts, inverse_ladder(n));
    } else {
        push_through(state.counts, ladder_gates(HeaKind::RyCnot, n));
        state.counts[n - 1] += 1;
    }
    ++state.ladders_crossed;
}

std::vector<BigInt> count_x_bruteforce(int n, int k, XLadderWord word, std::int64_t work_cap) {
    if (n < 2) throw std::invalid_argument("count_x_bruteforce needs N >= 2");
    if (k < 1) throw std::invalid_argument("count_x_bruteforce needs k >= 1");
    if (static_cast<std::int64_t>(n) * k > work_cap) {
        throw std::invalid_argument("N*k = " + std::to_string(static_cast<std::int64_t>(n) * k) +
                                    " exceeds work cap " + std::to_string(work_cap));
    }
    XPropagationState state{std::vector<BigInt>(n), 0};
    for (int i = 0; i < k; ++i) advance(state, word);
    return state.counts;
}

BigInt binomial(std::int64_t a, std::int64_t b) {
    if (b < 0 || a < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt c = 1;
    for (std::int64_t i = 0; i < b; ++i) {
        c *= a - i;
        c /= i + 1;
    }
    return c;
}

BigInt count_x_formula(std::int64_t k, std::int64_t j) {
    if (k < 1 || j < 1) throw std::invalid_argument("count_x_formula needs k >= 1 and j >= 1");
    return binomial(k + j / 2, j);
}

int lucas_parity(std::uint64_t a, std::uint64_t b) { return (b & ~a) == 0 ? 1 : 0; }

Circuit x_ladder_word(int n, int k, XLadderWord word) {
    const std::vector<Gate> forward = ladder_gates(HeaKind::RyCnot, n);
    const std::vector<Gate> backward = inverse_ladder(n);
    std::vector<Gate> gates;
    for (int i = 0; i < k; ++i) {
        if (word == XLadderWord::XThenInverseLadder) {
            gates.push_back(Gate::x(n));
            gates.insert(gates.end(), backward.begin(), backward.end());
        } else {
            gates.insert(gates.end(), forward.begin(), forward.end());
            gates.push_back(Gate::x(n));
        }
    }
    return Circuit(n, std::move(gates));
}

}  // namespace heac
