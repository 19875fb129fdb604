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

#include "heac/routing.hpp"

#include <algorithm>
#include <stdexcept>

namespace heac {

std::vector<std::array<int, 2>> route_cnot(int control, int target) {
    if (control == target) throw std::invalid_argument("CNOT needs distinct qubits");
    std::vector<std::array<int, 2>> swaps;
    const int step = control > target ? 1 : -1;
    for (int w = target; w + step != control; w += step) {
        const int lo = std::min(w, w + step);
        const int hi = std::max(w, w + step);
        swaps.push_back({lo, hi});
    }
    auto emit_swap = [](std::vector<std::array<int, 2>> &out, const std::array<int, 2> &s) {
        out.push_back({s[0], s[1]});
        out.push_back({s[1], s[0]});
        out.push_back({s[0], s[1]});
    };
    std::vector<std::array<int, 2>> out;
    for (const auto &s : swaps) emit_swap(out, s);
    out.push_back({control, control - step});
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) emit_swap(out, *it);
    return out;
}

}  // namespace heac
