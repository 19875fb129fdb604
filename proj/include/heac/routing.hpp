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

#ifndef HEAC_ROUTING_HPP
#define HEAC_ROUTING_HPP

#include <array>
#include <vector>

namespace heac {

/// Adjacent CNOTs realizing CNOT(control -> target). The target is swapped
/// toward the control, the adjacent CNOT is applied, and the swaps are undone.
/// Each swap is three CNOTs, so there are always 6|control - target| - 5
/// entries, each {control, target}. Throws std::invalid_argument if equal.
std::vector<std::array<int, 2>> route_cnot(int control, int target);

}  // namespace heac

#endif
