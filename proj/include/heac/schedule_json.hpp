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

#ifndef HEAC_SCHEDULE_JSON_HPP
#define HEAC_SCHEDULE_JSON_HPP

#include <string>
#include <string_view>

#include "heac/schedule.hpp"

namespace heac {

/// Canonical form: {"kind","qubits","depth","layers"} in that order. Angles are
/// [num, den] in units of pi; RyRzCz wires are [[y], [z]] pairs.
std::string schedule_to_json(const HeaSchedule &schedule, int indent = -1);

/// Inverse of schedule_to_json. Throws std::invalid_argument on malformed input
/// or when "depth" disagrees with the layer count.
HeaSchedule schedule_from_json(std::string_view text);

/// DepthReport as a JSON object.
std::string report_to_json(const DepthReport &report, int indent = -1);

}  // namespace heac

#endif
