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

#ifndef HEAC_EQUIVALENCE_HPP
#define HEAC_EQUIVALENCE_HPP

#include "heac/unitary.hpp"

namespace heac {

/// min over phi of ||U - e^{i phi} V||_F, with phi taken from the largest
/// magnitude entry of V^dagger U. Zero iff U and V agree up to global phase.
/// Throws std::invalid_argument on a shape mismatch.
double phase_aligned_distance(const UnitaryMatrix &u, const UnitaryMatrix &v);

}  // namespace heac

#endif
