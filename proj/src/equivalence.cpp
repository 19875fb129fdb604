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

#include "heac/equivalence.hpp"

#include <complex>
#include <stdexcept>

namespace heac {

double phase_aligned_distance(const UnitaryMatrix &u, const UnitaryMatrix &v) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) {
        throw std::invalid_argument("phase_aligned_distance: shape mismatch");
    }
    const UnitaryMatrix w = v.adjoint() * u;
    Eigen::Index r = 0, c = 0;
    w.cwiseAbs().maxCoeff(&r, &c);
    std::complex<double> phase(1, 0);
    if (std::abs(w(r, c)) > 0) phase = w(r, c) / std::abs(w(r, c));
    return (u - phase * v).norm();
}

}  // namespace heac
