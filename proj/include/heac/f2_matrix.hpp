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

#ifndef HEAC_F2_MATRIX_HPP
#define HEAC_F2_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace heac {

/// Square matrix over GF(2) with bit-packed rows.
///
/// Maps act on row vectors: row i is the image of basis vector e_i, so a
/// circuit applying A and then B has matrix A * B.
class F2Matrix {
   public:
    explicit F2Matrix(int n);
    static F2Matrix identity(int n);

    int size() const { return n_; }
    bool get(int row, int col) const;
    void set(int row, int col, bool value);

    F2Matrix operator*(const F2Matrix &rhs) const;
    bool operator==(const F2Matrix &rhs) const = default;
    bool is_identity() const;
    F2Matrix pow(std::uint64_t exponent) const;
    int rank() const;
    bool invertible() const { return rank() == n_; }

    /// Image of a bit vector with bit i holding coordinate i. Requires n <= 64.
    std::uint64_t apply(std::uint64_t bits) const;

    /// Rows as '0'/'1' strings separated by newlines.
    std::string str() const;

   private:
    const std::uint64_t *row_ptr(int r) const { return bits_.data() + static_cast<std::size_t>(r) * words_; }
    std::uint64_t *row_ptr(int r) { return bits_.data() + static_cast<std::size_t>(r) * words_; }

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

/// Linear map of the CNOT ladder on N wires (CNOT(c->t) adds bit c into bit t).
/// Coordinate i-1 is qubit i. With inverted_orientation the two CNOT columns run
/// in the opposite time order, which yields the inverse ladder.
/// Throws std::invalid_argument for N < 2.
F2Matrix ladder_f2(int n, bool inverted_orientation = false);

/// Least t >= 1 with ladder_f2(N)^t = I. The search is capped at the next power
/// of two >= N; exceeding the cap throws std::runtime_error.
std::uint64_t ladder_order(int n);

}  // namespace heac

#endif
