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

#include "heac/f2_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace heac {

F2Matrix::F2Matrix(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0) {
    if (n < 1) throw std::invalid_argument("F2Matrix needs positive size");
}

F2Matrix F2Matrix::identity(int n) {
    F2Matrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

bool F2Matrix::get(int row, int col) const { return (row_ptr(row)[col / 64] >> (col % 64)) & 1U; }

void F2Matrix::set(int row, int col, bool value) {
    std::uint64_t mask = std::uint64_t{1} << (col % 64);
    std::uint64_t &w = row_ptr(row)[col / 64];
    w = value ? (w | mask) : (w & ~mask);
}

F2Matrix F2Matrix::operator*(const F2Matrix &rhs) const {
    if (rhs.n_ != n_) throw std::invalid_argument("F2Matrix size mismatch");
    F2Matrix out(n_);
    for (int i = 0; i < n_; ++i) {
        std::uint64_t *dst = out.row_ptr(i);
        for (int k = 0; k < n_; ++k) {
            if (!get(i, k)) continue;
            const std::uint64_t *src = rhs.row_ptr(k);
            for (int w = 0; w < words_; ++w) dst[w] ^= src[w];
        }
    }
    return out;
}

bool F2Matrix::is_identity() const { return *this == identity(n_); }

F2Matrix F2Matrix::pow(std::uint64_t exponent) const {
    F2Matrix result = identity(n_);
    F2Matrix base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

int F2Matrix::rank() const {
    std::vector<std::uint64_t> m = bits_;
    int rank = 0;
    for (int col = 0; col < n_ && rank < n_; ++col) {
        const int w = col / 64;
        const std::uint64_t mask = std::uint64_t{1} << (col % 64);
        int pivot = -1;
        for (int r = rank; r < n_; ++r) {
            if (m[static_cast<std::size_t>(r) * words_ + w] & mask) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(pivot) * words_,
                         m.begin() + static_cast<std::ptrdiff_t>(pivot + 1) * words_,
                         m.begin() + static_cast<std::ptrdiff_t>(rank) * words_);
        for (int r = 0; r < n_; ++r) {
            if (r != rank && (m[static_cast<std::size_t>(r) * words_ + w] & mask)) {
                for (int k = 0; k < words_; ++k) {
                    m[static_cast<std::size_t>(r) * words_ + k] ^= m[static_cast<std::size_t>(rank) * words_ + k];
                }
            }
        }
        ++rank;
    }
    return rank;
}

std::uint64_t F2Matrix::apply(std::uint64_t bits) const {
    if (n_ > 64) throw std::invalid_argument("F2Matrix::apply needs n <= 64");
    std::uint64_t out = 0;
    for (int i = 0; i < n_; ++i) {
        if ((bits >> i) & 1U) out ^= row_ptr(i)[0];
    }
    return out;
}

std::string F2Matrix::str() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) s += get(i, j) ? '1' : '0';
        s += '\n';
    }
    return s;
}

F2Matrix ladder_f2(int n, bool inverted_orientation) {
    if (n < 2) throw std::invalid_argument("ladder needs at least 2 qubits, got " + std::to_string(n));
    // One column as a single matrix: its CNOTs touch disjoint wires.
    auto column = [n](int top) {
        F2Matrix m = F2Matrix::identity(n);
        for (int c = top; c - 1 >= 1; c -= 2) m.set(c - 1, c - 2, true);
        return m;
    };
    F2Matrix first = column(n);
    F2Matrix second = column(n - 1);
    return inverted_orientation ? second * first : first * second;
}

std::uint64_t ladder_order(int n) {
    const F2Matrix m = ladder_f2(n);
    const std::uint64_t cap = std::bit_ceil(static_cast<std::uint64_t>(n));
    F2Matrix power = m;
    for (std::uint64_t t = 1; t <= cap; t *= 2) {
        if (power.is_identity()) return t;
        power = power * power;
    }
    throw std::runtime_error("ladder order for N=" + std::to_string(n) + " exceeds " + std::to_string(cap));
}

}  // namespace heac
