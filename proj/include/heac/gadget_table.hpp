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

#ifndef HEAC_GADGET_TABLE_HPP
#define HEAC_GADGET_TABLE_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "heac/angle.hpp"

namespace heac::rycnot {

/// Ry angles of the six-wire CNOT(2->1) gadget. Block m = 1..8 holds 16 angles
/// theta_{m,1..16}; the closing layer m = 0 holds theta_{0,1..6}.
class GadgetTable {
   public:
    static constexpr int kBlocks = 8;
    static constexpr int kBlockAngles = 16;
    static constexpr int kClosingAngles = 6;

    /// The verified reference table shipped with the library.
    static const GadgetTable &reference();
    static GadgetTable zeros();

    /// Text form: 9 non-comment lines (m = 0..8) of 16 entries "num/den" in
    /// units of pi, line 0 padded with "-". '#' starts a comment.
    /// Throws std::invalid_argument with the offending line on malformed input.
    static GadgetTable parse(std::string_view text);
    std::string format() const;

    /// m in 0..8, i in 1..16 (1..6 when m == 0). Throws std::out_of_range.
    const Angle &at(int m, int i) const;
    GadgetTable with(int m, int i, Angle value) const;

    bool operator==(const GadgetTable &other) const = default;

   private:
    std::array<std::array<Angle, kBlockAngles>, kBlocks + 1> theta_{};
};

struct TableDiff {
    int m;
    int i;
    Angle expected;
    Angle actual;
};

/// Entries where `actual` departs from `expected`, in (m, i) order.
std::vector<TableDiff> diff_tables(const GadgetTable &expected, const GadgetTable &actual);

}  // namespace heac::rycnot

#endif
