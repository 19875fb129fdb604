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

#include "heac/gadget_table.hpp"

#include <sstream>
#include <stdexcept>

namespace heac::rycnot {

namespace {

// Same content as data/cnot21_angles.txt; a test keeps the two in sync.
constexpr std::string_view kReferenceText = R"(
1 1/2 0 1 1/4 3/4 - - - - - - - - - -
1/2 0 0 1/2 1/2 1/2 1/2 1/2 0 0 1/2 1/2 1/2 0 1/2 1
0 1/2 1/4 1/2 1/2 1/2 1/2 0 1/2 7/2 3/4 3/4 1/2 0 1/2 1
0 1/4 1/2 1/2 0 1/2 1/2 0 1/2 0 1/2 1/2 1/2 1 1/2 1
3/4 3/4 1/4 1/2 1/2 1/2 1/2 0 1/2 0 1 1/4 1/2 1/4 1/2 0
1 1/2 1/2 1/2 0 1 0 0 1/2 0 1 1/2 0 0 0 0
0 1/2 0 0 1/4 1/2 1/2 1/2 0 0 1 1/2 0 1/2 0 1
1/2 0 1/2 0 1/2 1/2 1/2 0 1/2 0 1 0 1/2 1/2 0 1
1/2 1/4 0 1/2 0 1/4 1 1/4 0 1/2 0 1/2 0 0 1/2 1/4
)";

std::vector<std::string> tokens(const std::string &line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

const GadgetTable &GadgetTable::reference() {
    static const GadgetTable table = parse(kReferenceText);
    return table;
}

GadgetTable GadgetTable::zeros() { return GadgetTable(); }

GadgetTable GadgetTable::parse(std::string_view text) {
    GadgetTable t;
    std::istringstream in{std::string(text)};
    std::string line;
    int m = 0;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        auto toks = tokens(line);
        if (toks.empty()) continue;
        auto fail = [&](const std::string &why) {
            throw std::invalid_argument("gadget table line " + std::to_string(line_no) + ": " + why);
        };
        if (m > kBlocks) fail("more than 9 rows");
        if (toks.size() != kBlockAngles) fail("expected 16 entries, got " + std::to_string(toks.size()));
        const int width = m == 0 ? kClosingAngles : kBlockAngles;
        for (int i = 0; i < kBlockAngles; ++i) {
            if (i >= width) {
                if (toks[i] != "-") fail("row 0 must pad entries 7..16 with '-'");
                continue;
            }
            try {
                t.theta_[m][i] = Angle::parse(toks[i]);
            } catch (const std::invalid_argument &e) {
                fail(e.what());
            }
        }
        ++m;
    }
    if (m != kBlocks + 1) throw std::invalid_argument("gadget table needs 9 rows, got " + std::to_string(m));
    return t;
}

std::string GadgetTable::format() const {
    std::string out;
    for (int m = 0; m <= kBlocks; ++m) {
        for (int i = 1; i <= kBlockAngles; ++i) {
            if (i > 1) out += ' ';
            out += (m == 0 && i > kClosingAngles) ? "-" : at(m, i).str();
        }
        out += '\n';
    }
    return out;
}

const Angle &GadgetTable::at(int m, int i) const {
    const int width = m == 0 ? kClosingAngles : kBlockAngles;
    if (m < 0 || m > kBlocks || i < 1 || i > width) {
        throw std::out_of_range("theta_{" + std::to_string(m) + "," + std::to_string(i) + "} does not exist");
    }
    return theta_[m][i - 1];
}

GadgetTable GadgetTable::with(int m, int i, Angle value) const {
    at(m, i);
    GadgetTable t = *this;
    t.theta_[m][i - 1] = value;
    return t;
}

std::vector<TableDiff> diff_tables(const GadgetTable &expected, const GadgetTable &actual) {
    std::vector<TableDiff> out;
    for (int m = 0; m <= GadgetTable::kBlocks; ++m) {
        const int width = m == 0 ? GadgetTable::kClosingAngles : GadgetTable::kBlockAngles;
        for (int i = 1; i <= width; ++i) {
            if (!(expected.at(m, i) == actual.at(m, i))) out.push_back({m, i, expected.at(m, i), actual.at(m, i)});
        }
    }
    return out;
}

}  // namespace heac::rycnot
