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

#ifndef HEAC_ANGLE_HPP
#define HEAC_ANGLE_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace heac {

/// An exact rotation angle stored as a rational multiple of pi.
///
/// Every rotation used here (Ry, Rz) is 4pi periodic, so values are kept
/// canonical in the half-open interval (-2, 2] (units of pi) with a positive,
/// fully reduced denominator. Equal angles therefore compare equal bitwise.
class Angle {
   public:
    constexpr Angle() = default;

    /// num/den * pi. Throws std::invalid_argument when den == 0.
    Angle(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    double radians() const;

    Angle operator-() const;
    Angle operator+(const Angle &other) const;
    Angle operator-(const Angle &other) const;
    Angle &operator+=(const Angle &other);
    bool operator==(const Angle &other) const = default;

    /// "num/den", or "num" when den == 1.
    std::string str() const;

    /// Accepts "a", "a/b", "-a/b". Throws std::invalid_argument otherwise.
    static Angle parse(std::string_view text);

   private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace heac

#endif
