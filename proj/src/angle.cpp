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

#include "heac/angle.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace heac {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Reduces num/den into (-2, 2] with den > 0 and gcd(num, den) == 1.
void canonicalize(i128 num, i128 den, std::int64_t &out_num, std::int64_t &out_den) {
    if (den == 0) {
        throw std::invalid_argument("angle denominator must be nonzero");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    i128 period = 4 * den;
    i128 r = num % period;
    if (r < 0) r += period;
    if (r > 2 * den) r -= period;
    if (den > INT64_MAX || r > INT64_MAX || r < INT64_MIN) {
        throw std::overflow_error("angle denominator out of range");
    }
    out_num = static_cast<std::int64_t>(r);
    out_den = r == 0 ? 1 : static_cast<std::int64_t>(den);
}

std::int64_t parse_int(std::string_view text) {
    std::int64_t v = 0;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) {
        throw std::invalid_argument("malformed angle '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

Angle::Angle(std::int64_t num, std::int64_t den) { canonicalize(num, den, num_, den_); }

double Angle::radians() const {
    return std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
}

Angle Angle::operator-() const {
    Angle r;
    canonicalize(-static_cast<i128>(num_), den_, r.num_, r.den_);
    return r;
}

Angle Angle::operator+(const Angle &other) const {
    Angle r;
    i128 n = static_cast<i128>(num_) * other.den_ + static_cast<i128>(other.num_) * den_;
    i128 d = static_cast<i128>(den_) * other.den_;
    canonicalize(n, d, r.num_, r.den_);
    return r;
}

Angle Angle::operator-(const Angle &other) const { return *this + (-other); }

Angle &Angle::operator+=(const Angle &other) { return *this = *this + other; }

std::string Angle::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Angle Angle::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Angle(parse_int(text), 1);
    return Angle(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace heac
