// Copyright 2026 The frobqec Authors
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

#include "frobqec/turn.h"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

#include "frobqec/errors.h"

namespace frobqec {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

Turn::Turn(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw InvalidInputError("turn with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    num = floor_mod(num, den);
    std::int64_t g = std::gcd(num, den);
    if (num == 0) {
        num_ = 0;
        den_ = 1;
        return;
    }
    num_ = num / g;
    den_ = den / g;
}

Turn Turn::operator+(const Turn &other) const {
    std::int64_t g = std::gcd(den_, other.den_);
    std::int64_t left = other.den_ / g;
    std::int64_t right = den_ / g;
    __int128 n = static_cast<__int128>(num_) * left + static_cast<__int128>(other.num_) * right;
    __int128 d = static_cast<__int128>(den_) * left;
    if (d > INT64_MAX) {
        throw ResourceError("turn denominator overflow");
    }
    auto dd = static_cast<std::int64_t>(d);
    return Turn(static_cast<std::int64_t>(n % dd), dd);
}

Turn Turn::operator-() const {
    return Turn(den_ - num_, den_);
}

Turn Turn::operator-(const Turn &other) const {
    return *this + (-other);
}

Turn &Turn::operator+=(const Turn &other) {
    *this = *this + other;
    return *this;
}

Turn Turn::times(std::int64_t k) const {
    __int128 n = static_cast<__int128>(num_) * k;
    n %= den_;
    return Turn(static_cast<std::int64_t>(n), den_);
}

Turn Turn::divided(std::int64_t d) const {
    if (d <= 0) {
        throw InvalidInputError("turn division by non-positive integer");
    }
    __int128 nd = static_cast<__int128>(den_) * d;
    if (nd > INT64_MAX) {
        throw ResourceError("turn denominator overflow");
    }
    return Turn(num_, static_cast<std::int64_t>(nd));
}

std::complex<double> Turn::to_complex() const {
    // Exact values at the quarter turns keep numeric checks free of 1e-17 noise.
    if (num_ == 0) {
        return {1.0, 0.0};
    }
    if (den_ == 2) {
        return {-1.0, 0.0};
    }
    if (den_ == 4) {
        return num_ == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
    }
    double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
    return {std::cos(angle), std::sin(angle)};
}

std::string Turn::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Turn Turn::parse(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
            throw InvalidInputError("malformed turn '" + std::string(text) + "'");
        }
        return value;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Turn(parse_int(text), 1);
    }
    return Turn(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace frobqec
