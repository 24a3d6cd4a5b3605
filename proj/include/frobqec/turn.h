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

#ifndef FROBQEC_TURN_H
#define FROBQEC_TURN_H

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace frobqec {

/// A root of unity exp(2*pi*i*num/den), stored as a reduced fraction in [0, 1).
///
/// Turns form a group under addition; multiplying roots of unity is adding
/// turns. Zero is always 0/1.
class Turn {
   public:
    constexpr Turn() = default;
    Turn(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    Turn operator+(const Turn &other) const;
    Turn operator-(const Turn &other) const;
    Turn operator-() const;
    Turn &operator+=(const Turn &other);

    /// k * t.
    Turn times(std::int64_t k) const;
    /// One of the d-th roots: the turn num / (den * d).
    Turn divided(std::int64_t d) const;

    std::complex<double> to_complex() const;

    /// "num/den".
    std::string str() const;
    /// Accepts "num/den" or a bare integer; any integers, reduced modulo 1.
    static Turn parse(std::string_view text);

    bool operator==(const Turn &) const = default;
    auto operator<=>(const Turn &) const = default;

   private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

struct TurnHash {
    std::size_t operator()(const Turn &t) const noexcept {
        return std::hash<std::int64_t>{}(t.num() * 1000003 + t.den());
    }
};

}  // namespace frobqec

#endif
