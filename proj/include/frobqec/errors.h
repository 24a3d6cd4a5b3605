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

#ifndef FROBQEC_ERRORS_H
#define FROBQEC_ERRORS_H

#include <cstdint>
#include <stdexcept>
#include <string>

namespace frobqec {

/// Malformed documents, out-of-range indices, forms that are not perfect, and
/// similar caller mistakes. The CLI maps this to exit code 2.
class InvalidInputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A size guard refused to enumerate something. The CLI maps this to exit code 3.
class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An internal cross-check failed. Seeing one of these means a bug.
class ConsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Largest supported ring carrier.
inline constexpr std::uint64_t kMaxRingSize = 4096;

/// Default bound on |H| for any phase space, |R|^(k*n).
inline constexpr std::uint64_t kDefaultMaxCarrier = std::uint64_t{1} << 20;

/// Effective carrier bound: kDefaultMaxCarrier, lowered by FROBQEC_MAX_CARRIER
/// when that variable holds a smaller positive integer. Larger values are ignored.
std::uint64_t max_carrier();

}  // namespace frobqec

#endif
