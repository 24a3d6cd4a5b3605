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

#include <cstdlib>
#include <string>

#include "frobqec/errors.h"

namespace frobqec {

std::uint64_t max_carrier() {
    const char *env = std::getenv("FROBQEC_MAX_CARRIER");
    if (env == nullptr || *env == '\0') {
        return kDefaultMaxCarrier;
    }
    char *end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0) {
        return kDefaultMaxCarrier;
    }
    return value < kDefaultMaxCarrier ? value : kDefaultMaxCarrier;
}

}  // namespace frobqec
