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

#ifndef FROBQEC_COMMANDS_H
#define FROBQEC_COMMANDS_H

#include <cstdint>
#include <string>
#include <vector>

#include "frobqec/documents.h"

namespace frobqec {

// Exit codes shared by every command.
inline constexpr int kExitAffirmative = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitResource = 3;
// Internal inconsistency (a library bug), outside the 0..3 contract.
inline constexpr int kExitInternal = 4;

struct CommandOptions {
    bool json = false;
    /// Census cap on module size; 0 means |H + H|.
    std::uint64_t max_elems = 0;
};

struct CommandResult {
    int exit_code = 0;
    Json report;
    /// Rendered report: report.dump(2) in JSON mode, "key: value" lines otherwise.
    std::string output;
};

/// Names accepted by run_command.
const std::vector<std::string> &command_names();

/// Runs one command against a scenario document. Never throws: errors are
/// mapped onto the exit-code contract and reported in the output.
CommandResult run_command(const std::string &name, const Json &scenario, const CommandOptions &options);

CommandResult cmd_ring_info(const Json &scenario, const CommandOptions &options);
CommandResult cmd_code_check(const Json &scenario, const CommandOptions &options);
CommandResult cmd_stabiliser(const Json &scenario, const CommandOptions &options);
CommandResult cmd_protect(const Json &scenario, const CommandOptions &options);
CommandResult cmd_census(const Json &scenario, const CommandOptions &options);
CommandResult cmd_oracle(const Json &scenario, const CommandOptions &options);
CommandResult cmd_invariants(const Json &scenario, const CommandOptions &options);
CommandResult cmd_isometries(const Json &scenario, const CommandOptions &options);
CommandResult cmd_examples(const CommandOptions &options);

struct ExampleCheck {
    std::string scenario;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// The worked F2+uF2 and Z4 scenarios, checked fact by fact.
std::vector<ExampleCheck> run_builtin_examples();

/// The two built-in scenario documents, keyed "f2u" and "z4".
Json builtin_scenario(const std::string &key);

/// 64-bit FNV-1a over the "num/den" strings of the character, comma separated.
std::uint64_t character_digest(const Ring &ring);

}  // namespace frobqec

#endif
