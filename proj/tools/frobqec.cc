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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "frobqec/commands.h"
#include "frobqec/errors.h"

using namespace frobqec;

int main(int argc, char **argv) {
    CLI::App app{"Stabiliser codes over finite Frobenius rings"};
    std::string command;
    std::string scenario_path;
    CommandOptions options;
    app.add_option("command", command, "ring|code|stabiliser|protect|census|oracle|invariants|isometries|examples")
        ->required()
        ->check(CLI::IsMember(command_names()));
    app.add_option("--scenario", scenario_path, "Scenario JSON document");
    app.add_flag("--json", options.json, "Emit the report as JSON");
    app.add_option("--max-elems", options.max_elems, "Census: largest module size to enumerate");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    Json doc;
    if (command != "examples") {
        if (scenario_path.empty()) {
            std::cerr << "error (invalid_input): --scenario is required for '" << command << "'\n";
            return kExitInvalid;
        }
        try {
            doc = load_json_file(scenario_path);
        } catch (const InvalidInputError &e) {
            std::cerr << "error (invalid_input): " << e.what() << "\n";
            return kExitInvalid;
        }
    }
    CommandResult r = run_command(command, doc, options);
    (r.report.contains("error") && r.report.size() == 2 && !options.json ? std::cerr : std::cout) << r.output;
    return r.exit_code;
}
