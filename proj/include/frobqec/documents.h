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

#ifndef FROBQEC_DOCUMENTS_H
#define FROBQEC_DOCUMENTS_H

#include <optional>
#include <string>
#include <vector>

#include "frobqec/phase_space.h"
#include "frobqec/ring.h"
#include "frobqec/weyl.h"
#include "json.hpp"

namespace frobqec {

using Json = nlohmann::ordered_json;

// Ring documents:
//   {"family": "zm", "m": 4}
//   {"family": "chain", "m": 2, "e": 2}
//   {"family": "product", "factors": [<ring doc>, <ring doc>, ...]}
// Any of them may carry "character": ["num/den", ...] to replace epsilon.
//
// Elements: an integer for Z_m; a coefficient list [a_0, ..., a_{e-1}] (or a
// string such as "1+u" or "3u^2") for chain rings; a list of component
// elements for products. Integers are reduced modulo m.

RingPtr ring_from_json(const Json &doc);
Json ring_to_json(const Family &family);

Element element_from_json(const Ring &ring, const Json &doc);
Json element_to_json(const Ring &ring, Element x);

Vector vector_from_json(const Ring &ring, const Json &doc, int rank);
Json vector_to_json(const Ring &ring, const Vector &v);

/// A k x k list of element docs; identity when doc is null.
BilinearForm form_from_json(const Ring &ring, const Json &doc, int k);
Json form_to_json(const Ring &ring, const BilinearForm &form);

/// {"turn": "1/4", "a": [...], "b": [...]}; a missing turn means 0/1.
WeylElement weyl_from_json(const PhaseSpace &space, const Json &doc);
Json weyl_to_json(const PhaseSpace &space, const WeylElement &e);
Json label_to_json(const PhaseSpace &space, const LabelPair &p);

/// One document driving every command:
///   {"ring": <ring doc>,
///    "space": {"k": 2, "n": 2, "form": [[...]]},
///    "code": {"generators": [<vector>, ...]},
///    "stabiliser": {"generators": [<weyl doc>, ...]},
///    "ideal": {"generators": [<element>, ...]}}
/// "space" may hold the ring doc itself under "ring" instead.
struct Scenario {
    RingPtr ring;
    std::optional<PhaseSpace> space;
    std::optional<std::vector<Vector>> code;
    std::optional<std::vector<WeylElement>> stabiliser;
    std::optional<std::vector<Element>> ideal;

    /// Throws InvalidInputError naming the missing section.
    const PhaseSpace &require_space() const;
};

/// With ring_only set, every section but the ring is ignored.
Scenario scenario_from_json(const Json &doc, bool ring_only = false);
Json parse_json_text(const std::string &text);
Scenario load_scenario(const std::string &path, bool ring_only = false);
/// Reads and parses a JSON file; InvalidInputError on failure.
Json load_json_file(const std::string &path);

}  // namespace frobqec

#endif
