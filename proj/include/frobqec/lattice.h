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

#ifndef FROBQEC_LATTICE_H
#define FROBQEC_LATTICE_H

#include <cstddef>
#include <functional>
#include <vector>

#include "frobqec/phase_space.h"

namespace frobqec {

/// A biadditive test on pairs of vectors. Enumeration keeps only modules on
/// which it holds for every pair (including a vector with itself).
using PairTest = std::function<bool(const Vector &, const Vector &)>;

struct EnumeratedModule {
    Submodule module;
    /// Generates module as an abelian group (not necessarily minimal).
    std::vector<Vector> additive_gens;
};

/// Called once per module, in the order described below.
using ModuleVisitor = std::function<void(const EnumeratedModule &)>;

/// Every R-submodule of m with at most max_elems elements (and, when test is
/// set, on which test vanishes), in a deterministic order: by size, then by
/// element codes. test must be biadditive and symmetric in whether it vanishes.
/// Modules are grown one cyclic summand Rx at a time, restricted to x in the
/// test-orthogonal of the current module, and deduplicated by element set.
/// Throws ResourceError past max_count modules or for |m| > 2^20.
void for_each_submodule(const FreeModule &m,
                        std::size_t max_elems,
                        const PairTest &test,
                        const ModuleVisitor &visit,
                        std::size_t max_count = std::size_t{1} << 22);

/// for_each_submodule collected into a vector.
std::vector<EnumeratedModule> enumerate_submodules(const FreeModule &m,
                                                   std::size_t max_elems,
                                                   const PairTest &test = nullptr,
                                                   std::size_t max_count = std::size_t{1} << 22);

/// All omega-isotropic submodules of H + H with at most max_elems elements.
void for_each_isotropic(const PhaseSpace &space,
                        std::size_t max_elems,
                        const ModuleVisitor &visit,
                        std::size_t max_count = std::size_t{1} << 22);
std::vector<EnumeratedModule> enumerate_isotropic(const PhaseSpace &space, std::size_t max_elems);

}  // namespace frobqec

#endif
