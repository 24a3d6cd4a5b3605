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

#ifndef FROBQEC_WEYL_H
#define FROBQEC_WEYL_H

#include <cstddef>
#include <optional>
#include <vector>

#include "frobqec/phase_space.h"
#include "frobqec/turn.h"

namespace frobqec {

/// The operator exp(2*pi*i*turn) T_a M_b on Fun(H, C), where
/// (T_a f)(x) = f(x - a) and (M_b f)(x) = epsilon(beta(b, x)) f(x).
struct WeylElement {
    Turn turn;
    Vector a;
    Vector b;

    bool operator==(const WeylElement &) const = default;
};

/// A point (a, b) of H + H.
struct LabelPair {
    Vector a;
    Vector b;

    bool operator==(const LabelPair &) const = default;
};

WeylElement weyl_identity(const PhaseSpace &space);

/// (t, a, b)(t', a', b') = (t + t' + epsilon(beta(b, a')), a + a', b + b').
WeylElement weyl_mul(const PhaseSpace &space, const WeylElement &e1, const WeylElement &e2);

/// (t, a, b)^-1 = (-t + epsilon(beta(b, a)), -a, -b).
WeylElement weyl_inv(const PhaseSpace &space, const WeylElement &e);

/// e^k for k >= 0.
WeylElement weyl_pow(const PhaseSpace &space, const WeylElement &e, std::uint64_t k);

/// omega((a, b), (a', b')) = epsilon(beta(b, a') - beta(b', a)).
Turn omega(const PhaseSpace &space, const LabelPair &p, const LabelPair &q);

/// e1 e2 e1^-1 e2^-1 computed through the group law. Throws ConsistencyError if
/// the result carries a nonzero label.
Turn commutator(const PhaseSpace &space, const WeylElement &e1, const WeylElement &e2);

/// Concatenated (a | b) coordinates in space.doubled().
Vector join(const LabelPair &p);
LabelPair split(const PhaseSpace &space, const Vector &ab);
inline LabelPair labels(const WeylElement &e) { return {e.a, e.b}; }

/// A finite subgroup of the Weyl group together with the generators it was
/// closed from. Elements are sorted by (label code, turn).
struct StabiliserGroup {
    std::vector<WeylElement> generators;
    std::vector<WeylElement> elements;
    /// Turns t with (t, 0, 0) in the group, sorted.
    std::vector<Turn> scalar_turns;

    std::size_t order() const { return elements.size(); }
    bool scalar_free() const { return scalar_turns.size() == 1; }
    bool contains(const WeylElement &e) const;
};

/// Default cap on group_closure.
inline constexpr std::size_t kDefaultGroupBound = std::size_t{1} << 20;

/// Closes the generators under weyl_mul. Throws ResourceError past bound elements.
StabiliserGroup group_closure(const PhaseSpace &space,
                              const std::vector<WeylElement> &generators,
                              std::size_t bound = kDefaultGroupBound);

/// omega vanishes on every pair of generator labels.
bool is_abelian_mod_scalars(const PhaseSpace &space, const StabiliserGroup &s);

/// The first pair of generators whose labels fail to commute, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_noncommuting_pair(const PhaseSpace &space,
                                                                           const StabiliserGroup &s);

/// L(S): the labels of all group elements, as a subgroup of H + H.
Submodule label_module_of(const PhaseSpace &space, const StabiliserGroup &s);

/// S(L): lifts an additive generating set of l with turn 0 and closes.
/// Throws InvalidInputError when l is not omega-isotropic.
StabiliserGroup stabiliser_of_labels(const PhaseSpace &space, const Submodule &l);

/// omega vanishes on l (checked on an additive generating set).
bool is_isotropic(const PhaseSpace &space, const Submodule &l);

/// Reassigns generator turns so the closed group has no scalars other than the
/// identity. Generators are processed in order; each new one is given the
/// root that makes its first power landing in the already-fixed subgroup agree
/// with that subgroup. Throws InvalidInputError if s is not abelian mod scalars.
StabiliserGroup phase_fix(const PhaseSpace &space, const StabiliserGroup &s);

/// dim Code(S) = |H| / |S| when S has trivial scalars, else 0.
std::uint64_t code_dimension(const PhaseSpace &space, const StabiliserGroup &s);

/// Some (a, b) with epsilon(beta(b, a)) != 0/1, scanning b then a in code order.
std::optional<LabelPair> noncommutativity_witness(const PhaseSpace &space);

/// lambda(b, a) for all a, b, recovered from commutators of (0, a, 0) and
/// (0, 0, b) using only the group law. Entry [b * |H| + a].
std::vector<Turn> reconstruct_pairing(const PhaseSpace &space);

}  // namespace frobqec

#endif
