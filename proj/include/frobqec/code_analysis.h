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

#ifndef FROBQEC_CODE_ANALYSIS_H
#define FROBQEC_CODE_ANALYSIS_H

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "frobqec/phase_space.h"
#include "frobqec/ring.h"
#include "frobqec/weyl.h"

namespace frobqec {

enum class CssStatus { css, non_css };

struct CssVerdict {
    CssStatus status = CssStatus::css;
    /// (A, B) with L = (A x 0) + (0 x B); set when status is css.
    std::optional<std::pair<Submodule, Submodule>> split;
    /// Some (a, b) in L with epsilon(beta(b, a)) != 0/1, when one exists.
    std::optional<LabelPair> witness;
};

/// Splitting test on an isotropic label module: css iff
/// |L cap (H x 0)| * |L cap (0 x H)| = |L|.
CssVerdict css_verdict(const PhaseSpace &space, const Submodule &l);

/// N H as a submodule of H.
Submodule nilpotent_code(const PhaseSpace &space, const Ideal &n_ideal);

struct ProtectionCounterexample {
    Vector u;  // in N H
    LabelPair error;
    Turn omega;
};

struct ProtectionReport {
    bool passed = false;
    /// N^2 = 0, in which case self-orthogonality of N H was required.
    bool square_zero = false;
    bool self_orthogonal = false;
    std::uint64_t layer_size = 0;
    std::uint64_t admissible_phases = 0;
    std::uint64_t pairs_checked = 0;
    /// First (u, (a, b)) with b admissible and omega((u, 0), (a, b)) != 0/1.
    std::optional<ProtectionCounterexample> counterexample;
    /// First (u, (0, b)) with b NOT admissible and a nonzero syndrome, showing
    /// that the admissibility condition cannot be dropped.
    std::optional<ProtectionCounterexample> non_admissible_demo;
};

/// Checks that N H is invisible to every admissible Weyl error (a, b), i.e.
/// every b in (N H)^perp, with a unrestricted.
ProtectionReport check_nilpotent_protection(const PhaseSpace &space, const Ideal &n_ideal);

struct InvariantReport {
    int frobenius_rank = 0;
    int nilpotent_height = 0;
    int commutator_depth = 0;
};

InvariantReport invariants(const PhaseSpace &space);

/// A k x k matrix over the ring, row-major.
struct Matrix {
    int k = 0;
    std::vector<Element> entries;

    Element at(int i, int j) const { return entries[static_cast<std::size_t>(i) * k + j]; }
    bool operator==(const Matrix &) const = default;
    auto operator<=>(const Matrix &) const = default;
};

Matrix matrix_identity(const Ring &ring, int k);
Matrix matrix_mul(const Ring &ring, const Matrix &x, const Matrix &y);
/// g applied to each k-block of v.
Vector apply_blockwise(const PhaseSpace &space, const Matrix &g, const Vector &v);
/// g^T B g = B.
bool preserves_form(const PhaseSpace &space, const Matrix &g);

struct IsometryGroup {
    int k = 0;
    std::vector<Matrix> matrices;  // sorted

    bool contains(const Matrix &g) const;
};

/// Brute force over all k x k matrices of the single-site form. Throws
/// ResourceError when |R|^(k^2) > 2^20, ConsistencyError if the result is not
/// closed under products and inverses.
IsometryGroup isometry_group(const PhaseSpace &space);

/// (a, b) -> (g a, g b) blockwise, turns untouched. Throw InvalidInputError
/// for a matrix that does not preserve the form.
StabiliserGroup isometry_action(const PhaseSpace &space, const Matrix &g, const StabiliserGroup &s);
Submodule isometry_action(const PhaseSpace &space, const Matrix &g, const Submodule &c);

}  // namespace frobqec

#endif
