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

#ifndef FROBQEC_PHASE_SPACE_H
#define FROBQEC_PHASE_SPACE_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "frobqec/ring.h"
#include "frobqec/turn.h"

namespace frobqec {

/// Coordinates of a vector in a free module over a Ring.
using Vector = std::vector<Element>;

/// Index of a vector in the enumeration order of its free module:
/// sum_i c_i |R|^i, coordinate 0 least significant.
using Code = std::uint64_t;

/// R^rank with encode/decode between coordinates and enumeration codes.
class FreeModule {
   public:
    FreeModule(RingPtr ring, int rank);

    const RingPtr &ring() const { return ring_; }
    int rank() const { return rank_; }
    /// |R|^rank.
    std::uint64_t size() const { return size_; }

    Code encode(const Vector &v) const;
    Vector decode(Code c) const;
    Vector zero() const { return Vector(rank_, ring_->zero()); }
    /// Standard basis vector e_i.
    Vector basis(int i) const;

    Vector add(const Vector &v, const Vector &w) const;
    Vector sub(const Vector &v, const Vector &w) const;
    Vector neg(const Vector &v) const;
    Vector scale(Element r, const Vector &v) const;
    /// Additive order of v.
    std::uint64_t order(const Vector &v) const;

   private:
    RingPtr ring_;
    int rank_;
    std::uint64_t size_;
};

/// A symmetric k x k matrix over R defining beta(v, w) = v^T B w on R^k.
struct BilinearForm {
    int k = 0;
    std::vector<Element> entries;  // row-major

    Element at(int i, int j) const { return entries[static_cast<std::size_t>(i) * k + j]; }
    static BilinearForm identity(const Ring &ring, int k);
    bool is_symmetric() const;
};

/// The n-site label space H = V^(+n) with V = R^k, carrying the block form
/// beta_n(v, w) = sum_i beta(v_i, w_i) and the phase pairing epsilon(beta_n).
///
/// Site i occupies coordinates [i*k, (i+1)*k).
class PhaseSpace {
   public:
    /// Throws InvalidInputError for a non-symmetric or imperfect form and
    /// ResourceError when |R|^(k*n) exceeds max_carrier().
    PhaseSpace(RingPtr ring, int k, int n, BilinearForm form);

    const RingPtr &ring() const { return module_.ring(); }
    const Ring &r() const { return *module_.ring(); }
    int k() const { return k_; }
    int n() const { return n_; }
    int rank() const { return k_ * n_; }
    std::uint64_t size() const { return module_.size(); }
    const BilinearForm &form() const { return form_; }

    /// H itself.
    const FreeModule &module() const { return module_; }
    /// H + H, vectors laid out as (a | b).
    const FreeModule &doubled() const { return doubled_; }

    Element form_eval(const Vector &v, const Vector &w) const;
    Turn phase_pairing(const Vector &v, const Vector &w) const;
    /// The vector B_n w, so that beta_n(v, w) = sum_j v_j (B_n w)_j.
    Vector adjoint(const Vector &w) const;

   private:
    int k_;
    int n_;
    BilinearForm form_;
    FreeModule module_;
    FreeModule doubled_;
};

/// make_space(ring, k, n, form).
PhaseSpace make_space(const RingPtr &ring, int k, int n, const BilinearForm &form);

/// A finite additive subgroup of a free module, stored as its sorted element
/// codes. R-submodules come from span(); label sets of Weyl groups come from
/// additive_span() and are only closed under integer multiples.
struct Submodule {
    int rank = 0;
    std::vector<Vector> generators;
    std::vector<Code> elements;

    std::size_t size() const { return elements.size(); }
    bool contains(Code c) const;
    bool contains(const FreeModule &m, const Vector &v) const { return contains(m.encode(v)); }
    bool operator==(const Submodule &other) const { return rank == other.rank && elements == other.elements; }
    /// Every element of this is an element of other.
    bool subset_of(const Submodule &other) const;
};

/// Smallest R-submodule containing the generators.
Submodule span(const FreeModule &m, const std::vector<Vector> &generators);

/// Smallest additive subgroup containing the generators.
Submodule additive_span(const FreeModule &m, const std::vector<Vector> &generators);

/// Submodule spanned by an explicit element list that is already closed.
Submodule from_elements(const FreeModule &m, std::vector<Code> elements);

/// A small set generating s as an abelian group, picked greedily in element order.
std::vector<Vector> additive_generators(const FreeModule &m, const Submodule &s);

/// A + B.
Submodule sum(const FreeModule &m, const Submodule &a, const Submodule &b);

/// A intersected with B.
Submodule intersection(const FreeModule &m, const Submodule &a, const Submodule &b);

/// submodule_span(space, generators): R-span inside H.
Submodule submodule_span(const PhaseSpace &space, const std::vector<Vector> &generators);

/// C^perp = {x in H : <x, c> = 0/1 for all c in C}, by scanning H against an
/// additive generating set of C.
Submodule orthogonal(const PhaseSpace &space, const Submodule &c);

/// C subset of C^perp, tested on pairs from an additive generating set.
bool is_self_orthogonal(const PhaseSpace &space, const Submodule &c);

}  // namespace frobqec

#endif
