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

#ifndef FROBQEC_RING_H
#define FROBQEC_RING_H

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "frobqec/turn.h"

namespace frobqec {

/// Index of an element inside its owning Ring, in [0, |R|).
using Element = std::uint16_t;

/// How a ring was built. Also fixes the element notation used by documents:
/// an integer for Z_m, a coefficient vector (a_0, ..., a_{e-1}) for a chain
/// ring, and a tuple of component elements for a product.
struct Family {
    enum class Kind { zm, chain, product, custom };

    Kind kind = Kind::custom;
    int m = 0;
    int e = 0;
    std::vector<Family> factors;
    std::size_t size = 0;

    std::string describe() const;
};

/// A finite commutative ring given by full addition and multiplication tables,
/// together with an additive character epsilon valued in Turns.
///
/// Rings are immutable and shared through RingPtr. Elements of a chain ring
/// Z_m[u]/(u^e) are indexed by sum a_i m^i; product elements (x, y) by
/// x * |R2| + y.
class Ring {
   public:
    /// Validates the ring axioms and the additivity of epsilon. Cubic laws are
    /// checked exhaustively up to 256 elements and on random triples above that.
    /// Does not require epsilon to be generating.
    Ring(std::size_t size,
         std::vector<Element> add,
         std::vector<Element> mul,
         Element zero,
         Element one,
         std::vector<Turn> epsilon,
         Family family);

    std::size_t size() const { return size_; }
    Element zero() const { return zero_; }
    Element one() const { return one_; }
    const Family &family() const { return family_; }

    Element add(Element x, Element y) const { return add_[idx(x, y)]; }
    Element mul(Element x, Element y) const { return mul_[idx(x, y)]; }
    Element neg(Element x) const { return neg_[x]; }
    Element sub(Element x, Element y) const { return add(x, neg(y)); }
    /// x^j, with x^0 = 1.
    Element pow(Element x, std::size_t j) const;

    const Turn &epsilon(Element x) const { return epsilon_[x]; }
    const std::vector<Turn> &character() const { return epsilon_; }
    /// epsilon(x) == 0/1, read from a precomputed mask.
    bool epsilon_trivial(Element x) const { return trivial_[x] != 0; }

    /// Copy of this ring carrying a different character. Additivity is checked;
    /// the generating property is not.
    Ring with_character(std::vector<Turn> epsilon) const;

   private:
    std::size_t idx(Element x, Element y) const { return static_cast<std::size_t>(x) * size_ + y; }
    void validate() const;

    std::size_t size_;
    std::vector<Element> add_;
    std::vector<Element> mul_;
    std::vector<Element> neg_;
    Element zero_;
    Element one_;
    std::vector<Turn> epsilon_;
    std::vector<std::uint8_t> trivial_;
    Family family_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Z_m with epsilon(x) = x/m.
RingPtr make_zm(int m);

/// Z_m[u]/(u^e) with epsilon(sum a_i u^i) = a_{e-1}/m. Throws ConsistencyError
/// if that character fails to be generating.
RingPtr make_chain_ring(int m, int e);

/// R1 x R2 with componentwise operations and epsilon(x, y) = epsilon1(x) + epsilon2(y).
RingPtr make_product(const RingPtr &r1, const RingPtr &r2);

/// True iff x -> (y -> epsilon(xy)) is injective. Compares all |R| rows.
bool verify_generating_character(const Ring &ring);

/// <x, y>_R = epsilon(xy).
Turn ring_pairing(const Ring &ring, Element x, Element y);

/// An ideal of a ring, as a sorted element set.
struct Ideal {
    RingPtr ring;
    std::vector<Element> elements;

    bool contains(Element x) const;
    std::size_t size() const { return elements.size(); }
    bool is_zero() const { return elements.size() == 1; }
};

/// Smallest ideal containing the generators.
Ideal ideal_span(const RingPtr &ring, const std::vector<Element> &generators);

/// The additive span of all products x*y with x in a, y in b.
Ideal ideal_product(const Ideal &a, const Ideal &b);

/// {x : x^j = 0 for some j}.
Ideal nilradical(const RingPtr &ring);

/// Smallest h with N^h = 0. Throws InvalidInputError when the ideal holds a
/// non-nilpotent element.
int nilpotency_index(const Ideal &ideal);

}  // namespace frobqec

#endif
