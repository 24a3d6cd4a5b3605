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

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "frobqec/errors.h"
#include "frobqec/lattice.h"
#include "frobqec/phase_space.h"

using namespace frobqec;

namespace {

constexpr Element kOne = 1;
constexpr Element kU = 2;

PhaseSpace dot(const RingPtr &r, int k, int n) {
    return make_space(r, k, n, BilinearForm::identity(*r, k));
}

std::vector<PhaseSpace> small_spaces() {
    std::vector<PhaseSpace> out;
    out.push_back(dot(make_zm(2), 1, 3));
    out.push_back(dot(make_zm(3), 1, 2));
    out.push_back(dot(make_zm(4), 1, 2));
    out.push_back(dot(make_zm(4), 2, 1));
    out.push_back(dot(make_chain_ring(2, 2), 1, 2));
    out.push_back(dot(make_chain_ring(2, 2), 2, 1));
    out.push_back(dot(make_zm(6), 1, 2));
    out.push_back(make_space(make_zm(2), 2, 1, BilinearForm{2, {0, 1, 1, 0}}));
    out.push_back(make_space(make_zm(4), 2, 1, BilinearForm{2, {1, 2, 2, 1}}));
    return out;
}

}  // namespace

TEST(MakeSpace, Examples) {
    RingPtr f2u = make_chain_ring(2, 2);
    EXPECT_EQ(dot(f2u, 2, 2).size(), 256u);
    RingPtr z4 = make_zm(4);
    PhaseSpace s = make_space(z4, 1, 1, BilinearForm{1, {1}});
    EXPECT_EQ(s.size(), 4u);
    EXPECT_THROW(make_space(z4, 1, 1, BilinearForm{1, {2}}), InvalidInputError);
}

TEST(MakeSpace, RejectsBadForms) {
    RingPtr z4 = make_zm(4);
    EXPECT_THROW(make_space(z4, 2, 1, BilinearForm{2, {1, 1, 0, 1}}), InvalidInputError);  // not symmetric
    EXPECT_THROW(make_space(z4, 2, 1, BilinearForm{2, {1, 1, 1, 1}}), InvalidInputError);  // not perfect
    EXPECT_THROW(make_space(z4, 2, 1, BilinearForm{1, {1}}), InvalidInputError);           // wrong shape
    EXPECT_THROW(make_space(z4, 0, 1, BilinearForm{0, {}}), InvalidInputError);
    // The hyperbolic plane over Z2 is perfect though it has zero diagonal.
    EXPECT_NO_THROW(make_space(make_zm(2), 2, 1, BilinearForm{2, {0, 1, 1, 0}}));
}

TEST(MakeSpace, CarrierBound) {
    RingPtr big = make_zm(4096);
    EXPECT_NO_THROW(dot(big, 1, 1));
    EXPECT_THROW(dot(big, 2, 1), ResourceError);
    EXPECT_THROW(dot(make_zm(2), 1, 21), ResourceError);
    EXPECT_NO_THROW(dot(make_zm(2), 1, 20));
}

TEST(MakeSpace, CarrierBoundOnlyLowersThroughEnvironment) {
    ::setenv("FROBQEC_MAX_CARRIER", "64", 1);
    EXPECT_EQ(max_carrier(), 64u);
    EXPECT_THROW(dot(make_zm(2), 1, 7), ResourceError);
    EXPECT_NO_THROW(dot(make_zm(2), 1, 6));
    ::setenv("FROBQEC_MAX_CARRIER", "99999999999", 1);
    EXPECT_EQ(max_carrier(), kDefaultMaxCarrier);
    ::setenv("FROBQEC_MAX_CARRIER", "junk", 1);
    EXPECT_EQ(max_carrier(), kDefaultMaxCarrier);
    ::unsetenv("FROBQEC_MAX_CARRIER");
    EXPECT_EQ(max_carrier(), kDefaultMaxCarrier);
}

TEST(FormEval, Examples) {
    RingPtr f2u = make_chain_ring(2, 2);
    PhaseSpace s = dot(f2u, 2, 1);
    EXPECT_EQ(s.form_eval({kU, 0}, {kOne, 0}), kU);
    EXPECT_EQ(s.form_eval({0, 0}, {kU, kOne}), f2u->zero());
    PhaseSpace z = dot(make_zm(4), 1, 2);
    EXPECT_EQ(z.form_eval({2, 1}, {1, 2}), 0);
    EXPECT_EQ(z.form_eval({1, 1}, {1, 2}), 3);
    EXPECT_THROW(z.form_eval({1}, {1, 2}), InvalidInputError);
}

TEST(FormEval, GeneralFormUsesBlocks) {
    RingPtr z4 = make_zm(4);
    PhaseSpace s = make_space(z4, 2, 2, BilinearForm{2, {1, 2, 2, 1}});
    // site 0: (1,0)^T B (0,1) = 2; site 1: (1,1)^T B (1,0) = 1 + 2 = 3.
    EXPECT_EQ(s.form_eval({1, 0, 1, 1}, {0, 1, 1, 0}), 1);
}

TEST(PhasePairing, Examples) {
    PhaseSpace z = dot(make_zm(4), 1, 2);
    EXPECT_TRUE(z.phase_pairing({2, 0}, {2, 0}).is_zero());
    PhaseSpace f = dot(make_chain_ring(2, 2), 2, 1);
    EXPECT_EQ(f.phase_pairing({kOne, 0}, {kU, 0}), Turn(1, 2));
    for (Code c = 0; c < f.size(); c++) {
        EXPECT_TRUE(f.phase_pairing(f.module().decode(c), f.module().zero()).is_zero());
    }
}

TEST(SubmoduleSpan, Examples) {
    PhaseSpace z = dot(make_zm(4), 1, 2);
    Submodule c = submodule_span(z, {{2, 0}, {0, 2}});
    std::vector<Code> expected;
    for (Vector v : {Vector{0, 0}, Vector{2, 0}, Vector{0, 2}, Vector{2, 2}}) {
        expected.push_back(z.module().encode(v));
    }
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(c.elements, expected);
    EXPECT_EQ(submodule_span(z, {}).size(), 1u);
    PhaseSpace f = dot(make_chain_ring(2, 2), 2, 1);
    EXPECT_EQ(submodule_span(f, {{kU, 0}, {0, kU}}).size(), 4u);
}

TEST(SubmoduleSpan, RSpanVersusAdditiveSpan) {
    PhaseSpace f = dot(make_chain_ring(2, 2), 1, 1);
    EXPECT_EQ(submodule_span(f, {{kOne}}).size(), 4u);
    EXPECT_EQ(additive_span(f.module(), {{kOne}}).size(), 2u);
    PhaseSpace z = dot(make_zm(4), 1, 1);
    EXPECT_EQ(additive_span(z.module(), {{1}}).size(), 4u);
}

TEST(Orthogonal, Examples) {
    PhaseSpace z = dot(make_zm(4), 1, 2);
    Submodule c = submodule_span(z, {{2, 0}, {0, 2}});
    EXPECT_EQ(orthogonal(z, c), c);
    Submodule zero = submodule_span(z, {});
    EXPECT_EQ(orthogonal(z, zero).size(), z.size());
    Submodule all = submodule_span(z, {{1, 0}, {0, 1}});
    EXPECT_EQ(orthogonal(z, all).size(), 1u);
}

TEST(IsSelfOrthogonal, Examples) {
    PhaseSpace z = dot(make_zm(4), 1, 2);
    EXPECT_TRUE(is_self_orthogonal(z, submodule_span(z, {{2, 0}, {0, 2}})));
    EXPECT_FALSE(is_self_orthogonal(z, submodule_span(z, {{1, 0}})));
    PhaseSpace f = dot(make_chain_ring(2, 2), 2, 2);
    Submodule uh = submodule_span(f, {{kU, 0, 0, 0}, {0, kU, 0, 0}, {0, 0, kU, 0}, {0, 0, 0, kU}});
    EXPECT_EQ(uh.size(), 16u);
    EXPECT_TRUE(is_self_orthogonal(f, uh));
}

TEST(IsSelfOrthogonal, GeneratorPairsAloneAreNotEnoughOverRings) {
    // <1, 1> = 0 in F2+uF2, yet R*1 contains u with <u, 1> = 1/2.
    PhaseSpace f = dot(make_chain_ring(2, 2), 1, 1);
    EXPECT_TRUE(f.phase_pairing({kOne}, {kOne}).is_zero());
    Submodule c = submodule_span(f, {{kOne}});
    EXPECT_FALSE(is_self_orthogonal(f, c));
    EXPECT_EQ(orthogonal(f, c).size(), 1u);
}

TEST(PhaseProperties, BiadditiveAndSymmetricExhaustive) {
    for (const PhaseSpace &s : small_spaces()) {
        const FreeModule &h = s.module();
        for (Code x = 0; x < h.size(); x++) {
            Vector vx = h.decode(x);
            for (Code y = 0; y < h.size(); y++) {
                Vector vy = h.decode(y);
                Turn xy = s.phase_pairing(vx, vy);
                ASSERT_EQ(xy, s.phase_pairing(vy, vx));
                for (Code z = 0; z < h.size(); z++) {
                    Vector vz = h.decode(z);
                    ASSERT_EQ(s.phase_pairing(h.add(vx, vy), vz), s.phase_pairing(vx, vz) + s.phase_pairing(vy, vz));
                }
            }
        }
    }
}

TEST(PhaseProperties, BiadditiveRandomOnLargerSpace) {
    PhaseSpace s = dot(make_chain_ring(2, 2), 2, 3);
    const FreeModule &h = s.module();
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<Code> pick(0, h.size() - 1);
    for (int i = 0; i < 10000; i++) {
        Vector x = h.decode(pick(rng)), y = h.decode(pick(rng)), z = h.decode(pick(rng));
        ASSERT_EQ(s.phase_pairing(h.add(x, y), z), s.phase_pairing(x, z) + s.phase_pairing(y, z));
        ASSERT_EQ(s.phase_pairing(x, y), s.phase_pairing(y, x));
    }
}

TEST(PhaseProperties, MonoidalOverSites) {
    for (RingPtr r : {make_zm(4), make_chain_ring(2, 2), make_zm(3)}) {
        PhaseSpace whole = dot(r, 1, 3);
        PhaseSpace left = dot(r, 1, 1);
        PhaseSpace right = dot(r, 1, 2);
        const FreeModule &h = whole.module();
        for (Code x = 0; x < h.size(); x++) {
            Vector vx = h.decode(x);
            for (Code y = 0; y < h.size(); y++) {
                Vector vy = h.decode(y);
                Turn split = left.phase_pairing({vx[0]}, {vy[0]}) +
                             right.phase_pairing({vx[1], vx[2]}, {vy[1], vy[2]});
                ASSERT_EQ(whole.phase_pairing(vx, vy), split);
            }
        }
    }
}

TEST(PhaseProperties, NondegenerateUpTo4096) {
    std::vector<PhaseSpace> spaces;
    spaces.push_back(dot(make_zm(4), 2, 3));
    spaces.push_back(dot(make_chain_ring(2, 2), 3, 2));
    spaces.push_back(dot(make_zm(2), 3, 4));
    spaces.push_back(make_space(make_zm(4), 2, 2, BilinearForm{2, {1, 2, 2, 1}}));
    for (const PhaseSpace &s : spaces) {
        ASSERT_LE(s.size(), 4096u);
        const FreeModule &h = s.module();
        for (Code x = 1; x < h.size(); x++) {
            Vector vx = h.decode(x);
            bool found = false;
            for (Code y = 0; y < h.size() && !found; y++) {
                found = !s.phase_pairing(vx, h.decode(y)).is_zero();
            }
            ASSERT_TRUE(found) << "vector code " << x;
        }
    }
}

TEST(PhaseProperties, DualityCardinalityAndDoubleDual) {
    for (const PhaseSpace &s : small_spaces()) {
        std::size_t count = 0;
        for_each_submodule(s.module(), s.size(), nullptr, [&](const EnumeratedModule &em) {
            Submodule c = em.module;
            Submodule perp = orthogonal(s, c);
            ASSERT_EQ(c.size() * perp.size(), s.size());
            ASSERT_EQ(orthogonal(s, perp), c);
            ASSERT_EQ(is_self_orthogonal(s, c), c.subset_of(perp));
            count++;
        });
        EXPECT_GT(count, 1u);
    }
}

TEST(Submodules, SumAndIntersection) {
    PhaseSpace z = dot(make_zm(4), 1, 2);
    Submodule a = submodule_span(z, {{1, 0}});
    Submodule b = submodule_span(z, {{1, 2}});
    Submodule s = sum(z.module(), a, b);
    Submodule i = intersection(z.module(), a, b);
    EXPECT_EQ(s.size(), 8u);
    EXPECT_EQ(i.size(), 2u);
    EXPECT_EQ(s.size() * i.size(), a.size() * b.size());
    EXPECT_TRUE(i.subset_of(a));
    EXPECT_TRUE(a.subset_of(s));
}

TEST(Submodules, AdditiveGeneratorsRegenerate) {
    PhaseSpace f = dot(make_chain_ring(2, 2), 2, 1);
    for_each_submodule(f.module(), f.size(), nullptr, [&](const EnumeratedModule &em) {
        auto gens = additive_generators(f.module(), em.module);
        EXPECT_EQ(additive_span(f.module(), gens), em.module);
        EXPECT_EQ(additive_span(f.module(), em.additive_gens), em.module);
        EXPECT_EQ(span(f.module(), em.module.generators), em.module);
    });
}

TEST(FreeModule, EncodeDecode) {
    FreeModule m(make_zm(5), 3);
    EXPECT_EQ(m.size(), 125u);
    for (Code c = 0; c < m.size(); c++) {
        EXPECT_EQ(m.encode(m.decode(c)), c);
    }
    EXPECT_EQ(m.encode({1, 0, 0}), 1u);
    EXPECT_EQ(m.encode({0, 1, 0}), 5u);
    EXPECT_EQ(m.order({1, 0, 0}), 5u);
    EXPECT_EQ(m.order(m.zero()), 1u);
    EXPECT_THROW(m.encode({1, 0}), InvalidInputError);
}
