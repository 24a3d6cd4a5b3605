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

#include <algorithm>
#include <random>
#include <set>

#include "frobqec/errors.h"
#include "frobqec/lattice.h"
#include "frobqec/weyl.h"

using namespace frobqec;

namespace {

constexpr Element kOne = 1;
constexpr Element kU = 2;

PhaseSpace dot(const RingPtr &r, int k, int n) {
    return make_space(r, k, n, BilinearForm::identity(*r, k));
}

WeylElement W(Turn t, Vector a, Vector b) { return {t, std::move(a), std::move(b)}; }

std::vector<PhaseSpace> tiny_spaces() {
    std::vector<PhaseSpace> out;
    out.push_back(dot(make_zm(2), 1, 2));
    out.push_back(dot(make_zm(2), 2, 2));
    out.push_back(dot(make_zm(3), 1, 2));
    out.push_back(dot(make_zm(4), 1, 2));
    out.push_back(dot(make_zm(4), 2, 1));
    out.push_back(dot(make_chain_ring(2, 2), 1, 2));
    out.push_back(dot(make_chain_ring(2, 2), 2, 1));
    return out;
}

WeylElement random_element(const PhaseSpace &s, std::mt19937_64 &rng) {
    std::uniform_int_distribution<Code> pick(0, s.size() - 1);
    std::uniform_int_distribution<int> num(0, 11);
    return W(Turn(num(rng), 12), s.module().decode(pick(rng)), s.module().decode(pick(rng)));
}

// (a, b) in H+H enumerated by a single code.
LabelPair pair_of(const PhaseSpace &s, Code c) { return split(s, s.doubled().decode(c)); }

std::set<Turn> turn_set(const std::vector<Turn> &v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(WeylMul, Examples) {
    PhaseSpace z4 = dot(make_zm(4), 1, 1);
    EXPECT_EQ(weyl_mul(z4, W({}, {1}, {1}), W({}, {1}, {0})), W(Turn(1, 4), {2}, {1}));
    WeylElement e = W(Turn(2, 3), {3}, {2});
    EXPECT_EQ(weyl_mul(z4, weyl_identity(z4), e), e);
    EXPECT_EQ(weyl_mul(z4, e, weyl_identity(z4)), e);
    PhaseSpace f = dot(make_chain_ring(2, 2), 2, 1);
    WeylElement g = W({}, {kOne, 0}, {kU, 0});
    EXPECT_EQ(weyl_mul(f, g, g), W(Turn(1, 2), {0, 0}, {0, 0}));
    EXPECT_EQ(weyl_pow(f, g, 2), W(Turn(1, 2), {0, 0}, {0, 0}));
    EXPECT_EQ(weyl_pow(f, g, 4), weyl_identity(f));
}

TEST(WeylInv, Examples) {
    PhaseSpace z4 = dot(make_zm(4), 1, 1);
    EXPECT_EQ(weyl_inv(z4, weyl_identity(z4)), weyl_identity(z4));
    WeylElement e = W({}, {1}, {1});
    WeylElement inv = weyl_inv(z4, e);
    EXPECT_EQ(inv, W(Turn(1, 4), {3}, {3}));
    EXPECT_EQ(weyl_mul(z4, e, inv), weyl_identity(z4));
    EXPECT_EQ(weyl_mul(z4, inv, e), weyl_identity(z4));
    PhaseSpace f = dot(make_chain_ring(2, 2), 2, 2);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 100; i++) {
        WeylElement x = random_element(f, rng);
        ASSERT_EQ(weyl_inv(f, weyl_inv(f, x)), x);
    }
}

TEST(Omega, Examples) {
    PhaseSpace z4 = dot(make_zm(4), 1, 1);
    EXPECT_EQ(omega(z4, {{1}, {0}}, {{0}, {1}}), Turn(3, 4));
    PhaseSpace f = dot(make_chain_ring(2, 2), 2, 1);
    EXPECT_TRUE(omega(f, {{kOne, 0}, {kU, 0}}, {{0, kOne}, {0, kU}}).is_zero());
    for (const PhaseSpace &s : tiny_spaces()) {
        for (Code c = 0; c < s.doubled().size(); c++) {
            LabelPair p = pair_of(s, c);
            ASSERT_TRUE(omega(s, p, p).is_zero());
        }
    }
}

TEST(Commutator, Examples) {
    PhaseSpace z4 = dot(make_zm(4), 1, 1);
    EXPECT_EQ(commutator(z4, W({}, {1}, {0}), W({}, {0}, {1})), Turn(3, 4));
    EXPECT_TRUE(commutator(z4, W({}, {2}, {0}), W({}, {0}, {2})).is_zero());
    PhaseSpace f = dot(make_chain_ring(2, 2), 2, 2);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10000; i++) {
        WeylElement x = random_element(f, rng), y = random_element(f, rng);
        ASSERT_EQ(commutator(f, x, y), omega(f, labels(x), labels(y)));
    }
}

TEST(WeylLaws, AssociativityRandom) {
    std::mt19937_64 rng(3);
    for (const PhaseSpace &s : {dot(make_zm(4), 2, 2), dot(make_chain_ring(2, 2), 1, 3), dot(make_zm(6), 1, 2)}) {
        for (int i = 0; i < 10000; i++) {
            WeylElement x = random_element(s, rng), y = random_element(s, rng), z = random_element(s, rng);
            ASSERT_EQ(weyl_mul(s, weyl_mul(s, x, y), z), weyl_mul(s, x, weyl_mul(s, y, z)));
        }
    }
}

TEST(WeylLaws, IdentityAndInverseExhaustive) {
    for (const PhaseSpace &s : tiny_spaces()) {
        ASSERT_LE(s.size(), 64u);
        for (Code c = 0; c < s.doubled().size(); c++) {
            LabelPair p = pair_of(s, c);
            WeylElement e = W(Turn(1, 3), p.a, p.b);
            ASSERT_EQ(weyl_mul(s, weyl_identity(s), e), e);
            ASSERT_EQ(weyl_mul(s, e, weyl_identity(s)), e);
            ASSERT_EQ(weyl_mul(s, e, weyl_inv(s, e)), weyl_identity(s));
            ASSERT_EQ(weyl_mul(s, weyl_inv(s, e), e), weyl_identity(s));
        }
    }
}

TEST(WeylLaws, CommutationLawExhaustive) {
    for (const PhaseSpace &s : tiny_spaces()) {
        if (s.size() > 16) continue;
        for (Code c1 = 0; c1 < s.doubled().size(); c1++) {
            LabelPair p = pair_of(s, c1);
            WeylElement x = W({}, p.a, p.b);
            for (Code c2 = 0; c2 < s.doubled().size(); c2++) {
                LabelPair q = pair_of(s, c2);
                WeylElement y = W({}, q.a, q.b);
                WeylElement xy = weyl_mul(s, x, y);
                WeylElement yx = weyl_mul(s, y, x);
                yx.turn = yx.turn + omega(s, p, q);
                ASSERT_EQ(xy, yx);
            }
        }
    }
}

TEST(WeylLaws, OmegaBiadditiveAndShiftPhaseRelation) {
    for (const PhaseSpace &s : tiny_spaces()) {
        if (s.size() > 16) continue;
        const FreeModule &d = s.doubled();
        for (Code c1 = 0; c1 < d.size(); c1++) {
            for (Code c2 = 0; c2 < d.size(); c2++) {
                LabelPair p = pair_of(s, c1), q = pair_of(s, c2);
                for (Code c3 = 0; c3 < d.size(); c3 += 17) {
                    LabelPair r = pair_of(s, c3);
                    LabelPair pq = split(s, d.add(join(p), join(q)));
                    ASSERT_EQ(omega(s, pq, r), omega(s, p, r) + omega(s, q, r));
                }
                // omega((a,0),(0,b)) is the inverse of eps(beta(b,a)).
                LabelPair shift{p.a, s.module().zero()}, phase{s.module().zero(), q.b};
                ASSERT_EQ(omega(s, shift, phase), -s.phase_pairing(q.b, p.a));
            }
        }
    }
}

TEST(WeylLaws, CommutatorsAreCentral) {
    std::mt19937_64 rng(11);
    PhaseSpace s = dot(make_chain_ring(2, 2), 2, 2);
    for (int i = 0; i < 1000; i++) {
        WeylElement x = random_element(s, rng), y = random_element(s, rng);
        WeylElement c = weyl_mul(s, weyl_mul(s, x, y), weyl_mul(s, weyl_inv(s, x), weyl_inv(s, y)));
        ASSERT_EQ(c.a, s.module().zero());
        ASSERT_EQ(c.b, s.module().zero());
    }
}

TEST(GroupClosure, Examples) {
    PhaseSpace z4 = dot(make_zm(4), 1, 1);
    StabiliserGroup g = group_closure(z4, {W({}, {2}, {0})});
    EXPECT_EQ(g.order(), 2u);
    EXPECT_EQ(g.scalar_turns, std::vector<Turn>{Turn()});
    EXPECT_TRUE(g.contains(weyl_identity(z4)));
    EXPECT_EQ(group_closure(z4, {weyl_identity(z4)}).order(), 1u);
    EXPECT_EQ(group_closure(z4, {}).order(), 1u);
    PhaseSpace f = dot(make_chain_ring(2, 2), 2, 1);
    StabiliserGroup h = group_closure(f, {W({}, {kOne, 0}, {kU, 0})});
    EXPECT_EQ(h.order(), 4u);
    EXPECT_EQ(turn_set(h.scalar_turns), (std::set<Turn>{Turn(), Turn(1, 2)}));
    EXPECT_FALSE(h.scalar_free());
}

TEST(GroupClosure, BoundIsEnforced) {
    PhaseSpace z4 = dot(make_zm(4), 2, 2);
    std::vector<WeylElement> gens;
    for (int i = 0; i < 4; i++) {
        Vector e = z4.module().basis(i);
        gens.push_back(W({}, e, z4.module().zero()));
        gens.push_back(W({}, z4.module().zero(), e));
    }
    EXPECT_THROW(group_closure(z4, gens, 1000), ResourceError);
    EXPECT_EQ(group_closure(z4, gens).order(), 256u * 256u * 4u);
}

TEST(GroupClosure, ClosedUnderProductsAndInverses) {
    PhaseSpace f = dot(make_chain_ring(2, 2), 2, 1);
    StabiliserGroup g = group_closure(f, {W({}, {kOne, 0}, {kU, 0}), W(Turn(1, 8), {0, kU}, {kOne, 0})});
    for (const WeylElement &x : g.elements) {
        ASSERT_TRUE(g.contains(weyl_inv(f, x)));
        for (const WeylElement &y : g.elements) {
            ASSERT_TRUE(g.contains(weyl_mul(f, x, y)));
        }
    }
}

TEST(AbelianModScalars, Examples) {
    PhaseSpace f = dot(make_chain_ring(2, 2), 2, 1);
    StabiliserGroup s = group_closure(f, {W({}, {kOne, 0}, {kU, 0}), W({}, {0, kOne}, {0, kU})});
    EXPECT_TRUE(is_abelian_mod_scalars(f, s));
    EXPECT_FALSE(first_noncommuting_pair(f, s).has_value());
    PhaseSpace z4 = dot(make_zm(4), 1, 1);
    StabiliserGroup t = group_closure(z4, {W({}, {1}, {0}), W({}, {0}, {1})});
    EXPECT_FALSE(is_abelian_mod_scalars(z4, t));
    auto bad = first_noncommuting_pair(z4, t);
    ASSERT_TRUE(bad.has_value());
    EXPECT_FALSE(commutator(z4, t.generators[bad->first], t.generators[bad->second]).is_zero());
    for (Code c = 0; c < z4.doubled().size(); c++) {
        LabelPair p = pair_of(z4, c);
        EXPECT_TRUE(is_abelian_mod_scalars(z4, group_closure(z4, {W({}, p.a, p.b)})));
    }
}

TEST(LabelModule, Examples) {
    PhaseSpace f = dot(make_chain_ring(2, 2), 2, 1);
    StabiliserGroup s = group_closure(f, {W(Turn(1, 4), {kOne, 0}, {kU, 0})});
    Submodule l = label_module_of(f, s);
    EXPECT_EQ(l.size(), 2u);
    EXPECT_TRUE(l.contains(f.doubled(), join({{kOne, 0}, {kU, 0}})));
    PhaseSpace z4 = dot(make_zm(4), 1, 1);
    EXPECT_EQ(label_module_of(z4, group_closure(z4, {})).size(), 1u);
}

TEST(StabiliserOfLabels, Examples) {
    PhaseSpace z4 = dot(make_zm(4), 1, 1);
    EXPECT_EQ(stabiliser_of_labels(z4, span(z4.doubled(), {{2, 0}})).order(), 2u);
    EXPECT_EQ(stabiliser_of_labels(z4, span(z4.doubled(), {})).order(), 1u);
    EXPECT_THROW(stabiliser_of_labels(z4, span(z4.doubled(), {{1, 0}, {0, 1}})), InvalidInputError);
    PhaseSpace f = dot(make_chain_ring(2, 2), 2, 1);
    Submodule l = span(f.doubled(), {{kOne, 0, kU, 0}, {0, kOne, 0, kU}});
    EXPECT_TRUE(is_isotropic(f, l));
    StabiliserGroup s = stabiliser_of_labels(f, l);
    EXPECT_TRUE(is_abelian_mod_scalars(f, s));
    EXPECT_TRUE(s.contains(W(Turn(1, 2), {0, 0}, {0, 0})));
}

TEST(Correspondence, RoundTripOnAllIsotropicModules) {
    for (const PhaseSpace &s : tiny_spaces()) {
        std::size_t count = 0;
        for_each_isotropic(s, 64, [&](const EnumeratedModule &em) {
            StabiliserGroup g = stabiliser_of_labels(s, em.module);
            ASSERT_TRUE(is_abelian_mod_scalars(s, g));
            ASSERT_EQ(label_module_of(s, g), em.module);
            ASSERT_EQ(g.order(), em.module.size() * g.scalar_turns.size());
            count++;
        });
        EXPECT_GT(count, 1u);
    }
}

TEST(Correspondence, GroupsRecoveredUpToScalars) {
    std::mt19937_64 rng(5);
    PhaseSpace f = dot(make_chain_ring(2, 2), 2, 1);
    int tried = 0;
    while (tried < 200) {
        WeylElement x = random_element(f, rng), y = random_element(f, rng);
        StabiliserGroup s = group_closure(f, {x, y});
        if (!is_abelian_mod_scalars(f, s)) continue;
        tried++;
        StabiliserGroup back = stabiliser_of_labels(f, label_module_of(f, s));
        std::set<Vector> labels_s, labels_back;
        for (const WeylElement &e : s.elements) labels_s.insert(join(labels(e)));
        for (const WeylElement &e : back.elements) labels_back.insert(join(labels(e)));
        ASSERT_EQ(labels_s, labels_back);
    }
}

TEST(PhaseFix, Examples) {
    PhaseSpace f = dot(make_chain_ring(2, 2), 2, 1);
    StabiliserGroup s = group_closure(f, {W({}, {kOne, 0}, {kU, 0})});
    StabiliserGroup fixed = phase_fix(f, s);
    EXPECT_EQ(fixed.order(), 2u);
    EXPECT_TRUE(fixed.scalar_free());
    ASSERT_EQ(fixed.generators.size(), 1u);
    Turn t = fixed.generators[0].turn;
    EXPECT_TRUE(t == Turn(1, 4) || t == Turn(3, 4));
    PhaseSpace z4 = dot(make_zm(4), 1, 1);
    StabiliserGroup plain = group_closure(z4, {W({}, {2}, {0})});
    StabiliserGroup same = phase_fix(z4, plain);
    EXPECT_EQ(same.elements, plain.elements);
    EXPECT_EQ(same.generators[0].turn, Turn());
}

TEST(PhaseFix, RejectsNonAbelian) {
    PhaseSpace z4 = dot(make_zm(4), 1, 1);
    StabiliserGroup t = group_closure(z4, {W({}, {1}, {0}), W({}, {0}, {1})});
    EXPECT_THROW(phase_fix(z4, t), InvalidInputError);
}

TEST(PhaseFix, AlwaysScalarFreeOnIsotropicModules) {
    for (const PhaseSpace &s : tiny_spaces()) {
        for_each_isotropic(s, 64, [&](const EnumeratedModule &em) {
            StabiliserGroup g = phase_fix(s, stabiliser_of_labels(s, em.module));
            ASSERT_TRUE(g.scalar_free());
            ASSERT_EQ(g.order(), em.module.size());
            ASSERT_EQ(label_module_of(s, g), em.module);
        });
    }
}

TEST(CodeDimension, Examples) {
    PhaseSpace z4 = dot(make_zm(4), 1, 1);
    EXPECT_EQ(code_dimension(z4, group_closure(z4, {W({}, {2}, {0})})), 2u);
    EXPECT_EQ(code_dimension(z4, group_closure(z4, {W(Turn(1, 2), {0}, {0})})), 0u);
    PhaseSpace f = dot(make_chain_ring(2, 2), 2, 1);
    StabiliserGroup s = group_closure(f, {W({}, {kOne, 0}, {kU, 0}), W({}, {0, kOne}, {0, kU})});
    EXPECT_EQ(code_dimension(f, s), 0u);
    StabiliserGroup fixed = phase_fix(f, s);
    EXPECT_EQ(fixed.order(), 4u);
    EXPECT_EQ(code_dimension(f, fixed), 4u);
}

TEST(NoncommutativityWitness, Examples) {
    PhaseSpace z4 = dot(make_zm(4), 1, 1);
    auto w = noncommutativity_witness(z4);
    ASSERT_TRUE(w.has_value());
    EXPECT_FALSE(z4.phase_pairing(w->b, w->a).is_zero());
    EXPECT_EQ(z4.phase_pairing({1}, {1}), Turn(1, 4));
    for (RingPtr r : {make_zm(2), make_zm(3), make_zm(4), make_zm(6), make_chain_ring(2, 2), make_chain_ring(3, 2),
                      make_product(make_zm(2), make_zm(3))}) {
        for (int k = 1; k <= 2; k++) {
            PhaseSpace s = dot(r, k, 1);
            auto v = noncommutativity_witness(s);
            ASSERT_TRUE(v.has_value());
            ASSERT_FALSE(s.phase_pairing(v->b, v->a).is_zero());
        }
    }
}

TEST(NoncommutativityWitness, ShiftsCommute) {
    for (const PhaseSpace &s : tiny_spaces()) {
        for (Code x = 0; x < s.size(); x++) {
            for (Code y = 0; y < s.size(); y++) {
                WeylElement p = W({}, s.module().decode(x), s.module().zero());
                WeylElement q = W({}, s.module().decode(y), s.module().zero());
                ASSERT_TRUE(commutator(s, p, q).is_zero());
            }
        }
    }
}

TEST(ReconstructPairing, Examples) {
    PhaseSpace z4 = dot(make_zm(4), 1, 1);
    std::vector<Turn> t = reconstruct_pairing(z4);
    ASSERT_EQ(t.size(), 16u);
    // Entry (b, a) sits at b * |H| + a.
    EXPECT_EQ(t[1 * 4 + 1], Turn(1, 4));
    for (Code a = 0; a < 4; a++) EXPECT_TRUE(t[a].is_zero());
    PhaseSpace f = dot(make_chain_ring(2, 2), 1, 1);
    std::vector<Turn> g = reconstruct_pairing(f);
    // Zero products fill 8 entries; of the 8 nonzero products, u occurs 4 times
    // and 1, 1+u twice each. eps(1+u) = eps(1) + 1/2, so exactly 6 entries are 1/2.
    EXPECT_EQ(std::count(g.begin(), g.end(), Turn(1, 2)), 6);
    EXPECT_EQ(std::count(g.begin(), g.end(), Turn()), 10);
}

TEST(ReconstructPairing, MatchesPairingEverywhere) {
    for (const PhaseSpace &s : tiny_spaces()) {
        std::vector<Turn> t = reconstruct_pairing(s);
        for (Code b = 0; b < s.size(); b++) {
            for (Code a = 0; a < s.size(); a++) {
                ASSERT_EQ(t[b * s.size() + a], s.phase_pairing(s.module().decode(b), s.module().decode(a)));
            }
        }
    }
}
