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

#include "frobqec/weyl.h"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "frobqec/errors.h"

namespace frobqec {

namespace {

struct Key {
    Code label;
    Turn turn;
    bool operator==(const Key &) const = default;
};

struct KeyHash {
    std::size_t operator()(const Key &k) const noexcept {
        return std::hash<Code>{}(k.label) * 31 + TurnHash{}(k.turn);
    }
};

void check_shape(const PhaseSpace &space, const WeylElement &e) {
    if (static_cast<int>(e.a.size()) != space.rank() || static_cast<int>(e.b.size()) != space.rank()) {
        throw InvalidInputError("Weyl label length does not match the phase space rank");
    }
    for (Element x : e.a) {
        if (x >= space.r().size()) {
            throw InvalidInputError("Weyl label entry out of range");
        }
    }
    for (Element x : e.b) {
        if (x >= space.r().size()) {
            throw InvalidInputError("Weyl label entry out of range");
        }
    }
}

}  // namespace

WeylElement weyl_identity(const PhaseSpace &space) {
    return {Turn(), space.module().zero(), space.module().zero()};
}

WeylElement weyl_mul(const PhaseSpace &space, const WeylElement &e1, const WeylElement &e2) {
    const FreeModule &h = space.module();
    Turn t = e1.turn + e2.turn + space.phase_pairing(e1.b, e2.a);
    return {t, h.add(e1.a, e2.a), h.add(e1.b, e2.b)};
}

WeylElement weyl_inv(const PhaseSpace &space, const WeylElement &e) {
    const FreeModule &h = space.module();
    return {-e.turn + space.phase_pairing(e.b, e.a), h.neg(e.a), h.neg(e.b)};
}

WeylElement weyl_pow(const PhaseSpace &space, const WeylElement &e, std::uint64_t k) {
    WeylElement acc = weyl_identity(space);
    for (std::uint64_t i = 0; i < k; i++) {
        acc = weyl_mul(space, acc, e);
    }
    return acc;
}

Turn omega(const PhaseSpace &space, const LabelPair &p, const LabelPair &q) {
    const Ring &r = space.r();
    return r.epsilon(r.sub(space.form_eval(p.b, q.a), space.form_eval(q.b, p.a)));
}

Turn commutator(const PhaseSpace &space, const WeylElement &e1, const WeylElement &e2) {
    WeylElement c = weyl_mul(space,
                             weyl_mul(space, weyl_mul(space, e1, e2), weyl_inv(space, e1)),
                             weyl_inv(space, e2));
    const Vector z = space.module().zero();
    if (c.a != z || c.b != z) {
        throw ConsistencyError("commutator of Weyl elements has a nonzero label");
    }
    return c.turn;
}

Vector join(const LabelPair &p) {
    Vector out = p.a;
    out.insert(out.end(), p.b.begin(), p.b.end());
    return out;
}

LabelPair split(const PhaseSpace &space, const Vector &ab) {
    if (static_cast<int>(ab.size()) != 2 * space.rank()) {
        throw InvalidInputError("label pair has the wrong length");
    }
    auto mid = ab.begin() + space.rank();
    return {Vector(ab.begin(), mid), Vector(mid, ab.end())};
}

bool StabiliserGroup::contains(const WeylElement &e) const {
    return std::find(elements.begin(), elements.end(), e) != elements.end();
}

StabiliserGroup group_closure(const PhaseSpace &space,
                              const std::vector<WeylElement> &generators,
                              std::size_t bound) {
    for (const auto &g : generators) {
        check_shape(space, g);
    }
    // Elements are held as (label code, turn) with their coordinates cached;
    // full WeylElements are only built once the closure is complete.
    const Ring &r = space.r();
    const FreeModule &hh = space.doubled();
    const std::size_t kn = static_cast<std::size_t>(space.rank());
    const std::size_t width = 2 * kn;
    const int k = space.k();
    std::vector<Element> coords;
    std::vector<Key> keys;
    std::unordered_set<Key, KeyHash> seen;
    std::vector<Element> gen_coords;
    std::vector<Turn> gen_turns;
    for (const auto &g : generators) {
        Vector v = join(labels(g));
        gen_coords.insert(gen_coords.end(), v.begin(), v.end());
        gen_turns.push_back(g.turn);
    }
    auto beta_ba = [&](const Element *x, const Element *y) {
        // beta_n(b_x, a_y) site by site.
        Element acc = r.zero();
        const Element *b = x + kn;
        for (int site = 0; site < space.n(); site++) {
            for (int i = 0; i < k; i++) {
                Element bi = b[site * k + i];
                if (bi == r.zero()) {
                    continue;
                }
                for (int j = 0; j < k; j++) {
                    acc = r.add(acc, r.mul(bi, r.mul(space.form().at(i, j), y[site * k + j])));
                }
            }
        }
        return acc;
    };
    Vector buf(width);
    auto visit = [&](const Element *c, Turn t) {
        Key key{hh.encode(Vector(c, c + width)), t};
        if (seen.insert(key).second) {
            if (keys.size() >= bound) {
                throw ResourceError("Weyl group closure exceeds " + std::to_string(bound) + " elements");
            }
            keys.push_back(key);
            coords.insert(coords.end(), c, c + width);
        }
    };
    buf.assign(width, r.zero());
    visit(buf.data(), Turn());
    for (std::size_t i = 0; i < keys.size(); i++) {
        for (std::size_t g = 0; g < generators.size(); g++) {
            const Element *x = coords.data() + i * width;
            const Element *y = gen_coords.data() + g * width;
            for (std::size_t j = 0; j < width; j++) {
                buf[j] = r.add(x[j], y[j]);
            }
            Turn t = keys[i].turn + gen_turns[g] + r.epsilon(beta_ba(x, y));
            visit(buf.data(), t);
        }
    }
    std::vector<std::size_t> order(keys.size());
    for (std::size_t i = 0; i < order.size(); i++) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return std::tie(keys[x].label, keys[x].turn) < std::tie(keys[y].label, keys[y].turn);
    });
    StabiliserGroup s;
    s.generators = generators;
    s.elements.reserve(keys.size());
    for (std::size_t i : order) {
        if (keys[i].label == 0) {
            s.scalar_turns.push_back(keys[i].turn);
        }
        const Element *c = coords.data() + i * width;
        s.elements.push_back({keys[i].turn, Vector(c, c + kn), Vector(c + kn, c + width)});
    }
    return s;
}

std::optional<std::pair<std::size_t, std::size_t>> first_noncommuting_pair(const PhaseSpace &space,
                                                                           const StabiliserGroup &s) {
    for (std::size_t i = 0; i < s.generators.size(); i++) {
        for (std::size_t j = i + 1; j < s.generators.size(); j++) {
            if (!omega(space, labels(s.generators[i]), labels(s.generators[j])).is_zero()) {
                return std::pair{i, j};
            }
        }
    }
    return std::nullopt;
}

bool is_abelian_mod_scalars(const PhaseSpace &space, const StabiliserGroup &s) {
    return !first_noncommuting_pair(space, s).has_value();
}

Submodule label_module_of(const PhaseSpace &space, const StabiliserGroup &s) {
    std::vector<Code> codes;
    codes.reserve(s.elements.size());
    for (const auto &e : s.elements) {
        codes.push_back(space.doubled().encode(join(labels(e))));
    }
    return from_elements(space.doubled(), std::move(codes));
}

bool is_isotropic(const PhaseSpace &space, const Submodule &l) {
    auto gens = additive_generators(space.doubled(), l);
    for (std::size_t i = 0; i < gens.size(); i++) {
        LabelPair p = split(space, gens[i]);
        for (std::size_t j = i + 1; j < gens.size(); j++) {
            if (!omega(space, p, split(space, gens[j])).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

StabiliserGroup stabiliser_of_labels(const PhaseSpace &space, const Submodule &l) {
    if (l.rank != 2 * space.rank()) {
        throw InvalidInputError("label module does not live in H + H");
    }
    if (!is_isotropic(space, l)) {
        throw InvalidInputError("label module is not isotropic for omega");
    }
    std::vector<WeylElement> gens;
    for (const Vector &v : additive_generators(space.doubled(), l)) {
        LabelPair p = split(space, v);
        gens.push_back({Turn(), std::move(p.a), std::move(p.b)});
    }
    return group_closure(space, gens);
}

StabiliserGroup phase_fix(const PhaseSpace &space, const StabiliserGroup &s) {
    if (auto bad = first_noncommuting_pair(space, s)) {
        throw InvalidInputError("phase_fix needs generators that commute; generators " +
                                std::to_string(bad->first) + " and " + std::to_string(bad->second) +
                                " do not");
    }
    const FreeModule &hh = space.doubled();
    // section: label code -> turn of the unique element over it in the fixed group.
    std::unordered_map<Code, Turn> section{{0, Turn()}};
    std::vector<WeylElement> group{weyl_identity(space)};
    std::vector<WeylElement> fixed_gens;
    for (const auto &g : s.generators) {
        const Vector label = join(labels(g));
        if (section.count(hh.encode(label))) {
            continue;
        }
        std::uint64_t d = 1;
        Vector acc = label;
        while (!section.count(hh.encode(acc))) {
            acc = hh.add(acc, label);
            d++;
        }
        WeylElement untwisted{Turn(), g.a, g.b};
        Turn tau = weyl_pow(space, untwisted, d).turn;
        Turn target = section.at(hh.encode(acc));
        WeylElement fixed{(target - tau).divided(static_cast<std::int64_t>(d)), g.a, g.b};
        fixed_gens.push_back(fixed);
        // The group is abelian with cosets h g^j, 0 <= j < d, over the old one.
        const std::size_t old_size = group.size();
        WeylElement power = fixed;
        for (std::uint64_t j = 1; j < d; j++) {
            for (std::size_t i = 0; i < old_size; i++) {
                WeylElement e = weyl_mul(space, group[i], power);
                auto [it, inserted] = section.emplace(hh.encode(join(labels(e))), e.turn);
                if (!inserted) {
                    throw ConsistencyError("phase_fix met a repeated label while extending the group");
                }
                group.push_back(std::move(e));
            }
            power = weyl_mul(space, power, fixed);
        }
        if (section.at(hh.encode(join(labels(power)))) != power.turn) {
            throw ConsistencyError("phase_fix left a nontrivial scalar in the group");
        }
    }
    StabiliserGroup result = group_closure(space, fixed_gens);
    if (!result.scalar_free()) {
        throw ConsistencyError("phase_fix left a nontrivial scalar in the group");
    }
    return result;
}

std::uint64_t code_dimension(const PhaseSpace &space, const StabiliserGroup &s) {
    if (!s.scalar_free()) {
        return 0;
    }
    if (space.size() % s.order() != 0) {
        throw ConsistencyError("|S| does not divide |H| for a scalar-free stabiliser");
    }
    return space.size() / s.order();
}

std::optional<LabelPair> noncommutativity_witness(const PhaseSpace &space) {
    const FreeModule &h = space.module();
    for (Code bc = 1; bc < h.size(); bc++) {
        Vector b = h.decode(bc);
        for (Code ac = 1; ac < h.size(); ac++) {
            Vector a = h.decode(ac);
            if (!space.phase_pairing(b, a).is_zero()) {
                return LabelPair{std::move(a), std::move(b)};
            }
        }
    }
    return std::nullopt;
}

std::vector<Turn> reconstruct_pairing(const PhaseSpace &space) {
    const FreeModule &h = space.module();
    if (h.size() * h.size() > (std::uint64_t{1} << 20)) {
        throw ResourceError("pairing reconstruction needs |H|^2 <= 2^20");
    }
    std::vector<WeylElement> shifts;
    std::vector<WeylElement> phases;
    for (Code c = 0; c < h.size(); c++) {
        shifts.push_back({Turn(), h.decode(c), h.zero()});
        phases.push_back({Turn(), h.zero(), h.decode(c)});
    }
    std::vector<Turn> table(h.size() * h.size());
    for (Code b = 0; b < h.size(); b++) {
        for (Code a = 0; a < h.size(); a++) {
            // T_a M_b T_a^-1 M_b^-1 = lambda(b, a)^-1 under T_a M_b = lambda^-1 M_b T_a.
            table[b * h.size() + a] = -commutator(space, shifts[a], phases[b]);
        }
    }
    return table;
}

}  // namespace frobqec
