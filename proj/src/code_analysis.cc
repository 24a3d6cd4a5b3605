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

#include "frobqec/code_analysis.h"

#include <algorithm>

#include "frobqec/errors.h"

namespace frobqec {

CssVerdict css_verdict(const PhaseSpace &space, const Submodule &l) {
    if (l.rank != 2 * space.rank()) {
        throw InvalidInputError("label module does not live in H + H");
    }
    if (!is_isotropic(space, l)) {
        throw InvalidInputError("css_verdict needs an isotropic label module");
    }
    const FreeModule &h = space.module();
    const FreeModule &hh = space.doubled();
    const std::uint64_t hsize = h.size();
    // (a | b) encodes as code(a) + |H| * code(b).
    std::vector<Code> shifts;
    std::vector<Code> phases;
    for (Code c : l.elements) {
        if (c < hsize) {
            shifts.push_back(c);
        }
        if (c % hsize == 0) {
            phases.push_back(c / hsize);
        }
    }
    CssVerdict verdict;
    if (shifts.size() * phases.size() == l.size()) {
        verdict.status = CssStatus::css;
        verdict.split = std::pair{from_elements(h, shifts), from_elements(h, phases)};
        return verdict;
    }
    verdict.status = CssStatus::non_css;
    for (Code c : l.elements) {
        LabelPair p = split(space, hh.decode(c));
        if (!space.phase_pairing(p.b, p.a).is_zero()) {
            verdict.witness = std::move(p);
            break;
        }
    }
    return verdict;
}

Submodule nilpotent_code(const PhaseSpace &space, const Ideal &n_ideal) {
    nilpotency_index(n_ideal);
    const FreeModule &h = space.module();
    std::vector<Vector> gens;
    for (Element x : n_ideal.elements) {
        if (x == space.r().zero()) {
            continue;
        }
        for (int i = 0; i < space.rank(); i++) {
            gens.push_back(h.scale(x, h.basis(i)));
        }
    }
    return span(h, gens);
}

ProtectionReport check_nilpotent_protection(const PhaseSpace &space, const Ideal &n_ideal) {
    const FreeModule &h = space.module();
    if (h.size() > (std::uint64_t{1} << 14)) {
        throw ResourceError("protection scan needs |H|^2 <= 2^28");
    }
    ProtectionReport report;
    Submodule layer = nilpotent_code(space, n_ideal);
    report.layer_size = layer.size();
    report.square_zero = ideal_product(n_ideal, n_ideal).is_zero();
    report.self_orthogonal = is_self_orthogonal(space, layer);
    report.passed = !report.square_zero || report.self_orthogonal;

    Submodule admissible = orthogonal(space, layer);
    report.admissible_phases = admissible.size();
    const Vector zero = h.zero();
    std::vector<Vector> layer_vectors;
    for (Code c : layer.elements) {
        layer_vectors.push_back(h.decode(c));
    }
    for (Code bc : admissible.elements) {
        Vector b = h.decode(bc);
        for (Code ac = 0; ac < h.size(); ac++) {
            Vector a = h.decode(ac);
            for (const Vector &u : layer_vectors) {
                report.pairs_checked++;
                Turn w = omega(space, {u, zero}, {a, b});
                if (!w.is_zero() && !report.counterexample) {
                    report.counterexample = ProtectionCounterexample{u, {a, b}, w};
                    report.passed = false;
                }
            }
        }
    }
    for (Code bc = 0; bc < h.size() && !report.non_admissible_demo; bc++) {
        if (admissible.contains(bc)) {
            continue;
        }
        Vector b = h.decode(bc);
        for (const Vector &u : layer_vectors) {
            Turn w = omega(space, {u, zero}, {zero, b});
            if (!w.is_zero()) {
                report.non_admissible_demo = ProtectionCounterexample{u, {zero, b}, w};
                break;
            }
        }
    }
    return report;
}

InvariantReport invariants(const PhaseSpace &space) {
    InvariantReport report;
    report.frobenius_rank = space.k();
    report.nilpotent_height = nilpotency_index(nilradical(space.ring()));
    report.commutator_depth = noncommutativity_witness(space) ? 2 : 1;
    return report;
}

Matrix matrix_identity(const Ring &ring, int k) {
    Matrix m{k, std::vector<Element>(static_cast<std::size_t>(k) * k, ring.zero())};
    for (int i = 0; i < k; i++) {
        m.entries[static_cast<std::size_t>(i) * k + i] = ring.one();
    }
    return m;
}

Matrix matrix_mul(const Ring &ring, const Matrix &x, const Matrix &y) {
    const int k = x.k;
    Matrix out{k, std::vector<Element>(static_cast<std::size_t>(k) * k, ring.zero())};
    for (int i = 0; i < k; i++) {
        for (int j = 0; j < k; j++) {
            Element acc = ring.zero();
            for (int t = 0; t < k; t++) {
                acc = ring.add(acc, ring.mul(x.at(i, t), y.at(t, j)));
            }
            out.entries[static_cast<std::size_t>(i) * k + j] = acc;
        }
    }
    return out;
}

Vector apply_blockwise(const PhaseSpace &space, const Matrix &g, const Vector &v) {
    const Ring &ring = space.r();
    const int k = space.k();
    if (g.k != k || v.size() % static_cast<std::size_t>(k) != 0) {
        throw InvalidInputError("matrix and vector shapes do not match the site rank");
    }
    Vector out(v.size(), ring.zero());
    for (std::size_t base = 0; base < v.size(); base += k) {
        for (int i = 0; i < k; i++) {
            Element acc = ring.zero();
            for (int j = 0; j < k; j++) {
                acc = ring.add(acc, ring.mul(g.at(i, j), v[base + j]));
            }
            out[base + i] = acc;
        }
    }
    return out;
}

bool preserves_form(const PhaseSpace &space, const Matrix &g) {
    const Ring &ring = space.r();
    const int k = space.k();
    const BilinearForm &form = space.form();
    // (g^T B g)_{ij} = sum_{s,t} g_{si} B_{st} g_{tj}.
    for (int i = 0; i < k; i++) {
        for (int j = 0; j < k; j++) {
            Element acc = ring.zero();
            for (int s = 0; s < k; s++) {
                for (int t = 0; t < k; t++) {
                    acc = ring.add(acc, ring.mul(g.at(s, i), ring.mul(form.at(s, t), g.at(t, j))));
                }
            }
            if (acc != form.at(i, j)) {
                return false;
            }
        }
    }
    return true;
}

bool IsometryGroup::contains(const Matrix &g) const {
    return std::binary_search(matrices.begin(), matrices.end(), g);
}

IsometryGroup isometry_group(const PhaseSpace &space) {
    const Ring &ring = space.r();
    const int k = space.k();
    const std::size_t cells = static_cast<std::size_t>(k) * k;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < cells; i++) {
        count *= ring.size();
        if (count > (std::uint64_t{1} << 20)) {
            throw ResourceError("isometry search needs |R|^(k^2) <= 2^20");
        }
    }
    IsometryGroup group{k, {}};
    Matrix g{k, std::vector<Element>(cells, ring.zero())};
    for (std::uint64_t c = 0; c < count; c++) {
        if (preserves_form(space, g)) {
            group.matrices.push_back(g);
        }
        for (std::size_t i = 0; i < cells; i++) {
            if (++g.entries[i] < ring.size()) {
                break;
            }
            g.entries[i] = 0;
        }
    }
    std::sort(group.matrices.begin(), group.matrices.end());
    const Matrix id = matrix_identity(ring, k);
    if (!group.contains(id)) {
        throw ConsistencyError("identity is not an isometry");
    }
    for (const Matrix &x : group.matrices) {
        bool has_inverse = false;
        for (const Matrix &y : group.matrices) {
            Matrix xy = matrix_mul(ring, x, y);
            if (!group.contains(xy)) {
                throw ConsistencyError("isometries are not closed under products");
            }
            has_inverse = has_inverse || xy == id;
        }
        if (!has_inverse) {
            throw ConsistencyError("isometry without inverse");
        }
    }
    return group;
}

StabiliserGroup isometry_action(const PhaseSpace &space, const Matrix &g, const StabiliserGroup &s) {
    if (!preserves_form(space, g)) {
        throw InvalidInputError("matrix does not preserve the form");
    }
    std::vector<WeylElement> gens;
    for (const auto &e : s.generators) {
        gens.push_back({e.turn, apply_blockwise(space, g, e.a), apply_blockwise(space, g, e.b)});
    }
    return group_closure(space, gens, std::max<std::size_t>(s.order(), 1));
}

Submodule isometry_action(const PhaseSpace &space, const Matrix &g, const Submodule &c) {
    if (!preserves_form(space, g)) {
        throw InvalidInputError("matrix does not preserve the form");
    }
    const FreeModule &m = c.rank == space.rank() ? space.module() : space.doubled();
    if (c.rank != m.rank()) {
        throw InvalidInputError("submodule lives in neither H nor H + H");
    }
    std::vector<Code> image;
    image.reserve(c.size());
    for (Code x : c.elements) {
        image.push_back(m.encode(apply_blockwise(space, g, m.decode(x))));
    }
    std::sort(image.begin(), image.end());
    Submodule out{c.rank, {}, std::move(image)};
    for (const auto &v : c.generators) {
        out.generators.push_back(apply_blockwise(space, g, v));
    }
    return out;
}

}  // namespace frobqec
