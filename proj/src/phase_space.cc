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

#include "frobqec/phase_space.h"

#include <algorithm>
#include <unordered_set>

#include "frobqec/errors.h"

namespace frobqec {

FreeModule::FreeModule(RingPtr ring, int rank) : ring_(std::move(ring)), rank_(rank), size_(1) {
    if (rank_ < 0) {
        throw InvalidInputError("negative module rank");
    }
    for (int i = 0; i < rank_; i++) {
        if (size_ > (std::uint64_t{1} << 62) / ring_->size()) {
            throw ResourceError("free module too large to enumerate");
        }
        size_ *= ring_->size();
    }
}

Code FreeModule::encode(const Vector &v) const {
    if (static_cast<int>(v.size()) != rank_) {
        throw InvalidInputError("vector has length " + std::to_string(v.size()) + ", expected " +
                                std::to_string(rank_));
    }
    Code c = 0;
    for (int i = rank_ - 1; i >= 0; i--) {
        c = c * ring_->size() + v[i];
    }
    return c;
}

Vector FreeModule::decode(Code c) const {
    Vector v(rank_);
    for (int i = 0; i < rank_; i++) {
        v[i] = Element(c % ring_->size());
        c /= ring_->size();
    }
    return v;
}

Vector FreeModule::basis(int i) const {
    Vector v = zero();
    v.at(i) = ring_->one();
    return v;
}

Vector FreeModule::add(const Vector &v, const Vector &w) const {
    Vector out(rank_);
    for (int i = 0; i < rank_; i++) {
        out[i] = ring_->add(v[i], w[i]);
    }
    return out;
}

Vector FreeModule::sub(const Vector &v, const Vector &w) const {
    Vector out(rank_);
    for (int i = 0; i < rank_; i++) {
        out[i] = ring_->sub(v[i], w[i]);
    }
    return out;
}

Vector FreeModule::neg(const Vector &v) const {
    Vector out(rank_);
    for (int i = 0; i < rank_; i++) {
        out[i] = ring_->neg(v[i]);
    }
    return out;
}

Vector FreeModule::scale(Element r, const Vector &v) const {
    Vector out(rank_);
    for (int i = 0; i < rank_; i++) {
        out[i] = ring_->mul(r, v[i]);
    }
    return out;
}

std::uint64_t FreeModule::order(const Vector &v) const {
    Vector acc = v;
    std::uint64_t d = 1;
    const Vector z = zero();
    while (acc != z) {
        acc = add(acc, v);
        d++;
    }
    return d;
}

BilinearForm BilinearForm::identity(const Ring &ring, int k) {
    BilinearForm form{k, std::vector<Element>(static_cast<std::size_t>(k) * k, ring.zero())};
    for (int i = 0; i < k; i++) {
        form.entries[static_cast<std::size_t>(i) * k + i] = ring.one();
    }
    return form;
}

bool BilinearForm::is_symmetric() const {
    for (int i = 0; i < k; i++) {
        for (int j = 0; j < i; j++) {
            if (at(i, j) != at(j, i)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

int checked_rank(const Ring &ring, int k, int n) {
    if (k < 1 || n < 1) {
        throw InvalidInputError("phase space needs k >= 1 and n >= 1");
    }
    std::uint64_t size = 1;
    const std::uint64_t bound = max_carrier();
    for (int i = 0; i < k * n; i++) {
        size *= ring.size();
        if (size > bound) {
            throw ResourceError("|H| = |R|^(k*n) exceeds the carrier bound " + std::to_string(bound));
        }
    }
    return k * n;
}

}  // namespace

PhaseSpace::PhaseSpace(RingPtr ring, int k, int n, BilinearForm form)
    : k_(k),
      n_(n),
      form_(std::move(form)),
      module_(ring, checked_rank(*ring, k, n)),
      doubled_(ring, 2 * k * n) {
    const Ring &r = *ring;
    if (form_.k != k_ || form_.entries.size() != static_cast<std::size_t>(k_) * k_) {
        throw InvalidInputError("form must be a " + std::to_string(k_) + "x" + std::to_string(k_) + " matrix");
    }
    for (Element x : form_.entries) {
        if (x >= r.size()) {
            throw InvalidInputError("form entry out of range");
        }
    }
    if (!form_.is_symmetric()) {
        throw InvalidInputError("form is not symmetric");
    }
    // Perfect iff v -> Bv has trivial kernel on R^k.
    FreeModule site(ring, k_);
    for (Code c = 1; c < site.size(); c++) {
        Vector v = site.decode(c);
        bool in_kernel = true;
        for (int j = 0; j < k_ && in_kernel; j++) {
            Element acc = r.zero();
            for (int i = 0; i < k_; i++) {
                acc = r.add(acc, r.mul(v[i], form_.at(i, j)));
            }
            in_kernel = acc == r.zero();
        }
        if (in_kernel) {
            throw InvalidInputError("form is not perfect: a nonzero vector pairs trivially with all of V");
        }
    }
}

PhaseSpace make_space(const RingPtr &ring, int k, int n, const BilinearForm &form) {
    return PhaseSpace(ring, k, n, form);
}

Vector PhaseSpace::adjoint(const Vector &w) const {
    const Ring &ring = r();
    Vector out(rank(), ring.zero());
    for (int site = 0; site < n_; site++) {
        int base = site * k_;
        for (int i = 0; i < k_; i++) {
            Element acc = ring.zero();
            for (int j = 0; j < k_; j++) {
                acc = ring.add(acc, ring.mul(form_.at(i, j), w[base + j]));
            }
            out[base + i] = acc;
        }
    }
    return out;
}

Element PhaseSpace::form_eval(const Vector &v, const Vector &w) const {
    const Ring &ring = r();
    if (static_cast<int>(v.size()) != rank() || static_cast<int>(w.size()) != rank()) {
        throw InvalidInputError("vector length does not match the phase space");
    }
    Element acc = ring.zero();
    for (int site = 0; site < n_; site++) {
        int base = site * k_;
        for (int i = 0; i < k_; i++) {
            if (v[base + i] == ring.zero()) {
                continue;
            }
            for (int j = 0; j < k_; j++) {
                acc = ring.add(acc, ring.mul(v[base + i], ring.mul(form_.at(i, j), w[base + j])));
            }
        }
    }
    return acc;
}

Turn PhaseSpace::phase_pairing(const Vector &v, const Vector &w) const {
    return r().epsilon(form_eval(v, w));
}

bool Submodule::contains(Code c) const {
    return std::binary_search(elements.begin(), elements.end(), c);
}

bool Submodule::subset_of(const Submodule &other) const {
    return std::includes(other.elements.begin(), other.elements.end(), elements.begin(), elements.end());
}

namespace {

void check_bound(std::size_t n) {
    if (n > max_carrier()) {
        throw ResourceError("submodule closure exceeds the carrier bound");
    }
}

// {s + t : s in a, t in b}, sorted and deduplicated.
std::vector<Code> sumset(const FreeModule &m, const std::vector<Code> &a, const std::vector<Code> &b) {
    if (b.size() == 1) {
        return a;
    }
    std::vector<Vector> bv;
    bv.reserve(b.size());
    for (Code c : b) {
        bv.push_back(m.decode(c));
    }
    std::vector<Code> out;
    out.reserve(a.size() * b.size());
    Vector sum(m.rank());
    const Ring &r = *m.ring();
    for (Code c : a) {
        Vector v = m.decode(c);
        for (const Vector &w : bv) {
            for (int i = 0; i < m.rank(); i++) {
                sum[i] = r.add(v[i], w[i]);
            }
            out.push_back(m.encode(sum));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    check_bound(out.size());
    return out;
}

std::vector<Code> multiples(const FreeModule &m, const Vector &g, bool over_ring) {
    std::vector<Code> out;
    if (over_ring) {
        for (std::size_t r = 0; r < m.ring()->size(); r++) {
            out.push_back(m.encode(m.scale(Element(r), g)));
        }
    } else {
        Vector acc = m.zero();
        do {
            out.push_back(m.encode(acc));
            acc = m.add(acc, g);
        } while (acc != m.zero());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Submodule close(const FreeModule &m, const std::vector<Vector> &generators, bool over_ring) {
    Submodule s{m.rank(), generators, {m.encode(m.zero())}};
    for (const Vector &g : generators) {
        if (s.contains(m.encode(g))) {
            continue;
        }
        s.elements = sumset(m, s.elements, multiples(m, g, over_ring));
    }
    return s;
}

}  // namespace

Submodule span(const FreeModule &m, const std::vector<Vector> &generators) {
    return close(m, generators, true);
}

Submodule additive_span(const FreeModule &m, const std::vector<Vector> &generators) {
    return close(m, generators, false);
}

Submodule from_elements(const FreeModule &m, std::vector<Code> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    Submodule s{m.rank(), {}, std::move(elements)};
    s.generators = additive_generators(m, s);
    return s;
}

std::vector<Vector> additive_generators(const FreeModule &m, const Submodule &s) {
    std::vector<Vector> gens;
    std::vector<Code> current{m.encode(m.zero())};
    for (Code c : s.elements) {
        if (current.size() == s.elements.size()) {
            break;
        }
        if (std::binary_search(current.begin(), current.end(), c)) {
            continue;
        }
        Vector g = m.decode(c);
        gens.push_back(g);
        current = sumset(m, current, multiples(m, g, false));
    }
    return gens;
}

Submodule sum(const FreeModule &m, const Submodule &a, const Submodule &b) {
    Submodule s{m.rank(), a.generators, sumset(m, a.elements, b.elements)};
    s.generators.insert(s.generators.end(), b.generators.begin(), b.generators.end());
    return s;
}

Submodule intersection(const FreeModule &m, const Submodule &a, const Submodule &b) {
    std::vector<Code> common;
    std::set_intersection(a.elements.begin(),
                          a.elements.end(),
                          b.elements.begin(),
                          b.elements.end(),
                          std::back_inserter(common));
    return from_elements(m, std::move(common));
}

Submodule submodule_span(const PhaseSpace &space, const std::vector<Vector> &generators) {
    return span(space.module(), generators);
}

Submodule orthogonal(const PhaseSpace &space, const Submodule &c) {
    const Ring &ring = space.r();
    const FreeModule &h = space.module();
    std::vector<Vector> adjoints;
    for (const Vector &g : additive_generators(h, c)) {
        adjoints.push_back(space.adjoint(g));
    }
    const int rank = space.rank();
    std::vector<Code> out;
    Vector x(rank, ring.zero());
    for (Code code = 0; code < h.size(); code++) {
        bool ok = true;
        for (const Vector &w : adjoints) {
            Element acc = ring.zero();
            for (int j = 0; j < rank; j++) {
                acc = ring.add(acc, ring.mul(x[j], w[j]));
            }
            if (!ring.epsilon_trivial(acc)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.push_back(code);
        }
        // Odometer step to the vector with code + 1.
        for (int j = 0; j < rank; j++) {
            if (++x[j] < ring.size()) {
                break;
            }
            x[j] = 0;
        }
    }
    Submodule s{rank, {}, std::move(out)};
    s.generators = additive_generators(h, s);
    return s;
}

bool is_self_orthogonal(const PhaseSpace &space, const Submodule &c) {
    auto gens = additive_generators(space.module(), c);
    for (std::size_t i = 0; i < gens.size(); i++) {
        for (std::size_t j = i; j < gens.size(); j++) {
            if (!space.phase_pairing(gens[i], gens[j]).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace frobqec
