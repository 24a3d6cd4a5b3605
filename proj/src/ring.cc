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

#include "frobqec/ring.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>

#include "frobqec/errors.h"

namespace frobqec {

std::string Family::describe() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::zm:
            out << "Z" << m;
            break;
        case Kind::chain:
            out << "Z" << m << "[u]/(u^" << e << ")";
            break;
        case Kind::product:
            for (std::size_t i = 0; i < factors.size(); i++) {
                out << (i ? " x " : "") << "(" << factors[i].describe() << ")";
            }
            break;
        case Kind::custom:
            out << "custom(" << size << ")";
            break;
    }
    return out.str();
}

Ring::Ring(std::size_t size,
           std::vector<Element> add,
           std::vector<Element> mul,
           Element zero,
           Element one,
           std::vector<Turn> epsilon,
           Family family)
    : size_(size),
      add_(std::move(add)),
      mul_(std::move(mul)),
      neg_(size, 0),
      zero_(zero),
      one_(one),
      epsilon_(std::move(epsilon)),
      trivial_(size, 0),
      family_(std::move(family)) {
    if (size_ == 0 || size_ > kMaxRingSize) {
        throw ResourceError("ring size " + std::to_string(size_) + " outside [1, " +
                            std::to_string(kMaxRingSize) + "]");
    }
    if (add_.size() != size_ * size_ || mul_.size() != size_ * size_ || epsilon_.size() != size_) {
        throw InvalidInputError("ring tables have the wrong shape");
    }
    if (zero_ >= size_ || one_ >= size_) {
        throw InvalidInputError("ring identity out of range");
    }
    for (Element v : add_) {
        if (v >= size_) {
            throw InvalidInputError("addition table entry out of range");
        }
    }
    for (Element v : mul_) {
        if (v >= size_) {
            throw InvalidInputError("multiplication table entry out of range");
        }
    }
    family_.size = size_;
    for (std::size_t x = 0; x < size_; x++) {
        bool found = false;
        for (std::size_t y = 0; y < size_; y++) {
            if (add_[idx(Element(x), Element(y))] == zero_) {
                neg_[x] = Element(y);
                found = true;
                break;
            }
        }
        if (!found) {
            throw InvalidInputError("element without additive inverse");
        }
        trivial_[x] = epsilon_[x].is_zero() ? 1 : 0;
    }
    validate();
}

void Ring::validate() const {
    const auto n = size_;
    for (std::size_t x = 0; x < n; x++) {
        auto ex = Element(x);
        if (add(ex, zero_) != ex || mul(ex, one_) != ex) {
            throw InvalidInputError("identity law fails");
        }
        for (std::size_t y = 0; y < n; y++) {
            auto ey = Element(y);
            if (add(ex, ey) != add(ey, ex) || mul(ex, ey) != mul(ey, ex)) {
                throw InvalidInputError("ring is not commutative");
            }
            if (epsilon_[add(ex, ey)] != epsilon_[x] + epsilon_[y]) {
                throw InvalidInputError("epsilon is not additive");
            }
        }
    }
    auto check_triple = [&](Element x, Element y, Element z) {
        if (add(add(x, y), z) != add(x, add(y, z))) {
            throw InvalidInputError("addition is not associative");
        }
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
            throw InvalidInputError("multiplication is not associative");
        }
        if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))) {
            throw InvalidInputError("multiplication does not distribute");
        }
    };
    if (n <= 256) {
        for (std::size_t x = 0; x < n; x++) {
            for (std::size_t y = 0; y < n; y++) {
                for (std::size_t z = 0; z < n; z++) {
                    check_triple(Element(x), Element(y), Element(z));
                }
            }
        }
    } else {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int i = 0; i < 200000; i++) {
            check_triple(Element(pick(rng)), Element(pick(rng)), Element(pick(rng)));
        }
    }
}

Element Ring::pow(Element x, std::size_t j) const {
    Element result = one_;
    for (std::size_t i = 0; i < j; i++) {
        result = mul(result, x);
    }
    return result;
}

Ring Ring::with_character(std::vector<Turn> epsilon) const {
    return Ring(size_, add_, mul_, zero_, one_, std::move(epsilon), family_);
}

RingPtr make_zm(int m) {
    if (m < 2) {
        throw InvalidInputError("Z_m needs m >= 2");
    }
    if (static_cast<std::uint64_t>(m) > kMaxRingSize) {
        throw ResourceError("Z_m with m = " + std::to_string(m) + " exceeds the ring size bound");
    }
    auto n = static_cast<std::size_t>(m);
    std::vector<Element> add(n * n);
    std::vector<Element> mul(n * n);
    std::vector<Turn> epsilon(n);
    for (std::size_t x = 0; x < n; x++) {
        epsilon[x] = Turn(static_cast<std::int64_t>(x), m);
        for (std::size_t y = 0; y < n; y++) {
            add[x * n + y] = Element((x + y) % n);
            mul[x * n + y] = Element((x * y) % n);
        }
    }
    Family family{Family::Kind::zm, m, 1, {}, n};
    auto ring = std::make_shared<const Ring>(n, std::move(add), std::move(mul), 0, 1 % m, std::move(epsilon), family);
    if (!verify_generating_character(*ring)) {
        throw ConsistencyError("Z_m character failed the generating test");
    }
    return ring;
}

RingPtr make_chain_ring(int m, int e) {
    if (m < 2 || e < 1) {
        throw InvalidInputError("chain ring needs m >= 2 and e >= 1");
    }
    std::uint64_t total = 1;
    for (int i = 0; i < e; i++) {
        total *= static_cast<std::uint64_t>(m);
        if (total > kMaxRingSize) {
            throw ResourceError("chain ring m^e exceeds the ring size bound");
        }
    }
    auto n = static_cast<std::size_t>(total);
    auto digits = [&](std::size_t x) {
        std::vector<int> d(e);
        for (int i = 0; i < e; i++) {
            d[i] = static_cast<int>(x % m);
            x /= m;
        }
        return d;
    };
    auto index = [&](const std::vector<int> &d) {
        std::size_t x = 0;
        for (int i = e - 1; i >= 0; i--) {
            x = x * m + static_cast<std::size_t>(d[i]);
        }
        return x;
    };
    std::vector<std::vector<int>> coeffs(n);
    for (std::size_t x = 0; x < n; x++) {
        coeffs[x] = digits(x);
    }
    std::vector<Element> add(n * n);
    std::vector<Element> mul(n * n);
    std::vector<Turn> epsilon(n);
    std::vector<int> scratch(e);
    for (std::size_t x = 0; x < n; x++) {
        const auto &a = coeffs[x];
        epsilon[x] = Turn(a[e - 1], m);
        for (std::size_t y = 0; y < n; y++) {
            const auto &b = coeffs[y];
            for (int i = 0; i < e; i++) {
                scratch[i] = (a[i] + b[i]) % m;
            }
            add[x * n + y] = Element(index(scratch));
            std::fill(scratch.begin(), scratch.end(), 0);
            for (int i = 0; i < e; i++) {
                if (a[i] == 0) {
                    continue;
                }
                for (int j = 0; i + j < e; j++) {
                    scratch[i + j] = (scratch[i + j] + a[i] * b[j]) % m;
                }
            }
            mul[x * n + y] = Element(index(scratch));
        }
    }
    Family family{e == 1 ? Family::Kind::zm : Family::Kind::chain, m, e, {}, n};
    auto ring = std::make_shared<const Ring>(n, std::move(add), std::move(mul), 0, 1, std::move(epsilon), family);
    if (!verify_generating_character(*ring)) {
        throw ConsistencyError("top-coefficient character of Z" + std::to_string(m) + "[u]/(u^" +
                               std::to_string(e) + ") is not generating");
    }
    return ring;
}

RingPtr make_product(const RingPtr &r1, const RingPtr &r2) {
    const std::size_t n1 = r1->size();
    const std::size_t n2 = r2->size();
    if (n1 * n2 > kMaxRingSize) {
        throw ResourceError("product ring exceeds the ring size bound");
    }
    const std::size_t n = n1 * n2;
    std::vector<Element> add(n * n);
    std::vector<Element> mul(n * n);
    std::vector<Turn> epsilon(n);
    for (std::size_t x = 0; x < n; x++) {
        auto x1 = Element(x / n2);
        auto x2 = Element(x % n2);
        epsilon[x] = r1->epsilon(x1) + r2->epsilon(x2);
        for (std::size_t y = 0; y < n; y++) {
            auto y1 = Element(y / n2);
            auto y2 = Element(y % n2);
            add[x * n + y] = Element(r1->add(x1, y1) * n2 + r2->add(x2, y2));
            mul[x * n + y] = Element(r1->mul(x1, y1) * n2 + r2->mul(x2, y2));
        }
    }
    Family family{Family::Kind::product, 0, 0, {r1->family(), r2->family()}, n};
    auto ring = std::make_shared<const Ring>(n,
                                             std::move(add),
                                             std::move(mul),
                                             Element(r1->zero() * n2 + r2->zero()),
                                             Element(r1->one() * n2 + r2->one()),
                                             std::move(epsilon),
                                             family);
    if (!verify_generating_character(*ring)) {
        throw ConsistencyError("product character is not generating");
    }
    return ring;
}

bool verify_generating_character(const Ring &ring) {
    const std::size_t n = ring.size();
    // Hash each row y -> epsilon(xy), then compare rows whose hashes collide.
    std::vector<std::uint64_t> hashes(n);
    for (std::size_t x = 0; x < n; x++) {
        std::uint64_t h = 1469598103934665603ull;
        for (std::size_t y = 0; y < n; y++) {
            const Turn &t = ring.epsilon(ring.mul(Element(x), Element(y)));
            h = (h ^ static_cast<std::uint64_t>(t.num())) * 1099511628211ull;
            h = (h ^ static_cast<std::uint64_t>(t.den())) * 1099511628211ull;
        }
        hashes[x] = h;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return hashes[a] < hashes[b];
    });
    for (std::size_t i = 1; i < n; i++) {
        std::size_t a = order[i - 1];
        std::size_t b = order[i];
        if (hashes[a] != hashes[b]) {
            continue;
        }
        bool same = true;
        for (std::size_t y = 0; y < n && same; y++) {
            same = ring.epsilon(ring.mul(Element(a), Element(y))) == ring.epsilon(ring.mul(Element(b), Element(y)));
        }
        if (same) {
            return false;
        }
    }
    return true;
}

Turn ring_pairing(const Ring &ring, Element x, Element y) {
    return ring.epsilon(ring.mul(x, y));
}

bool Ideal::contains(Element x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

Ideal ideal_span(const RingPtr &ring, const std::vector<Element> &generators) {
    const std::size_t n = ring->size();
    std::vector<std::uint8_t> member(n, 0);
    std::deque<Element> work;
    auto push = [&](Element x) {
        if (!member[x]) {
            member[x] = 1;
            work.push_back(x);
        }
    };
    push(ring->zero());
    for (Element g : generators) {
        if (g >= n) {
            throw InvalidInputError("ideal generator out of range");
        }
        for (std::size_t r = 0; r < n; r++) {
            push(ring->mul(Element(r), g));
        }
    }
    // Every element reached is a sum of multiples r*g, which is already closed
    // under multiplication; it remains to close under addition and negation.
    std::vector<Element> elems;
    while (!work.empty()) {
        Element x = work.front();
        work.pop_front();
        elems.push_back(x);
        push(ring->neg(x));
        for (std::size_t i = 0; i < elems.size(); i++) {
            push(ring->add(x, elems[i]));
        }
    }
    Ideal result{ring, {}};
    for (std::size_t x = 0; x < n; x++) {
        if (member[x]) {
            result.elements.push_back(Element(x));
        }
    }
    return result;
}

Ideal ideal_product(const Ideal &a, const Ideal &b) {
    std::vector<Element> products;
    for (Element x : a.elements) {
        for (Element y : b.elements) {
            products.push_back(a.ring->mul(x, y));
        }
    }
    std::sort(products.begin(), products.end());
    products.erase(std::unique(products.begin(), products.end()), products.end());
    return ideal_span(a.ring, products);
}

Ideal nilradical(const RingPtr &ring) {
    const std::size_t n = ring->size();
    Ideal result{ring, {}};
    for (std::size_t x = 0; x < n; x++) {
        // x^j = 0 for some j iff x^n = 0, since powers of a nilpotent element
        // reach zero within |R| steps.
        Element p = Element(x);
        bool nilpotent = p == ring->zero();
        for (std::size_t j = 1; j < n && !nilpotent; j++) {
            p = ring->mul(p, Element(x));
            nilpotent = p == ring->zero();
        }
        if (nilpotent) {
            result.elements.push_back(Element(x));
        }
    }
    return result;
}

int nilpotency_index(const Ideal &ideal) {
    const Ring &ring = *ideal.ring;
    for (Element x : ideal.elements) {
        Element p = x;
        bool nilpotent = p == ring.zero();
        for (std::size_t j = 1; j < ring.size() && !nilpotent; j++) {
            p = ring.mul(p, x);
            nilpotent = p == ring.zero();
        }
        if (!nilpotent) {
            throw InvalidInputError("ideal contains a non-nilpotent element");
        }
    }
    int h = 1;
    Ideal power = ideal;
    while (!power.is_zero()) {
        power = ideal_product(power, ideal);
        h++;
    }
    return h;
}

}  // namespace frobqec
