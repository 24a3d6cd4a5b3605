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

#include "frobqec/lattice.h"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_set>

#include "frobqec/errors.h"
#include "frobqec/weyl.h"

namespace frobqec {

namespace {

using Word = std::uint64_t;
// Bitset storage ceiling across all pending modules.
constexpr std::size_t kPoolBudgetBytes = std::size_t{1} << 30;
using CodeTest = std::function<bool(Code, Code)>;

// Addition and scaling directly on codes, avoiding decode/encode.
class CodeArith {
   public:
    explicit CodeArith(const FreeModule &m) : ring_(*m.ring()), rank_(m.rank()), q_(m.ring()->size()) {
        pow2_ = std::has_single_bit(q_);
        shift_ = pow2_ ? std::countr_zero(q_) : 0;
        xor_add_ = pow2_;
        for (std::size_t x = 0; x < q_ && xor_add_; x++) {
            for (std::size_t y = 0; y < q_; y++) {
                if (ring_.add(Element(x), Element(y)) != (x ^ y)) {
                    xor_add_ = false;
                    break;
                }
            }
        }
    }

    Code add(Code x, Code y) const {
        if (xor_add_) {
            return x ^ y;
        }
        return combine(x, y, [this](Element a, Element b) { return ring_.add(a, b); });
    }

    Code scale(Element r, Code x) const {
        return combine(x, 0, [this, r](Element a, Element) { return ring_.mul(r, a); });
    }

   private:
    template <typename Op>
    Code combine(Code x, Code y, Op op) const {
        Code out = 0;
        if (pow2_) {
            const Code mask = q_ - 1;
            for (int i = 0; i < rank_; i++) {
                int s = shift_ * i;
                out |= Code(op(Element((x >> s) & mask), Element((y >> s) & mask))) << s;
            }
            return out;
        }
        Code place = 1;
        for (int i = 0; i < rank_; i++) {
            out += Code(op(Element(x % q_), Element(y % q_))) * place;
            x /= q_;
            y /= q_;
            place *= q_;
        }
        return out;
    }

    const Ring &ring_;
    int rank_;
    std::size_t q_;
    bool pow2_ = false;
    int shift_ = 0;
    bool xor_add_ = false;
};

// One size class of modules under construction, stored as packed bitsets.
struct SizeClass {
    std::size_t words = 0;
    std::vector<Word> pool;
    std::vector<std::vector<Code>> gens;
    std::vector<std::vector<Code>> agens;

    const Word *bits(std::size_t i) const { return pool.data() + i * words; }
    std::size_t count() const { return gens.size(); }
};

struct BitsHash {
    const SizeClass *cls;
    std::size_t operator()(std::size_t i) const {
        const Word *b = cls->bits(i);
        std::uint64_t h = 1469598103934665603ull;
        for (std::size_t w = 0; w < cls->words; w++) {
            h = (h ^ b[w]) * 1099511628211ull;
            h ^= h >> 31;
        }
        return h;
    }
};

struct BitsEq {
    const SizeClass *cls;
    bool operator()(std::size_t i, std::size_t j) const {
        return std::equal(cls->bits(i), cls->bits(i) + cls->words, cls->bits(j));
    }
};

// Set-order of equal-size sets: a < b iff min(a xor b) lies in a, which agrees
// with lexicographic order on their sorted element lists.
bool bits_less(const Word *a, const Word *b, std::size_t words) {
    for (std::size_t w = 0; w < words; w++) {
        Word d = a[w] ^ b[w];
        if (d) {
            return (a[w] & (d & (~d + 1))) != 0;
        }
    }
    return false;
}

inline void set_bit(Word *b, Code c) { b[c >> 6] |= Word(1) << (c & 63); }
inline bool get_bit(const Word *b, Code c) { return (b[c >> 6] >> (c & 63)) & 1; }

std::vector<Code> bits_to_codes(const Word *b, std::size_t words) {
    std::vector<Code> out;
    for (std::size_t w = 0; w < words; w++) {
        Word x = b[w];
        while (x) {
            out.push_back(Code(w * 64 + std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return out;
}

class Enumerator {
   public:
    Enumerator(const FreeModule &m, std::size_t max_elems, CodeTest test, std::size_t max_count)
        : m_(m), arith_(m), max_elems_(max_elems), test_(std::move(test)), max_count_(max_count) {
        if (m.size() > (std::uint64_t{1} << 20)) {
            throw ResourceError("submodule enumeration needs an ambient module of at most 2^20 elements");
        }
        g_ = m.size();
        words_ = (g_ + 63) / 64;
        const Ring &r = *m.ring();
        for (std::size_t x = 0; x < r.size(); x++) {
            for (std::size_t y = 0; y < r.size(); y++) {
                if (r.mul(Element(x), Element(y)) == r.one()) {
                    units_.push_back(Element(x));
                    break;
                }
            }
        }
        // Additive generators of (R, +), picked greedily.
        std::vector<std::uint8_t> reached(r.size(), 0);
        reached[r.zero()] = 1;
        for (std::size_t x = 0; x < r.size(); x++) {
            if (reached[x]) {
                continue;
            }
            ring_agens_.push_back(Element(x));
            std::vector<Element> frontier;
            for (std::size_t y = 0; y < r.size(); y++) {
                if (reached[y]) {
                    frontier.push_back(Element(y));
                }
            }
            for (std::size_t i = 0; i < frontier.size(); i++) {
                Element z = r.add(frontier[i], Element(x));
                if (!reached[z]) {
                    reached[z] = 1;
                    frontier.push_back(z);
                }
            }
        }
        if (test_ && g_ <= (std::uint64_t{1} << 14)) {
            perp_.assign(g_ * words_, 0);
            for (Code x = 0; x < g_; x++) {
                Word *row = perp_.data() + x * words_;
                for (Code y = 0; y < g_; y++) {
                    if (test_(x, y)) {
                        set_bit(row, y);
                    }
                }
            }
        }
    }

    void run(const ModuleVisitor &visit) {
        std::map<std::size_t, SizeClass> classes;
        std::map<std::size_t, std::unordered_set<std::size_t, BitsHash, BitsEq>> index;
        auto class_for = [&](std::size_t size) -> SizeClass & {
            auto it = classes.find(size);
            if (it == classes.end()) {
                it = classes.emplace(size, SizeClass{}).first;
                it->second.words = words_;
                index.emplace(size, std::unordered_set<std::size_t, BitsHash, BitsEq>(
                                        16, BitsHash{&it->second}, BitsEq{&it->second}));
            }
            return it->second;
        };
        {
            SizeClass &zero = class_for(1);
            zero.pool.assign(words_, 0);
            set_bit(zero.pool.data(), 0);
            zero.gens.emplace_back();
            zero.agens.emplace_back();
            index.at(1).insert(0);
        }
        std::size_t total = 1;
        std::vector<Word> cand(words_), covered(words_), next(words_);
        while (!classes.empty()) {
            auto node = classes.extract(classes.begin());
            index.erase(node.key());
            SizeClass &cls = node.mapped();
            std::vector<std::size_t> order(cls.count());
            for (std::size_t i = 0; i < order.size(); i++) {
                order[i] = i;
            }
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return bits_less(cls.bits(a), cls.bits(b), words_);
            });
            for (std::size_t idx : order) {
                const Word *mbits = cls.bits(idx);
                std::vector<Code> elems = bits_to_codes(mbits, words_);
                EnumeratedModule em;
                em.module.rank = m_.rank();
                for (Code c : cls.gens[idx]) {
                    em.module.generators.push_back(m_.decode(c));
                }
                for (Code c : cls.agens[idx]) {
                    em.additive_gens.push_back(m_.decode(c));
                }
                em.module.elements = elems;
                visit(em);
                if (elems.size() * 2 > max_elems_) {
                    continue;
                }
                candidates(cls.agens[idx], cand);
                std::copy(mbits, mbits + words_, covered.begin());
                for (Code y = 1; y < g_; y++) {
                    if (!get_bit(cand.data(), y) || get_bit(covered.data(), y)) {
                        continue;
                    }
                    // Additive generators of R y, checked against the module and each other.
                    std::vector<Code> ygens;
                    bool ok = true;
                    for (Element t : ring_agens_) {
                        Code ty = arith_.scale(t, y);
                        if (ty != 0 && std::find(ygens.begin(), ygens.end(), ty) == ygens.end()) {
                            ygens.push_back(ty);
                        }
                    }
                    if (test_) {
                        for (std::size_t i = 0; i < ygens.size() && ok; i++) {
                            ok = get_bit(cand.data(), ygens[i]);
                            for (std::size_t j = i; j < ygens.size() && ok; j++) {
                                ok = test_(ygens[i], ygens[j]);
                            }
                        }
                    }
                    if (!ok) {
                        set_bit(covered.data(), y);
                        continue;
                    }
                    std::vector<Code> cyc;
                    for (std::size_t r = 0; r < m_.ring()->size(); r++) {
                        Code ry = arith_.scale(Element(r), y);
                        if (ry != 0 && !get_bit(mbits, ry)) {
                            cyc.push_back(ry);
                        }
                    }
                    std::sort(cyc.begin(), cyc.end());
                    cyc.erase(std::unique(cyc.begin(), cyc.end()), cyc.end());
                    std::copy(mbits, mbits + words_, next.begin());
                    std::size_t size = elems.size();
                    for (Code c : cyc) {
                        for (Code e : elems) {
                            Code s = arith_.add(e, c);
                            if (!get_bit(next.data(), s)) {
                                set_bit(next.data(), s);
                                size++;
                            }
                        }
                    }
                    // Every e + u y with u a unit generates the same extension.
                    for (Element u : units_) {
                        Code uy = arith_.scale(u, y);
                        for (Code e : elems) {
                            set_bit(covered.data(), arith_.add(e, uy));
                        }
                    }
                    if (size > max_elems_) {
                        continue;
                    }
                    SizeClass &dst = class_for(size);
                    auto &dst_index = index.at(size);
                    std::size_t pos = dst.count();
                    dst.pool.insert(dst.pool.end(), next.begin(), next.end());
                    dst.gens.emplace_back();
                    dst.agens.emplace_back();
                    if (!dst_index.insert(pos).second) {
                        dst.pool.resize(pos * words_);
                        dst.gens.pop_back();
                        dst.agens.pop_back();
                        continue;
                    }
                    if (++total > max_count_) {
                        throw ResourceError("submodule enumeration exceeds " + std::to_string(max_count_) +
                                            " modules");
                    }
                    if (total * words_ * sizeof(Word) > kPoolBudgetBytes) {
                        throw ResourceError("submodule enumeration exceeds its memory budget after " +
                                            std::to_string(total) + " modules");
                    }
                    dst.gens.back() = cls.gens[idx];
                    dst.gens.back().push_back(y);
                    dst.agens.back() = cls.agens[idx];
                    dst.agens.back().insert(dst.agens.back().end(), ygens.begin(), ygens.end());
                }
            }
        }
    }

   private:
    // The test-orthogonal of a module, from an additive generating set.
    void candidates(const std::vector<Code> &agens, std::vector<Word> &out) const {
        std::fill(out.begin(), out.end(), ~Word(0));
        if (g_ % 64) {
            out.back() = (Word(1) << (g_ % 64)) - 1;
        }
        if (!test_) {
            return;
        }
        for (Code g : agens) {
            if (!perp_.empty()) {
                const Word *row = perp_.data() + g * words_;
                for (std::size_t w = 0; w < words_; w++) {
                    out[w] &= row[w];
                }
            } else {
                for (Code y = 0; y < g_; y++) {
                    if (get_bit(out.data(), y) && !test_(g, y)) {
                        out[y >> 6] &= ~(Word(1) << (y & 63));
                    }
                }
            }
        }
    }

    const FreeModule &m_;
    CodeArith arith_;
    std::size_t max_elems_;
    CodeTest test_;
    std::size_t max_count_;
    std::uint64_t g_ = 0;
    std::size_t words_ = 0;
    std::vector<Element> units_;
    std::vector<Element> ring_agens_;
    std::vector<Word> perp_;
};

CodeTest wrap_test(const FreeModule &m, const PairTest &test) {
    if (!test) {
        return nullptr;
    }
    return [&m, test](Code x, Code y) { return test(m.decode(x), m.decode(y)); };
}

// omega on codes of H + H through precomputed coordinates and adjoints.
CodeTest omega_test(const PhaseSpace &space) {
    const FreeModule &d = space.doubled();
    const int kn = space.rank();
    auto a = std::make_shared<std::vector<Element>>();
    auto bt = std::make_shared<std::vector<Element>>();
    a->reserve(d.size() * kn);
    bt->reserve(d.size() * kn);
    for (Code c = 0; c < d.size(); c++) {
        Vector v = d.decode(c);
        LabelPair p = split(space, v);
        Vector adj = space.adjoint(p.b);
        a->insert(a->end(), p.a.begin(), p.a.end());
        bt->insert(bt->end(), adj.begin(), adj.end());
    }
    const Ring *ring = &space.r();
    RingPtr keep = space.ring();
    return [a, bt, ring, keep, kn](Code x, Code y) {
        const Element *ax = a->data() + x * kn;
        const Element *ay = a->data() + y * kn;
        const Element *bx = bt->data() + x * kn;
        const Element *by = bt->data() + y * kn;
        Element s = ring->zero();
        for (int j = 0; j < kn; j++) {
            s = ring->add(s, ring->mul(bx[j], ay[j]));
            s = ring->sub(s, ring->mul(by[j], ax[j]));
        }
        return ring->epsilon_trivial(s);
    };
}

std::vector<EnumeratedModule> collect(const std::function<void(const ModuleVisitor &)> &run) {
    std::vector<EnumeratedModule> out;
    run([&out](const EnumeratedModule &em) { out.push_back(em); });
    return out;
}

}  // namespace

void for_each_submodule(const FreeModule &m,
                        std::size_t max_elems,
                        const PairTest &test,
                        const ModuleVisitor &visit,
                        std::size_t max_count) {
    Enumerator(m, max_elems, wrap_test(m, test), max_count).run(visit);
}

std::vector<EnumeratedModule> enumerate_submodules(const FreeModule &m,
                                                   std::size_t max_elems,
                                                   const PairTest &test,
                                                   std::size_t max_count) {
    return collect([&](const ModuleVisitor &v) { for_each_submodule(m, max_elems, test, v, max_count); });
}

void for_each_isotropic(const PhaseSpace &space,
                        std::size_t max_elems,
                        const ModuleVisitor &visit,
                        std::size_t max_count) {
    Enumerator(space.doubled(), max_elems, omega_test(space), max_count).run(visit);
}

std::vector<EnumeratedModule> enumerate_isotropic(const PhaseSpace &space, std::size_t max_elems) {
    return collect([&](const ModuleVisitor &v) { for_each_isotropic(space, max_elems, v); });
}

}  // namespace frobqec
