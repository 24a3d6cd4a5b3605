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

#include "frobqec/documents.h"

#include <cctype>
#include <fstream>
#include <sstream>

#include "frobqec/errors.h"

namespace frobqec {

namespace {

int get_int(const Json &doc, const char *key) {
    if (!doc.contains(key) || !doc[key].is_number_integer()) {
        throw InvalidInputError(std::string("ring document needs integer field '") + key + "'");
    }
    return doc[key].get<int>();
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// "a0 + a1 u + a2 u^2" style terms, e.g. "1+u", "u", "3u^2", "2+3u".
std::vector<std::int64_t> parse_chain_text(const std::string &text, int e) {
    std::vector<std::int64_t> coeffs(e, 0);
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(ch);
        }
    }
    if (s.empty()) {
        throw InvalidInputError("empty chain ring element");
    }
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            i++;
        }
        std::int64_t coeff = 1;
        bool has_digits = false;
        std::int64_t num = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            num = num * 10 + (s[i] - '0');
            has_digits = true;
            i++;
        }
        if (has_digits) {
            coeff = num;
        }
        int power = 0;
        if (i < s.size() && s[i] == '*') {
            i++;
        }
        if (i < s.size() && s[i] == 'u') {
            power = 1;
            i++;
            if (i < s.size() && s[i] == '^') {
                i++;
                int p = 0;
                bool ok = false;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    p = p * 10 + (s[i] - '0');
                    ok = true;
                    i++;
                }
                if (!ok) {
                    throw InvalidInputError("malformed chain ring element '" + text + "'");
                }
                power = p;
            }
        } else if (!has_digits) {
            throw InvalidInputError("malformed chain ring element '" + text + "'");
        }
        if (i < s.size() && s[i] != '+' && s[i] != '-') {
            throw InvalidInputError("malformed chain ring element '" + text + "'");
        }
        if (power < e) {
            coeffs[power] += sign * coeff;
        }
    }
    return coeffs;
}

std::size_t element_index(const Family &family, const Json &doc) {
    switch (family.kind) {
        case Family::Kind::zm:
            if (family.e <= 1) {
                if (doc.is_number_integer()) {
                    return static_cast<std::size_t>(floor_mod(doc.get<std::int64_t>(), family.m));
                }
                if (doc.is_array() && doc.size() == 1 && doc[0].is_number_integer()) {
                    return static_cast<std::size_t>(floor_mod(doc[0].get<std::int64_t>(), family.m));
                }
                throw InvalidInputError("Z_m element must be an integer, got " + doc.dump());
            }
            [[fallthrough]];
        case Family::Kind::chain: {
            std::vector<std::int64_t> coeffs;
            if (doc.is_array()) {
                if (static_cast<int>(doc.size()) != family.e) {
                    throw InvalidInputError("chain ring element needs " + std::to_string(family.e) +
                                            " coefficients, got " + doc.dump());
                }
                for (const auto &c : doc) {
                    if (!c.is_number_integer()) {
                        throw InvalidInputError("chain ring coefficient must be an integer");
                    }
                    coeffs.push_back(c.get<std::int64_t>());
                }
            } else if (doc.is_string()) {
                coeffs = parse_chain_text(doc.get<std::string>(), family.e);
            } else if (doc.is_number_integer()) {
                coeffs.assign(family.e, 0);
                coeffs[0] = doc.get<std::int64_t>();
            } else {
                throw InvalidInputError("malformed chain ring element " + doc.dump());
            }
            std::size_t idx = 0;
            for (int i = family.e - 1; i >= 0; i--) {
                idx = idx * family.m + static_cast<std::size_t>(floor_mod(coeffs[i], family.m));
            }
            return idx;
        }
        case Family::Kind::product: {
            if (!doc.is_array() || doc.size() != family.factors.size()) {
                throw InvalidInputError("product ring element needs one entry per factor, got " + doc.dump());
            }
            std::size_t idx = 0;
            for (std::size_t i = 0; i < family.factors.size(); i++) {
                idx = idx * family.factors[i].size + element_index(family.factors[i], doc[i]);
            }
            return idx;
        }
        case Family::Kind::custom:
            if (!doc.is_number_integer() || doc.get<std::int64_t>() < 0 ||
                doc.get<std::size_t>() >= family.size) {
                throw InvalidInputError("element index out of range: " + doc.dump());
            }
            return doc.get<std::size_t>();
    }
    throw InvalidInputError("unknown ring family");
}

Json element_doc(const Family &family, std::size_t idx) {
    switch (family.kind) {
        case Family::Kind::zm:
            if (family.e <= 1) {
                return static_cast<std::int64_t>(idx);
            }
            [[fallthrough]];
        case Family::Kind::chain: {
            Json out = Json::array();
            for (int i = 0; i < family.e; i++) {
                out.push_back(static_cast<std::int64_t>(idx % family.m));
                idx /= family.m;
            }
            return out;
        }
        case Family::Kind::product: {
            Json out = Json::array();
            std::vector<std::size_t> parts(family.factors.size());
            for (std::size_t i = family.factors.size(); i-- > 0;) {
                parts[i] = idx % family.factors[i].size;
                idx /= family.factors[i].size;
            }
            for (std::size_t i = 0; i < parts.size(); i++) {
                out.push_back(element_doc(family.factors[i], parts[i]));
            }
            return out;
        }
        case Family::Kind::custom:
            return static_cast<std::int64_t>(idx);
    }
    return nullptr;
}

RingPtr fold_product(const std::vector<RingPtr> &factors) {
    if (factors.size() == 2) {
        return make_product(factors[0], factors[1]);
    }
    // Build a flat family so that element notation lists every factor.
    RingPtr acc = factors[0];
    for (std::size_t i = 1; i < factors.size(); i++) {
        acc = make_product(acc, factors[i]);
    }
    Family flat{Family::Kind::product, 0, 0, {}, acc->size()};
    for (const auto &f : factors) {
        flat.factors.push_back(f->family());
    }
    std::vector<Element> add(acc->size() * acc->size());
    std::vector<Element> mul(acc->size() * acc->size());
    for (std::size_t x = 0; x < acc->size(); x++) {
        for (std::size_t y = 0; y < acc->size(); y++) {
            add[x * acc->size() + y] = acc->add(Element(x), Element(y));
            mul[x * acc->size() + y] = acc->mul(Element(x), Element(y));
        }
    }
    // Left-nested products index (x1, x2, x3) as (x1 * |R2| + x2) * |R3| + x3, the same
    // as the flat mixed-radix order, so the tables carry over unchanged.
    return std::make_shared<const Ring>(acc->size(), std::move(add), std::move(mul), acc->zero(), acc->one(),
                                        acc->character(), flat);
}

}  // namespace

RingPtr ring_from_json(const Json &doc) {
    if (!doc.is_object() || !doc.contains("family") || !doc["family"].is_string()) {
        throw InvalidInputError("ring document needs a string 'family'");
    }
    const std::string family = doc["family"].get<std::string>();
    RingPtr ring;
    if (family == "zm") {
        ring = make_zm(get_int(doc, "m"));
    } else if (family == "chain") {
        ring = make_chain_ring(get_int(doc, "m"), get_int(doc, "e"));
    } else if (family == "product") {
        if (!doc.contains("factors") || !doc["factors"].is_array() || doc["factors"].size() < 2) {
            throw InvalidInputError("product ring needs at least two 'factors'");
        }
        std::vector<RingPtr> factors;
        std::uint64_t total = 1;
        for (const auto &f : doc["factors"]) {
            factors.push_back(ring_from_json(f));
            total *= factors.back()->size();
            if (total > kMaxRingSize) {
                throw ResourceError("product ring exceeds the ring size bound");
            }
        }
        ring = fold_product(factors);
    } else {
        throw InvalidInputError("unknown ring family '" + family + "'");
    }
    if (doc.contains("character")) {
        const Json &ch = doc["character"];
        if (!ch.is_array() || ch.size() != ring->size()) {
            throw InvalidInputError("'character' must list one turn per element");
        }
        std::vector<Turn> eps;
        for (const auto &t : ch) {
            if (!t.is_string()) {
                throw InvalidInputError("character values are \"num/den\" strings");
            }
            eps.push_back(Turn::parse(t.get<std::string>()));
        }
        ring = std::make_shared<const Ring>(ring->with_character(std::move(eps)));
    }
    return ring;
}

Json ring_to_json(const Family &family) {
    Json out;
    switch (family.kind) {
        case Family::Kind::zm:
            out["family"] = family.e <= 1 ? "zm" : "chain";
            out["m"] = family.m;
            if (family.e > 1) {
                out["e"] = family.e;
            }
            break;
        case Family::Kind::chain:
            out["family"] = "chain";
            out["m"] = family.m;
            out["e"] = family.e;
            break;
        case Family::Kind::product:
            out["family"] = "product";
            out["factors"] = Json::array();
            for (const auto &f : family.factors) {
                out["factors"].push_back(ring_to_json(f));
            }
            break;
        case Family::Kind::custom:
            out["family"] = "custom";
            out["size"] = family.size;
            break;
    }
    return out;
}

Element element_from_json(const Ring &ring, const Json &doc) {
    std::size_t idx = element_index(ring.family(), doc);
    if (idx >= ring.size()) {
        throw InvalidInputError("element out of range: " + doc.dump());
    }
    return Element(idx);
}

Json element_to_json(const Ring &ring, Element x) {
    return element_doc(ring.family(), x);
}

Vector vector_from_json(const Ring &ring, const Json &doc, int rank) {
    if (!doc.is_array() || static_cast<int>(doc.size()) != rank) {
        throw InvalidInputError("vector needs " + std::to_string(rank) + " entries, got " + doc.dump());
    }
    Vector v;
    for (const auto &x : doc) {
        v.push_back(element_from_json(ring, x));
    }
    return v;
}

Json vector_to_json(const Ring &ring, const Vector &v) {
    Json out = Json::array();
    for (Element x : v) {
        out.push_back(element_to_json(ring, x));
    }
    return out;
}

BilinearForm form_from_json(const Ring &ring, const Json &doc, int k) {
    if (doc.is_null()) {
        return BilinearForm::identity(ring, k);
    }
    if (!doc.is_array() || static_cast<int>(doc.size()) != k) {
        throw InvalidInputError("form must be a " + std::to_string(k) + "x" + std::to_string(k) + " matrix");
    }
    BilinearForm form{k, {}};
    for (const auto &row : doc) {
        Vector r = vector_from_json(ring, row, k);
        form.entries.insert(form.entries.end(), r.begin(), r.end());
    }
    return form;
}

Json form_to_json(const Ring &ring, const BilinearForm &form) {
    Json out = Json::array();
    for (int i = 0; i < form.k; i++) {
        Json row = Json::array();
        for (int j = 0; j < form.k; j++) {
            row.push_back(element_to_json(ring, form.at(i, j)));
        }
        out.push_back(row);
    }
    return out;
}

WeylElement weyl_from_json(const PhaseSpace &space, const Json &doc) {
    if (!doc.is_object() || !doc.contains("a") || !doc.contains("b")) {
        throw InvalidInputError("Weyl element needs 'a' and 'b'");
    }
    Turn t;
    if (doc.contains("turn")) {
        if (!doc["turn"].is_string()) {
            throw InvalidInputError("turn must be a \"num/den\" string");
        }
        t = Turn::parse(doc["turn"].get<std::string>());
    }
    return {t, vector_from_json(space.r(), doc["a"], space.rank()), vector_from_json(space.r(), doc["b"], space.rank())};
}

Json weyl_to_json(const PhaseSpace &space, const WeylElement &e) {
    Json out;
    out["turn"] = e.turn.str();
    out["a"] = vector_to_json(space.r(), e.a);
    out["b"] = vector_to_json(space.r(), e.b);
    return out;
}

Json label_to_json(const PhaseSpace &space, const LabelPair &p) {
    Json out;
    out["a"] = vector_to_json(space.r(), p.a);
    out["b"] = vector_to_json(space.r(), p.b);
    return out;
}

const PhaseSpace &Scenario::require_space() const {
    if (!space) {
        throw InvalidInputError("scenario has no 'space' section");
    }
    return *space;
}

Scenario scenario_from_json(const Json &doc, bool ring_only) {
    if (!doc.is_object()) {
        throw InvalidInputError("scenario must be a JSON object");
    }
    Scenario sc;
    const Json *ring_doc = nullptr;
    if (doc.contains("ring")) {
        ring_doc = &doc["ring"];
    } else if (doc.contains("space") && doc["space"].contains("ring")) {
        ring_doc = &doc["space"]["ring"];
    } else {
        throw InvalidInputError("scenario has no ring document");
    }
    sc.ring = ring_from_json(*ring_doc);
    if (ring_only) {
        return sc;
    }
    if (doc.contains("space")) {
        const Json &sp = doc["space"];
        if (!sp.is_object() || !sp.contains("k") || !sp.contains("n") || !sp["k"].is_number_integer() ||
            !sp["n"].is_number_integer()) {
            throw InvalidInputError("space document needs integer 'k' and 'n'");
        }
        int k = sp["k"].get<int>();
        int n = sp["n"].get<int>();
        if (k < 1 || n < 1) {
            throw InvalidInputError("space needs k >= 1 and n >= 1");
        }
        BilinearForm form = form_from_json(*sc.ring, sp.contains("form") ? sp["form"] : Json(), k);
        sc.space.emplace(sc.ring, k, n, std::move(form));
    }
    auto generators = [&](const char *section) -> const Json & {
        const Json &sec = doc[section];
        if (!sec.is_object() || !sec.contains("generators") || !sec["generators"].is_array()) {
            throw InvalidInputError(std::string("'") + section + "' needs a 'generators' list");
        }
        return sec["generators"];
    };
    if (doc.contains("code")) {
        const PhaseSpace &space = sc.require_space();
        std::vector<Vector> gens;
        for (const auto &g : generators("code")) {
            gens.push_back(vector_from_json(*sc.ring, g, space.rank()));
        }
        sc.code = std::move(gens);
    }
    if (doc.contains("stabiliser")) {
        const PhaseSpace &space = sc.require_space();
        std::vector<WeylElement> gens;
        for (const auto &g : generators("stabiliser")) {
            gens.push_back(weyl_from_json(space, g));
        }
        sc.stabiliser = std::move(gens);
    }
    if (doc.contains("ideal")) {
        std::vector<Element> gens;
        for (const auto &g : generators("ideal")) {
            gens.push_back(element_from_json(*sc.ring, g));
        }
        sc.ideal = std::move(gens);
    }
    return sc;
}

Json parse_json_text(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw InvalidInputError(std::string("malformed JSON: ") + e.what());
    }
}

Json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInputError("cannot open scenario file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
}

Scenario load_scenario(const std::string &path, bool ring_only) {
    return scenario_from_json(load_json_file(path), ring_only);
}

}  // namespace frobqec
