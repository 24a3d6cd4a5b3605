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

#include "frobqec/commands.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "frobqec/code_analysis.h"
#include "frobqec/errors.h"
#include "frobqec/lattice.h"
#include "frobqec/state_oracle.h"
#include "frobqec/weyl.h"

namespace frobqec {

namespace {

std::string hex64(std::uint64_t v) {
    char buf[19];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

Json turns_json(const std::vector<Turn> &turns) {
    Json out = Json::array();
    for (const auto &t : turns) {
        out.push_back(t.str());
    }
    return out;
}

Json elements_json(const Ring &ring, const std::vector<Element> &xs) {
    Json out = Json::array();
    for (Element x : xs) {
        out.push_back(element_to_json(ring, x));
    }
    return out;
}

std::string render_text(const Json &report) {
    std::ostringstream out;
    for (const auto &[key, value] : report.items()) {
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    return out.str();
}

CommandResult finish(int exit_code, Json report, const CommandOptions &options) {
    CommandResult r;
    r.exit_code = exit_code;
    r.output = options.json ? report.dump(2) + "\n" : render_text(report);
    r.report = std::move(report);
    return r;
}

Submodule code_module(const Scenario &sc) {
    if (!sc.code) {
        throw InvalidInputError("scenario has no 'code' section");
    }
    return submodule_span(sc.require_space(), *sc.code);
}

StabiliserGroup stabiliser_group(const Scenario &sc) {
    if (!sc.stabiliser) {
        throw InvalidInputError("scenario has no 'stabiliser' section");
    }
    return group_closure(sc.require_space(), *sc.stabiliser);
}

Ideal ideal_of(const Scenario &sc) {
    if (!sc.ideal) {
        throw InvalidInputError("scenario has no 'ideal' section");
    }
    return ideal_span(sc.ring, *sc.ideal);
}

Json counterexample_json(const PhaseSpace &space, const ProtectionCounterexample &c) {
    Json out;
    out["u"] = vector_to_json(space.r(), c.u);
    out["error"] = label_to_json(space, c.error);
    out["omega"] = c.omega.str();
    return out;
}

Json css_json(const PhaseSpace &space, const CssVerdict &v) {
    Json out;
    out["status"] = v.status == CssStatus::css ? "css" : "non_css";
    if (v.split) {
        out["shift_part_size"] = v.split->first.size();
        out["phase_part_size"] = v.split->second.size();
    }
    if (v.witness) {
        out["witness"] = label_to_json(space, *v.witness);
        out["witness_phase"] = space.phase_pairing(v.witness->b, v.witness->a).str();
    }
    return out;
}

Json matrix_json(const Ring &ring, const Matrix &g) {
    Json out = Json::array();
    for (int i = 0; i < g.k; i++) {
        Json row = Json::array();
        for (int j = 0; j < g.k; j++) {
            row.push_back(element_to_json(ring, g.at(i, j)));
        }
        out.push_back(row);
    }
    return out;
}

}  // namespace

std::uint64_t character_digest(const Ring &ring) {
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&](const std::string &s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
    };
    for (std::size_t x = 0; x < ring.size(); x++) {
        feed(ring.epsilon(Element(x)).str());
        feed(",");
    }
    return h;
}

CommandResult cmd_ring_info(const Json &doc, const CommandOptions &options) {
    Scenario sc = scenario_from_json(doc, true);
    const Ring &ring = *sc.ring;
    bool generating = verify_generating_character(ring);
    Ideal nil = nilradical(sc.ring);
    Json report;
    report["family"] = ring.family().describe();
    report["size"] = ring.size();
    report["generating"] = generating;
    report["nilradical"] = elements_json(ring, nil.elements);
    report["nilradical_size"] = nil.size();
    report["nilpotency_index"] = nilpotency_index(nil);
    std::int64_t order = 1;
    for (const auto &t : ring.character()) {
        order = std::lcm(order, t.den());
    }
    Json digest;
    digest["order"] = order;
    digest["fnv1a"] = hex64(character_digest(ring));
    if (ring.size() <= 64) {
        digest["values"] = turns_json(ring.character());
    }
    report["character"] = digest;
    return finish(generating ? kExitAffirmative : kExitNegative, std::move(report), options);
}

CommandResult cmd_code_check(const Json &doc, const CommandOptions &options) {
    Scenario sc = scenario_from_json(doc);
    const PhaseSpace &space = sc.require_space();
    Submodule c = code_module(sc);
    Submodule perp = orthogonal(space, c);
    bool so = is_self_orthogonal(space, c);
    Json report;
    report["size_H"] = space.size();
    report["size_C"] = c.size();
    report["size_C_perp"] = perp.size();
    report["self_orthogonal"] = so;
    report["duality"] = static_cast<std::uint64_t>(c.size()) * perp.size() == space.size();
    return finish(so ? kExitAffirmative : kExitNegative, std::move(report), options);
}

CommandResult cmd_stabiliser(const Json &doc, const CommandOptions &options) {
    Scenario sc = scenario_from_json(doc);
    const PhaseSpace &space = sc.require_space();
    StabiliserGroup s = stabiliser_group(sc);
    Json report;
    report["order"] = s.order();
    report["scalar_turns"] = turns_json(s.scalar_turns);
    auto bad = first_noncommuting_pair(space, s);
    report["abelian_mod_scalars"] = !bad.has_value();
    if (bad) {
        Json pair;
        pair["first"] = bad->first;
        pair["second"] = bad->second;
        pair["omega"] =
            omega(space, labels(s.generators[bad->first]), labels(s.generators[bad->second])).str();
        report["offending_pair"] = pair;
        return finish(kExitNegative, std::move(report), options);
    }
    Submodule l = label_module_of(space, s);
    report["label_module_size"] = l.size();
    report["isotropic"] = is_isotropic(space, l);
    StabiliserGroup fixed = phase_fix(space, s);
    Json fix;
    Json gens = Json::array();
    for (const auto &g : fixed.generators) {
        gens.push_back(weyl_to_json(space, g));
    }
    fix["generators"] = gens;
    fix["order"] = fixed.order();
    fix["scalar_free"] = fixed.scalar_free();
    report["phase_fix"] = fix;
    report["code_dimension"] = code_dimension(space, fixed);
    report["css"] = css_json(space, css_verdict(space, l));
    return finish(kExitAffirmative, std::move(report), options);
}

CommandResult cmd_protect(const Json &doc, const CommandOptions &options) {
    Scenario sc = scenario_from_json(doc);
    const PhaseSpace &space = sc.require_space();
    Ideal n = ideal_of(sc);
    ProtectionReport p = check_nilpotent_protection(space, n);
    Json report;
    report["protection"] = p.passed ? "pass" : "fail";
    report["ideal"] = elements_json(space.r(), n.elements);
    report["square_zero"] = p.square_zero;
    report["self_orthogonal"] = p.self_orthogonal;
    report["layer_size"] = p.layer_size;
    report["admissible_phases"] = p.admissible_phases;
    report["pairs_checked"] = p.pairs_checked;
    report["counterexample"] = p.counterexample ? counterexample_json(space, *p.counterexample) : Json();
    report["non_admissible_demo"] =
        p.non_admissible_demo ? counterexample_json(space, *p.non_admissible_demo) : Json();
    return finish(p.passed ? kExitAffirmative : kExitNegative, std::move(report), options);
}

CommandResult cmd_census(const Json &doc, const CommandOptions &options) {
    Scenario sc = scenario_from_json(doc);
    const PhaseSpace &space = sc.require_space();
    const FreeModule &d = space.doubled();
    if (d.size() > (std::uint64_t{1} << 16)) {
        throw ResourceError("census needs |H + H| <= 65536, got " + std::to_string(d.size()));
    }
    std::uint64_t cap = options.max_elems == 0 ? d.size() : std::min<std::uint64_t>(options.max_elems, d.size());
    auto modules = enumerate_submodules(d, cap);
    struct Row {
        std::uint64_t submodules = 0, isotropic = 0, css = 0, with_witness = 0, without_witness = 0;
    };
    std::map<std::size_t, Row> rows;
    Row total;
    for (const auto &em : modules) {
        Row &row = rows[em.module.size()];
        row.submodules++;
        total.submodules++;
        if (!is_isotropic(space, em.module)) {
            continue;
        }
        row.isotropic++;
        total.isotropic++;
        CssVerdict v = css_verdict(space, em.module);
        if (v.status == CssStatus::css) {
            row.css++;
            total.css++;
        } else if (v.witness) {
            row.with_witness++;
            total.with_witness++;
        } else {
            row.without_witness++;
            total.without_witness++;
        }
    }
    Json report;
    report["ambient_size"] = d.size();
    report["max_elems"] = cap;
    report["submodules"] = total.submodules;
    report["isotropic"] = total.isotropic;
    report["css"] = total.css;
    report["non_css_with_witness"] = total.with_witness;
    report["non_css_without_witness"] = total.without_witness;
    Json table = Json::array();
    for (const auto &[size, row] : rows) {
        Json r;
        r["size"] = size;
        r["submodules"] = row.submodules;
        r["isotropic"] = row.isotropic;
        r["css"] = row.css;
        r["non_css_with_witness"] = row.with_witness;
        r["non_css_without_witness"] = row.without_witness;
        table.push_back(r);
    }
    report["by_size"] = table;
    return finish(kExitAffirmative, std::move(report), options);
}

CommandResult cmd_oracle(const Json &doc, const CommandOptions &options) {
    Scenario sc = scenario_from_json(doc);
    const PhaseSpace &space = sc.require_space();
    StabiliserGroup s = stabiliser_group(sc);
    Json report;
    if (first_noncommuting_pair(space, s)) {
        report["abelian_mod_scalars"] = false;
        return finish(kExitNegative, std::move(report), options);
    }
    std::uint64_t pairs = 0;
    bool commute_ok = true;
    for (std::size_t i = 0; i < s.generators.size(); i++) {
        for (std::size_t j = i; j < s.generators.size(); j++) {
            pairs++;
            commute_ok = commute_ok && numeric_commutation_check(space, s.generators[i], s.generators[j]);
        }
    }
    StabiliserGroup fixed = phase_fix(space, s);
    std::uint64_t dim = code_dimension(space, fixed);
    std::uint64_t rank = projector_rank(space, fixed);
    report["abelian_mod_scalars"] = true;
    report["commutation_pairs"] = pairs;
    report["commutation_ok"] = commute_ok;
    report["code_dimension"] = dim;
    report["projector_rank"] = rank;
    report["unfixed_projector_rank"] = projector_rank(space, s);
    report["agree"] = dim == rank;
    return finish(commute_ok && dim == rank ? kExitAffirmative : kExitNegative, std::move(report), options);
}

CommandResult cmd_invariants(const Json &doc, const CommandOptions &options) {
    Scenario sc = scenario_from_json(doc);
    InvariantReport inv = invariants(sc.require_space());
    Json report;
    report["frobenius_rank"] = inv.frobenius_rank;
    report["nilpotent_height"] = inv.nilpotent_height;
    report["commutator_depth"] = inv.commutator_depth;
    return finish(kExitAffirmative, std::move(report), options);
}

CommandResult cmd_isometries(const Json &doc, const CommandOptions &options) {
    Scenario sc = scenario_from_json(doc);
    const PhaseSpace &space = sc.require_space();
    IsometryGroup g = isometry_group(space);
    Json report;
    report["k"] = g.k;
    report["count"] = g.matrices.size();
    if (g.matrices.size() <= 64) {
        Json ms = Json::array();
        for (const auto &m : g.matrices) {
            ms.push_back(matrix_json(space.r(), m));
        }
        report["matrices"] = ms;
    }
    bool all_ok = true;
    if (sc.code) {
        Submodule c = code_module(sc);
        bool so = is_self_orthogonal(space, c);
        bool ok = true;
        for (const auto &m : g.matrices) {
            Submodule img = isometry_action(space, m, c);
            ok = ok && img.size() == c.size() && is_self_orthogonal(space, img) == so;
        }
        report["code_preserved"] = ok;
        all_ok = all_ok && ok;
    }
    if (sc.stabiliser) {
        StabiliserGroup s = stabiliser_group(sc);
        if (!first_noncommuting_pair(space, s)) {
            StabiliserGroup fixed = phase_fix(space, s);
            std::uint64_t dim = code_dimension(space, fixed);
            bool ok = true;
            for (const auto &m : g.matrices) {
                StabiliserGroup img = isometry_action(space, m, fixed);
                ok = ok && is_abelian_mod_scalars(space, img) && code_dimension(space, img) == dim &&
                     is_isotropic(space, label_module_of(space, img));
            }
            report["stabiliser_preserved"] = ok;
            all_ok = all_ok && ok;
        }
    }
    return finish(all_ok ? kExitAffirmative : kExitNegative, std::move(report), options);
}

// ---------------------------------------------------------------------------
// Built-in worked examples.

Json builtin_scenario(const std::string &key) {
    if (key == "f2u") {
        return Json::parse(R"({
  "ring": {"family": "chain", "m": 2, "e": 2},
  "space": {"k": 2, "n": 1},
  "code": {"generators": [["u", 0], [0, "u"]]},
  "stabiliser": {"generators": [
    {"turn": "0/1", "a": [1, 0], "b": ["u", 0]},
    {"turn": "0/1", "a": [0, 1], "b": [0, "u"]}
  ]},
  "ideal": {"generators": ["u"]}
})");
    }
    if (key == "z4") {
        return Json::parse(R"({
  "ring": {"family": "zm", "m": 4},
  "space": {"k": 1, "n": 2},
  "code": {"generators": [[2, 0], [0, 2]]},
  "ideal": {"generators": [2]}
})");
    }
    throw InvalidInputError("unknown built-in scenario '" + key + "'");
}

namespace {

PhaseSpace dot_space(const RingPtr &ring, int k, int n) {
    return make_space(ring, k, n, BilinearForm::identity(*ring, k));
}

bool all_vectors(const PhaseSpace &space, const std::function<bool(const Vector &, const Vector &)> &pred) {
    const FreeModule &h = space.module();
    for (Code x = 0; x < h.size(); x++) {
        Vector vx = h.decode(x);
        for (Code y = 0; y < h.size(); y++) {
            if (!pred(vx, h.decode(y))) {
                return false;
            }
        }
    }
    return true;
}

std::vector<ExampleCheck> f2u_checks() {
    const std::string tag = "F2+uF2";
    RingPtr r = make_chain_ring(2, 2);
    const Element one = 1, u = 2;
    std::vector<ExampleCheck> out;
    auto add = [&](const std::string &name, const std::function<bool()> &fn) {
        ExampleCheck c{tag, name, false, ""};
        try {
            c.passed = fn();
        } catch (const std::exception &e) {
            c.detail = e.what();
        }
        out.push_back(std::move(c));
    };
    add("epsilon(u) = 1/2 and epsilon(1) = 0/1",
        [&] { return r->epsilon(u) == Turn(1, 2) && r->epsilon(one).is_zero(); });
    add("epsilon is generating", [&] { return verify_generating_character(*r); });
    add("<1, u> = 1/2 and <u, u> = 0/1",
        [&] { return ring_pairing(*r, one, u) == Turn(1, 2) && ring_pairing(*r, u, u).is_zero(); });
    add("nilradical = {0, u}", [&] { return nilradical(r).elements == std::vector<Element>{0, u}; });
    add("(u) has nilpotency index 2", [&] { return nilpotency_index(ideal_span(r, {u})) == 2; });
    add("ideal span{u} = {0, u}", [&] { return ideal_span(r, {u}).elements == std::vector<Element>{0, u}; });
    add("|H| = 256 for k = n = 2", [&] { return dot_space(r, 2, 2).size() == 256; });
    add("beta((u,0),(1,0)) = u", [&] { return dot_space(r, 2, 1).form_eval({u, 0}, {one, 0}) == u; });
    add("<(1,0),(u,0)> = 1/2", [&] { return dot_space(r, 2, 1).phase_pairing({one, 0}, {u, 0}) == Turn(1, 2); });
    add("span{(u,0),(0,u)} = uV has 4 elements", [&] {
        PhaseSpace s = dot_space(r, 2, 1);
        return submodule_span(s, {{u, 0}, {0, u}}).size() == 4;
    });
    add("uH is self-orthogonal with 16 elements (k = n = 2)", [&] {
        PhaseSpace s = dot_space(r, 2, 2);
        Submodule c = nilpotent_code(s, ideal_span(r, {u}));
        return c.size() == 16 && is_self_orthogonal(s, c);
    });
    add("<ux, uy> = 0/1 for all x, y in H (k = n = 2)", [&] {
        PhaseSpace s = dot_space(r, 2, 2);
        const FreeModule &h = s.module();
        return all_vectors(s, [&](const Vector &x, const Vector &y) {
            return s.phase_pairing(h.scale(u, x), h.scale(u, y)).is_zero();
        });
    });
    PhaseSpace s21 = dot_space(r, 2, 1);
    const LabelPair g1{{one, 0}, {u, 0}}, g2{{0, one}, {0, u}};
    add("omega((e1,ue1),(e2,ue2)) = 0/1", [&] { return omega(s21, g1, g2).is_zero(); });
    add("W(e1,ue1) and W(e2,ue2) generate an abelian group mod scalars", [&] {
        return is_abelian_mod_scalars(s21, group_closure(s21, {{Turn(), g1.a, g1.b}, {Turn(), g2.a, g2.b}}));
    });
    add("S(L) for L = span{(e1,ue1),(e2,ue2)} contains the scalar 1/2", [&] {
        Submodule l = span(s21.doubled(), {join(g1), join(g2)});
        StabiliserGroup g = stabiliser_of_labels(s21, l);
        return is_abelian_mod_scalars(s21, g) &&
               std::find(g.scalar_turns.begin(), g.scalar_turns.end(), Turn(1, 2)) != g.scalar_turns.end();
    });
    add("L = span{(e1,ue1),(e2,ue2)} is non-CSS with witness (e1,ue1), epsilon = 1/2", [&] {
        Submodule l = span(s21.doubled(), {join(g1), join(g2)});
        CssVerdict v = css_verdict(s21, l);
        return v.status == CssStatus::non_css && v.witness && *v.witness == g1 &&
               s21.phase_pairing(g1.b, g1.a) == Turn(1, 2);
    });
    add("T_a M_b = -M_b T_a numerically for (a, b) = (1, u), k = 1", [&] {
        PhaseSpace s = dot_space(r, 1, 1);
        WeylElement t{Turn(), {one}, {0}}, m{Turn(), {0}, {u}};
        double worst = 0.0;
        for (std::size_t x = 0; x < s.size(); x++) {
            StateVector f(s.size(), 0.0);
            f[x] = 1.0;
            StateVector tm = apply_weyl(s, t, apply_weyl(s, m, f));
            StateVector mt = apply_weyl(s, m, apply_weyl(s, t, f));
            for (std::size_t y = 0; y < s.size(); y++) {
                worst = std::max(worst, std::abs(tm[y] + mt[y]));
                if (std::abs(mt[y]) > 0.5) {
                    worst = std::max(worst, std::abs(tm[y] / mt[y] - std::complex<double>(-1.0, 0.0)));
                }
            }
        }
        return worst < 1e-9;
    });
    add("nilpotent protection passes for N = (u), k = n = 2", [&] {
        return check_nilpotent_protection(dot_space(r, 2, 2), ideal_span(r, {u})).passed;
    });
    Json doc = builtin_scenario("f2u");
    add("ring command: generating, nilradical size 2", [&] {
        CommandResult c = cmd_ring_info(doc, {});
        return c.exit_code == 0 && c.report["generating"] == true && c.report["nilradical_size"] == 2;
    });
    add("stabiliser command: abelian, non_css witness (e1,ue1), dimension 4", [&] {
        CommandResult c = cmd_stabiliser(doc, {});
        Json w = c.report["css"]["witness"];
        return c.exit_code == 0 && c.report["abelian_mod_scalars"] == true &&
               c.report["css"]["status"] == "non_css" && w["a"] == Json::parse("[[1,0],[0,0]]") &&
               w["b"] == Json::parse("[[0,1],[0,0]]") && c.report["code_dimension"] == 4;
    });
    add("code command: uV is self-orthogonal", [&] { return cmd_code_check(doc, {}).exit_code == 0; });
    add("protect command: N = (u) passes", [&] {
        CommandResult c = cmd_protect(doc, {});
        return c.exit_code == 0 && c.report["protection"] == "pass";
    });
    return out;
}

std::vector<ExampleCheck> z4_checks() {
    const std::string tag = "Z4";
    RingPtr r = make_zm(4);
    std::vector<ExampleCheck> out;
    auto add = [&](const std::string &name, const std::function<bool()> &fn) {
        ExampleCheck c{tag, name, false, ""};
        try {
            c.passed = fn();
        } catch (const std::exception &e) {
            c.detail = e.what();
        }
        out.push_back(std::move(c));
    };
    add("epsilon(x) = i^x, i.e. x/4 turns", [&] {
        for (int x = 0; x < 4; x++) {
            if (r->epsilon(Element(x)) != Turn(x, 4)) {
                return false;
            }
        }
        return r->epsilon(1) == Turn(1, 4) && r->epsilon(1).to_complex() == std::complex<double>(0.0, 1.0);
    });
    add("epsilon is generating", [&] { return verify_generating_character(*r); });
    add("(2) has nilpotency index 2", [&] { return nilpotency_index(ideal_span(r, {2})) == 2; });
    add("<(2,0),(2,0)> = 0/1", [&] { return dot_space(r, 1, 2).phase_pairing({2, 0}, {2, 0}).is_zero(); });
    add("2H = {0,2}^2 is self-orthogonal (k = 1, n = 2)", [&] {
        PhaseSpace s = dot_space(r, 1, 2);
        Submodule c = nilpotent_code(s, ideal_span(r, {2}));
        return c.size() == 4 && is_self_orthogonal(s, c);
    });
    add("2H is self-orthogonal (k = 2, n = 2)", [&] {
        PhaseSpace s = dot_space(r, 2, 2);
        return is_self_orthogonal(s, nilpotent_code(s, ideal_span(r, {2})));
    });
    add("Weyl scalars over k = n = 1 are exactly {1, i, -1, -i}", [&] {
        PhaseSpace s = dot_space(r, 1, 1);
        StabiliserGroup g = group_closure(s, {{Turn(), {1}, {0}}, {Turn(), {0}, {1}}});
        std::set<Turn> got(g.scalar_turns.begin(), g.scalar_turns.end());
        return got == std::set<Turn>{Turn(0, 1), Turn(1, 4), Turn(1, 2), Turn(3, 4)};
    });
    add("nilpotent protection passes for N = (2), with a non-admissible demonstration", [&] {
        ProtectionReport p = check_nilpotent_protection(dot_space(r, 1, 2), ideal_span(r, {2}));
        return p.passed && p.non_admissible_demo.has_value();
    });
    Json doc = builtin_scenario("z4");
    add("code command: 2H self-orthogonal, |C| = |C^perp| = 4", [&] {
        CommandResult c = cmd_code_check(doc, {});
        return c.exit_code == 0 && c.report["size_C"] == 4 && c.report["size_C_perp"] == 4;
    });
    add("protect command: N = (2) passes", [&] { return cmd_protect(doc, {}).exit_code == 0; });
    return out;
}

}  // namespace

std::vector<ExampleCheck> run_builtin_examples() {
    std::vector<ExampleCheck> all = f2u_checks();
    for (auto &c : z4_checks()) {
        all.push_back(std::move(c));
    }
    return all;
}

CommandResult cmd_examples(const CommandOptions &options) {
    std::vector<ExampleCheck> checks = run_builtin_examples();
    bool ok = true;
    for (const auto &c : checks) {
        ok = ok && c.passed;
    }
    CommandResult r;
    r.exit_code = ok ? kExitAffirmative : kExitNegative;
    Json list = Json::array();
    std::ostringstream text;
    for (const auto &c : checks) {
        Json item;
        item["scenario"] = c.scenario;
        item["check"] = c.name;
        item["pass"] = c.passed;
        if (!c.detail.empty()) {
            item["detail"] = c.detail;
        }
        list.push_back(item);
        text << (c.passed ? "PASS " : "FAIL ") << "[" << c.scenario << "] " << c.name;
        if (!c.detail.empty()) {
            text << " (" << c.detail << ")";
        }
        text << "\n";
    }
    r.report["all_passed"] = ok;
    r.report["checks"] = list;
    r.output = options.json ? r.report.dump(2) + "\n" : text.str();
    return r;
}

const std::vector<std::string> &command_names() {
    static const std::vector<std::string> names{"ring",       "code",   "stabiliser", "protect",   "census",
                                                "oracle",     "invariants", "isometries", "examples"};
    return names;
}

CommandResult run_command(const std::string &name, const Json &scenario, const CommandOptions &options) {
    auto fail = [&](int code, const char *kind, const std::string &message) {
        CommandResult r;
        r.exit_code = code;
        r.report["error"] = kind;
        r.report["message"] = message;
        r.output = options.json ? r.report.dump(2) + "\n" : std::string("error (") + kind + "): " + message + "\n";
        return r;
    };
    try {
        if (name == "ring") return cmd_ring_info(scenario, options);
        if (name == "code") return cmd_code_check(scenario, options);
        if (name == "stabiliser") return cmd_stabiliser(scenario, options);
        if (name == "protect") return cmd_protect(scenario, options);
        if (name == "census") return cmd_census(scenario, options);
        if (name == "oracle") return cmd_oracle(scenario, options);
        if (name == "invariants") return cmd_invariants(scenario, options);
        if (name == "isometries") return cmd_isometries(scenario, options);
        if (name == "examples") return cmd_examples(options);
        return fail(kExitInvalid, "invalid_input", "unknown command '" + name + "'");
    } catch (const IllConditionedRank &e) {
        return fail(kExitResource, "ill_conditioned", e.what());
    } catch (const ResourceError &e) {
        return fail(kExitResource, "resource", e.what());
    } catch (const InvalidInputError &e) {
        return fail(kExitInvalid, "invalid_input", e.what());
    } catch (const nlohmann::json::exception &e) {
        return fail(kExitInvalid, "invalid_input", e.what());
    } catch (const ConsistencyError &e) {
        return fail(kExitInternal, "internal", e.what());
    } catch (const std::bad_alloc &) {
        return fail(kExitResource, "resource", "out of memory");
    } catch (const std::exception &e) {
        return fail(kExitInternal, "internal", e.what());
    }
}

}  // namespace frobqec
