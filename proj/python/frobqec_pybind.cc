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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "frobqec/code_analysis.h"
#include "frobqec/commands.h"
#include "frobqec/documents.h"
#include "frobqec/errors.h"
#include "frobqec/state_oracle.h"
#include "frobqec/weyl.h"

namespace py = pybind11;
using namespace frobqec;

namespace {

using PyTurn = std::pair<std::int64_t, std::int64_t>;
using PyWeyl = std::tuple<std::string, Vector, Vector>;

using MutRing = std::shared_ptr<Ring>;

// pybind11 holders cannot be const; the core never mutates a Ring.
MutRing hold(const RingPtr &r) { return std::const_pointer_cast<Ring>(r); }

PyTurn to_py(const Turn &t) { return {t.num(), t.den()}; }

void check_vector(const PhaseSpace &s, const Vector &v) {
    if (static_cast<int>(v.size()) != s.rank()) throw InvalidInputError("vector has the wrong length");
    for (Element x : v) {
        if (x >= s.r().size()) throw InvalidInputError("vector entry out of range");
    }
}

WeylElement from_py(const PhaseSpace &s, const PyWeyl &w) {
    check_vector(s, std::get<1>(w));
    check_vector(s, std::get<2>(w));
    return {Turn::parse(std::get<0>(w)), std::get<1>(w), std::get<2>(w)};
}

PyWeyl to_py(const WeylElement &e) { return {e.turn.str(), e.a, e.b}; }

std::vector<WeylElement> from_py(const PhaseSpace &s, const std::vector<PyWeyl> &gens) {
    std::vector<WeylElement> out;
    for (const auto &g : gens) out.push_back(from_py(s, g));
    return out;
}

Submodule code_of(const PhaseSpace &s, const std::vector<Vector> &gens) {
    for (const Vector &v : gens) check_vector(s, v);
    return submodule_span(s, gens);
}

}  // namespace

PYBIND11_MODULE(_frobqec, m) {
    m.doc() = "Codes and Weyl systems over finite Frobenius rings";

    py::register_exception<InvalidInputError>(m, "InvalidInputError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

    m.def(
        "run_command",
        [](const std::string &name, const std::string &scenario, bool json, std::uint64_t max_elems) {
            Json doc;
            try {
                doc = scenario.empty() ? Json::object() : parse_json_text(scenario);
            } catch (const InvalidInputError &e) {
                return std::pair<int, std::string>{kExitInvalid,
                                                   Json{{"error", "invalid_input"}, {"message", e.what()}}.dump()};
            }
            CommandResult r = run_command(name, doc, CommandOptions{json, max_elems});
            return std::pair<int, std::string>{r.exit_code, r.report.dump()};
        },
        py::arg("name"), py::arg("scenario"), py::arg("json") = true, py::arg("max_elems") = 0);

    m.def("command_names", &command_names);

    m.def("builtin_examples", [] {
        std::vector<std::tuple<std::string, std::string, bool, std::string>> out;
        for (const auto &c : run_builtin_examples()) out.emplace_back(c.scenario, c.name, c.passed, c.detail);
        return out;
    });

    py::class_<Ring, MutRing>(m, "Ring")
        .def_static("from_json", [](const std::string &text) { return hold(ring_from_json(parse_json_text(text))); })
        .def_property_readonly("size", &Ring::size)
        .def_property_readonly("family", [](const Ring &r) { return r.family().describe(); })
        .def("to_json", [](const Ring &r) { return ring_to_json(r.family()).dump(); })
        .def("element", [](const Ring &r, const std::string &text) {
            return element_from_json(r, parse_json_text(text));
        })
        .def("element_json", [](const Ring &r, Element x) {
            if (x >= r.size()) throw InvalidInputError("element out of range");
            return element_to_json(r, x).dump();
        })
        .def("add", [](const Ring &r, Element x, Element y) {
            if (x >= r.size() || y >= r.size()) throw InvalidInputError("element out of range");
            return r.add(x, y);
        })
        .def("mul", [](const Ring &r, Element x, Element y) {
            if (x >= r.size() || y >= r.size()) throw InvalidInputError("element out of range");
            return r.mul(x, y);
        })
        .def("epsilon", [](const Ring &r, Element x) {
            if (x >= r.size()) throw InvalidInputError("element out of range");
            return to_py(r.epsilon(x));
        })
        .def("is_generating", [](const Ring &r) { return verify_generating_character(r); })
        .def("nilradical", [](const MutRing &r) { return nilradical(r).elements; })
        .def("nilpotency_index", [](const MutRing &r) { return nilpotency_index(nilradical(r)); });

    m.def("make_zm", [](int mod) { return hold(make_zm(mod)); });
    m.def("make_chain_ring", [](int mod, int e) { return hold(make_chain_ring(mod, e)); });
    m.def("make_product", [](const MutRing &a, const MutRing &b) { return hold(make_product(a, b)); });

    py::class_<PhaseSpace>(m, "PhaseSpace")
        .def(py::init([](const MutRing &ring, int k, int n, const std::string &form) {
                 return make_space(ring, k, n, form_from_json(*ring, parse_json_text(form), k));
             }),
             py::arg("ring"), py::arg("k"), py::arg("n"), py::arg("form") = "null")
        .def_property_readonly("ring", [](const PhaseSpace &s) { return hold(s.ring()); })
        .def_property_readonly("k", &PhaseSpace::k)
        .def_property_readonly("n", &PhaseSpace::n)
        .def_property_readonly("rank", &PhaseSpace::rank)
        .def_property_readonly("size", &PhaseSpace::size)
        .def("vector", [](const PhaseSpace &s, const std::string &text) {
            return vector_from_json(s.r(), parse_json_text(text), s.rank());
        })
        .def("phase_pairing", [](const PhaseSpace &s, const Vector &v, const Vector &w) {
            check_vector(s, v);
            check_vector(s, w);
            return to_py(s.phase_pairing(v, w));
        })
        .def("omega", [](const PhaseSpace &s, const Vector &a, const Vector &b, const Vector &a2, const Vector &b2) {
            for (const Vector *v : {&a, &b, &a2, &b2}) check_vector(s, *v);
            return to_py(omega(s, {a, b}, {a2, b2}));
        })
        .def("weyl_mul", [](const PhaseSpace &s, const PyWeyl &x, const PyWeyl &y) {
            return to_py(weyl_mul(s, from_py(s, x), from_py(s, y)));
        })
        .def("commutator", [](const PhaseSpace &s, const PyWeyl &x, const PyWeyl &y) {
            return to_py(commutator(s, from_py(s, x), from_py(s, y)));
        })
        .def("code_sizes", [](const PhaseSpace &s, const std::vector<Vector> &gens) {
            Submodule c = code_of(s, gens);
            return std::make_tuple(c.size(), orthogonal(s, c).size(), is_self_orthogonal(s, c));
        })
        .def("group_order", [](const PhaseSpace &s, const std::vector<PyWeyl> &gens) {
            return group_closure(s, from_py(s, gens)).order();
        })
        .def("code_dimension", [](const PhaseSpace &s, const std::vector<PyWeyl> &gens, bool fix) {
            StabiliserGroup g = group_closure(s, from_py(s, gens));
            return code_dimension(s, fix ? phase_fix(s, g) : g);
        }, py::arg("generators"), py::arg("phase_fix") = false)
        .def("projector_rank", [](const PhaseSpace &s, const std::vector<PyWeyl> &gens, bool fix) {
            StabiliserGroup g = group_closure(s, from_py(s, gens));
            return projector_rank(s, fix ? phase_fix(s, g) : g);
        }, py::arg("generators"), py::arg("phase_fix") = false)
        .def("invariants", [](const PhaseSpace &s) {
            InvariantReport r = invariants(s);
            return std::make_tuple(r.frobenius_rank, r.nilpotent_height, r.commutator_depth);
        });
}
