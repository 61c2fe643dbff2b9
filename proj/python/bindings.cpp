/*
 *  Copyright (C) 2026  The elpkit authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "elp/analysis.hpp"
#include "elp/interface.hpp"

namespace py = pybind11;
using namespace elp;

namespace {

Semantics semantics_of(const std::string& s) {
    if (s == "as") return Semantics::AS;
    if (s == "ras") return Semantics::RAS;
    throw PreconditionError("semantics must be 'as' or 'ras'");
}

ReductMode reduct_of(const std::string& s) {
    if (s == "shen-eiter") return ReductMode::SHEN_EITER;
    if (s == "fresh") return ReductMode::FRESH_ATOM;
    throw PreconditionError("reduct must be 'shen-eiter' or 'fresh'");
}

SolveOptions options(const std::string& semantics, const std::string& reduct, const std::string& method) {
    if (method != "scenario" && method != "oracle") throw PreconditionError("method must be 'scenario' or 'oracle'");
    SolveOptions o;
    o.semantics = semantics_of(semantics);
    o.mode = reduct_of(reduct);
    o.oracle = method == "oracle";
    return o;
}

std::vector<std::string> names(const Interpretation& i) {
    std::vector<std::string> out;
    for (const Atom& a : i) out.push_back(a.to_string());
    return out;
}

std::vector<std::vector<std::string>> names(const std::vector<Interpretation>& fam) {
    std::vector<std::vector<std::string>> out;
    for (const Interpretation& i : fam) out.push_back(names(i));
    return out;
}

std::vector<std::string> names(const std::set<EpistemicLiteral>& s) {
    std::vector<std::string> out;
    for (const EpistemicLiteral& l : s) out.push_back(l.to_string());
    return out;
}

py::dict world_view_dict(const WorldView& w) {
    py::dict d;
    d["guess"] = names(w.guess.assumed);
    d["answer_sets"] = names(w.answer_sets);
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Epistemic logic program toolkit";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());

    py::class_<GroundProgram>(m, "Program")
        .def("__str__", [](const GroundProgram& gp) { return print_program(gp); })
        .def("__repr__", [](const GroundProgram& gp) {
            return "<Program rules=" + std::to_string(gp.rules.size()) + " constraints=" +
                   std::to_string(gp.constraints.size()) + ">";
        })
        .def_property_readonly("has_epistemic", &GroundProgram::has_epistemic)
        .def_property_readonly("atoms", [](const GroundProgram& gp) {
            std::set<Atom> a = gp.atoms();
            return names(Interpretation(a.begin(), a.end()));
        })
        .def_property_readonly("epistemic_literals",
                               [](const GroundProgram& gp) { return names(epistemic_literals(gp)); });

    m.def("load", &load_program, py::arg("text"), "Parse, ground and normalize program text.");
    m.def("load_file", &load_program_file, py::arg("path"));

    m.def(
        "answer_sets",
        [](const GroundProgram& gp, const std::string& semantics) {
            return names(answer_sets(gp, semantics_of(semantics)));
        },
        py::arg("program"), py::arg("semantics") = "as");

    m.def(
        "world_views",
        [](const GroundProgram& gp, const std::string& semantics, const std::string& reduct, const std::string& method) {
            py::list out;
            for (const WorldView& w : compute_world_views(gp, options(semantics, reduct, method)))
                out.append(world_view_dict(w));
            return out;
        },
        py::arg("program"), py::arg("semantics") = "as", py::arg("reduct") = "shen-eiter",
        py::arg("method") = "scenario");

    m.def(
        "scenarios",
        [](const GroundProgram& gp) {
            py::list out;
            for (const Scenario& s : epistemic_scenarios(gp)) {
                py::dict d;
                d["positive"] = names(s.positive);
                d["negative"] = names(s.negative);
                out.append(d);
            }
            return out;
        },
        py::arg("program"));

    m.def(
        "check_guess",
        [](const GroundProgram& gp, const std::string& guess, const std::string& semantics, const std::string& reduct) {
            SolveOptions o = options(semantics, reduct, "scenario");
            Guess g = parse_guess(guess);
            std::optional<WorldView> wv = candidate_world_view(gp, g, o.mode, o.semantics);
            bool candidate = o.semantics == Semantics::RAS && o.mode == ReductMode::FRESH_ATOM ? rascgk_check(gp, g)
                                                                                            : wv.has_value();
            bool valid = false;
            if (candidate)
                for (const Guess& v : valid_guesses(gp, o.mode, o.semantics)) valid = valid || v == g;
            py::dict d;
            d["candidate"] = candidate;
            d["valid"] = valid;
            d["answer_sets"] = wv ? py::cast(names(wv->answer_sets)) : py::none();
            return d;
        },
        py::arg("program"), py::arg("guess"), py::arg("semantics") = "as", py::arg("reduct") = "shen-eiter");

    m.def(
        "query",
        [](const GroundProgram& gp, const std::string& text, const std::string& semantics, const std::string& reduct,
           std::size_t view) {
            if (view == 0) throw PreconditionError("view counts from 1");
            std::vector<WorldView> wvs = compute_world_views(gp, options(semantics, reduct, "scenario"));
            return eval_conjunction(wvs, parse_query(text), view - 1).value;
        },
        py::arg("program"), py::arg("query"), py::arg("semantics") = "as", py::arg("reduct") = "shen-eiter",
        py::arg("view") = 1);

    m.def(
        "derive",
        [](const GroundProgram& gp, const std::string& layer, const std::string& semantics, const std::string& reduct) {
            std::set<Atom> d = layer_consequences(compute_world_views(gp, options(semantics, reduct, "scenario")),
                                                  parse_layer_rules(layer));
            return names(Interpretation(d.begin(), d.end()));
        },
        py::arg("program"), py::arg("layer"), py::arg("semantics") = "as", py::arg("reduct") = "shen-eiter");

    m.def(
        "bound",
        [](const GroundProgram& gp) {
            BoundReport b = guess_count_bound(gp);
            py::dict d;
            d["n_hat"] = b.n_hat;
            d["n"] = b.n;
            d["bold_n"] = b.bold_n;
            d["bound"] = b.bound;
            return d;
        },
        py::arg("program"));

    m.def(
        "analyze",
        [](const GroundProgram& gp) {
            CoincidenceReport r = check_coincidence(gp);
            py::dict d;
            d["call_consistent"] = r.call_consistent;
            d["as_consistent"] = r.as_consistent;
            d["condition1"] = r.condition1;
            d["condition2"] = r.condition2;
            d["text"] = to_text(r);
            return d;
        },
        py::arg("program"));
}
