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

#include "elp/as_engine.hpp"

#include <algorithm>

#include "solver.hpp"

namespace elp {

namespace {

void require_epistemic_free(const GroundProgram& gp, const char* op) {
    if (gp.has_epistemic()) throw PreconditionError(std::string(op) + ": program contains epistemic literals");
}

} // namespace

PositiveProgram gl_reduct(const GroundProgram& gp, const Interpretation& i) {
    require_epistemic_free(gp, "gl_reduct");
    PositiveProgram pp;
    for (const Rule& r : gp.rules) {
        bool blocked = std::any_of(r.body.begin(), r.body.end(),
                                   [&](const Literal& l) { return l.form == Form::NAF && i.count(l.atom); });
        if (blocked) continue;
        PositiveRule pr{*r.head, {}};
        for (const Literal& l : r.body)
            if (l.form == Form::POS) pr.body.push_back(l.atom);
        pp.rules.push_back(std::move(pr));
    }
    return pp;
}

Interpretation least_model(const PositiveProgram& pp) {
    Interpretation m;
    for (bool changed = true; changed;) {
        changed = false;
        for (const PositiveRule& r : pp.rules) {
            if (m.count(r.head)) continue;
            if (std::all_of(r.body.begin(), r.body.end(), [&](const Atom& a) { return m.count(a) > 0; })) {
                m.insert(r.head);
                changed = true;
            }
        }
    }
    return m;
}

Interpretation gamma(const GroundProgram& gp, const Interpretation& i) {
    return least_model(gl_reduct(gp, i));
}

bool satisfies_constraints(const GroundProgram& gp, const Interpretation& i) {
    require_epistemic_free(gp, "satisfies_constraints");
    for (const Rule& c : gp.constraints) {
        bool body = std::all_of(c.body.begin(), c.body.end(), [&](const Literal& l) {
            return (l.form == Form::POS) == (i.count(l.atom) > 0);
        });
        if (body) return false;
    }
    return true;
}

std::vector<Interpretation> answer_sets_as(const GroundProgram& gp, const EngineLimits& limits) {
    detail::Indexed ix = detail::index_program(gp, "answer_sets_as");
    return detail::to_interpretations(ix, detail::enumerate(ix, Semantics::AS, limits));
}

std::string to_string(const Interpretation& i) {
    std::string out = "{";
    bool first = true;
    for (const Atom& a : i) {
        if (!first) out += ", ";
        out += a.to_string();
        first = false;
    }
    return out + "}";
}

bool interpretation_less(const Interpretation& a, const Interpretation& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_family(std::vector<Interpretation>& family) {
    std::sort(family.begin(), family.end(), interpretation_less);
}

} // namespace elp
