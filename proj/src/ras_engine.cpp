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

#include "elp/ras_engine.hpp"

#include <algorithm>
#include <deque>

#include "solver.hpp"

namespace elp {

namespace {

void require_query_literal(const Literal& lit) {
    if (lit.form != Form::POS && lit.form != Form::NAF)
        throw PreconditionError("query literal must be A or not A: " + lit.to_string());
}

// Rules for the dependency closure of `seeds`, plus constraints whose atoms
// all lie in the closure.
GroundProgram closure_program(const GroundProgram& gp, std::set<Atom> seeds) {
    std::map<Atom, std::vector<const Rule*>> by_head;
    for (const Rule& r : gp.rules) by_head[*r.head].push_back(&r);
    std::deque<Atom> work(seeds.begin(), seeds.end());
    while (!work.empty()) {
        Atom a = std::move(work.front());
        work.pop_front();
        auto it = by_head.find(a);
        if (it == by_head.end()) continue;
        for (const Rule* r : it->second)
            for (const Literal& l : r->body)
                if (seeds.insert(l.atom).second) work.push_back(l.atom);
    }
    GroundProgram out;
    out.constants = gp.constants;
    for (const Rule& r : gp.rules)
        if (seeds.count(*r.head)) out.rules.push_back(r);
    for (const Rule& c : gp.constraints) {
        bool inside = std::all_of(c.body.begin(), c.body.end(), [&](const Literal& l) { return seeds.count(l.atom) > 0; });
        if (inside) out.constraints.push_back(c);
    }
    return out;
}

std::set<Atom> constraint_atoms(const GroundProgram& gp) {
    std::set<Atom> out;
    for (const Rule& c : gp.constraints)
        for (const Literal& l : c.body) out.insert(l.atom);
    return out;
}

bool satisfied(const Interpretation& m, const Literal& lit) {
    return (m.count(lit.atom) > 0) == (lit.form == Form::POS);
}

} // namespace

std::optional<SupportCertificate> support_certificate(const GroundProgram& gp, const Interpretation& m) {
    if (gp.has_epistemic()) throw PreconditionError("is_consistently_supported: program contains epistemic literals");
    std::map<Atom, const Rule*> used;
    std::vector<Atom> order;
    for (bool changed = true; changed;) {
        changed = false;
        for (const Rule& r : gp.rules) {
            const Atom& h = *r.head;
            if (!m.count(h) || used.count(h)) continue;
            bool ok = std::all_of(r.body.begin(), r.body.end(), [&](const Literal& l) {
                return l.form == Form::POS ? used.count(l.atom) > 0 : m.count(l.atom) == 0;
            });
            if (ok) {
                used.emplace(h, &r);
                order.push_back(h);
                changed = true;
            }
        }
    }
    if (used.size() != m.size()) return std::nullopt;

    std::map<Atom, std::size_t> rank;
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
    SupportCertificate cert;
    for (const Atom& a : m) {
        std::set<std::size_t> needed;
        std::vector<Atom> work{a};
        while (!work.empty()) {
            Atom x = work.back();
            work.pop_back();
            if (!needed.insert(rank.at(x)).second) continue;
            for (const Literal& l : used.at(x)->body)
                if (l.form == Form::POS) work.push_back(l.atom);
        }
        std::vector<Rule>& rules = cert.support[a];
        for (std::size_t idx : needed) rules.push_back(*used.at(order[idx]));
    }
    return cert;
}

bool is_consistently_supported(const GroundProgram& gp, const Interpretation& m) {
    return support_certificate(gp, m).has_value();
}

std::vector<Interpretation> answer_sets_ras(const GroundProgram& gp, const EngineLimits& limits) {
    detail::Indexed ix = detail::index_program(gp, "answer_sets_ras");
    return detail::to_interpretations(ix, detail::enumerate(ix, Semantics::RAS, limits));
}

std::vector<Interpretation> answer_sets(const GroundProgram& gp, Semantics sem, const EngineLimits& limits) {
    return sem == Semantics::AS ? answer_sets_as(gp, limits) : answer_sets_ras(gp, limits);
}

GroundProgram relevant_subprogram(const GroundProgram& gp, const Atom& a) {
    return closure_program(gp, {a});
}

bool holds_in_some(const GroundProgram& gp, const Literal& lit, const EngineLimits& limits) {
    require_query_literal(lit);
    std::set<Atom> seeds = constraint_atoms(gp);
    seeds.insert(lit.atom);
    for (const Interpretation& m : answer_sets_ras(closure_program(gp, std::move(seeds)), limits))
        if (satisfied(m, lit)) return true;
    return false;
}

bool holds_in_all(const GroundProgram& gp, const Atom& a, const EngineLimits& limits) {
    return holds_in_some(gp, pos(a), limits) && !holds_in_some(gp, naf(a), limits);
}

bool ras_consistent(const GroundProgram& gp, const EngineLimits& limits) {
    if (gp.constraints.empty()) return true;
    return !answer_sets_ras(closure_program(gp, constraint_atoms(gp)), limits).empty();
}

std::vector<bool> eval_query_sequence(const GroundProgram& gp, const std::vector<Literal>& queries,
                                      QueryMode mode, const EngineLimits& limits) {
    for (const Literal& q : queries) require_query_literal(q);
    std::vector<bool> out;
    if (mode == QueryMode::INDEPENDENT) {
        for (const Literal& q : queries) out.push_back(holds_in_some(gp, q, limits));
        return out;
    }
    std::vector<Interpretation> context = answer_sets_ras(gp, limits);
    for (const Literal& q : queries) {
        std::vector<Interpretation> narrowed;
        for (const Interpretation& m : context)
            if (satisfied(m, q)) narrowed.push_back(m);
        out.push_back(!narrowed.empty());
        if (!narrowed.empty()) context = std::move(narrowed);
    }
    return out;
}

} // namespace elp
