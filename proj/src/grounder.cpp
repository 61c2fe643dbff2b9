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

#include "elp/syntax.hpp"

#include <algorithm>
#include <map>

namespace elp {

namespace {

using Subst = std::map<std::string, std::string>;

Atom apply(const Atom& a, const Subst& s) {
    Atom out = a;
    for (std::string& t : out.args)
        if (is_variable(t)) t = s.at(t);
    return out;
}

Rule apply(const Rule& r, const Subst& s) {
    Rule out;
    if (r.head) out.head = apply(*r.head, s);
    for (const Literal& l : r.body) out.body.push_back({apply(l.atom, s), l.form});
    return out;
}

bool rule_is_ground(const Rule& r) {
    if (r.head && !r.head->is_ground()) return false;
    return std::all_of(r.body.begin(), r.body.end(), [](const Literal& l) { return l.atom.is_ground(); });
}

std::vector<std::string> variables_of(const Rule& r) {
    std::vector<std::string> vars;
    auto add = [&](const Atom& a) {
        for (const std::string& t : a.args)
            if (is_variable(t) && std::find(vars.begin(), vars.end(), t) == vars.end()) vars.push_back(t);
    };
    if (r.head) add(*r.head);
    for (const Literal& l : r.body) add(l.atom);
    return vars;
}

bool unify(const Atom& pattern, const Atom& ground_atom, Subst& s) {
    if (pattern.predicate != ground_atom.predicate || pattern.args.size() != ground_atom.args.size()) return false;
    for (std::size_t i = 0; i < pattern.args.size(); ++i) {
        const std::string& t = pattern.args[i];
        if (!is_variable(t)) {
            if (t != ground_atom.args[i]) return false;
            continue;
        }
        auto it = s.find(t);
        if (it == s.end()) s.emplace(t, ground_atom.args[i]);
        else if (it->second != ground_atom.args[i]) return false;
    }
    return true;
}

// Enumerates the substitutions of r whose positive body atoms all lie in
// `derivable`; variables bound by no positive literal range over all
// constants.
class Matcher {
public:
    Matcher(const Rule& r, const std::set<Atom>& derivable, const std::set<std::string>& constants)
        : rule_(r), derivable_(derivable), constants_(constants.begin(), constants.end()), vars_(variables_of(r)) {
        for (const Literal& l : r.body)
            if (l.form == Form::POS) positive_.push_back(&l.atom);
    }

    template <class F>
    void each(F&& f) {
        Subst s;
        match(0, s, f);
    }

private:
    template <class F>
    void match(std::size_t i, Subst& s, F& f) {
        if (i == positive_.size()) {
            free_vars(0, s, f);
            return;
        }
        for (const Atom& cand : derivable_) {
            Subst next = s;
            if (unify(*positive_[i], cand, next)) match(i + 1, next, f);
        }
    }

    template <class F>
    void free_vars(std::size_t v, Subst& s, F& f) {
        while (v < vars_.size() && s.count(vars_[v])) ++v;
        if (v == vars_.size()) {
            f(s);
            return;
        }
        for (const std::string& c : constants_) {
            s[vars_[v]] = c;
            free_vars(v + 1, s, f);
        }
        s.erase(vars_[v]);
    }

    const Rule& rule_;
    const std::set<Atom>& derivable_;
    std::vector<std::string> constants_;
    std::vector<std::string> vars_;
    std::vector<const Atom*> positive_;
};

template <class P>
GroundProgram ground_impl(const P& p) {
    bool has_vars = false;
    for (const auto* list : {&p.rules, &p.constraints})
        for (const Rule& r : *list) has_vars = has_vars || !rule_is_ground(r);
    GroundProgram out;
    out.constants = p.constants;
    if (!has_vars) {
        out.rules = p.rules;
        out.constraints = p.constraints;
        return out;
    }
    if (p.constants.empty()) throw PreconditionError("program has variables but no constants");

    // Potentially derivable atoms, ignoring negation.
    std::set<Atom> derivable;
    for (bool changed = true; changed;) {
        changed = false;
        for (const Rule& r : p.rules) {
            if (rule_is_ground(r)) {
                bool ok = std::all_of(r.body.begin(), r.body.end(), [&](const Literal& l) {
                    return l.form != Form::POS || derivable.count(l.atom);
                });
                if (ok && derivable.insert(*r.head).second) changed = true;
                continue;
            }
            std::vector<Atom> found;
            Matcher(r, derivable, p.constants).each([&](const Subst& s) { found.push_back(apply(*r.head, s)); });
            for (Atom& a : found)
                if (derivable.insert(std::move(a)).second) changed = true;
        }
    }

    auto instantiate = [&](const std::vector<Rule>& in, std::vector<Rule>& dst) {
        std::set<Rule> seen;
        for (const Rule& r : in) {
            if (rule_is_ground(r)) {
                if (seen.insert(r).second) dst.push_back(r);
                continue;
            }
            std::set<Rule> inst;
            Matcher(r, derivable, p.constants).each([&](const Subst& s) { inst.insert(apply(r, s)); });
            for (const Rule& g : inst)
                if (seen.insert(g).second) dst.push_back(g);
        }
    };
    instantiate(p.rules, out.rules);
    instantiate(p.constraints, out.constraints);
    return out;
}

} // namespace

GroundProgram ground(const Program& p) { return ground_impl(p); }
GroundProgram ground(const GroundProgram& gp) { return ground_impl(gp); }

GroundProgram normalize(const GroundProgram& gp) {
    GroundProgram cur = gp;
    for (;;) {
        std::set<Atom> heads = cur.head_atoms();
        bool changed = false;
        auto pass = [&](const std::vector<Rule>& in) {
            std::vector<Rule> out;
            std::set<Rule> seen;
            for (const Rule& r : in) {
                std::set<Atom> naf;
                for (const Literal& l : r.body)
                    if (l.form == Form::NAF) naf.insert(l.atom);
                Rule nr{r.head, {}};
                bool dead = false;
                for (const Literal& l : r.body) {
                    if (l.form == Form::EPI && naf.count(l.atom)) continue;
                    if (is_epistemic(l.form) && !heads.count(l.atom)) {
                        // K A and M A are false, enot A and NOT A are true.
                        if (l.form == Form::NAF_EPI || l.form == Form::EPI_NAF) {
                            dead = true;
                            break;
                        }
                        continue;
                    }
                    if (std::find(nr.body.begin(), nr.body.end(), l) == nr.body.end()) nr.body.push_back(l);
                }
                if (dead || !seen.insert(nr).second) {
                    changed = true;
                    continue;
                }
                if (nr != r) changed = true;
                out.push_back(std::move(nr));
            }
            return out;
        };
        cur.rules = pass(cur.rules);
        cur.constraints = pass(cur.constraints);
        if (!changed) return cur;
    }
}

} // namespace elp
