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

#include "elp/epistemic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "elp/ras_engine.hpp"

namespace elp {

std::string EpistemicLiteral::to_string() const {
    return (inner_naf ? "enot not " : "enot ") + atom.to_string();
}

std::optional<EpistemicLiteral> epistemic_part(const Literal& l) {
    switch (l.form) {
    case Form::EPI:
    case Form::NAF_EPI: return EpistemicLiteral{l.atom, false};
    case Form::EPI_NAF:
    case Form::NAF_EPI_NAF: return EpistemicLiteral{l.atom, true};
    default: return std::nullopt;
    }
}

namespace {

template <class Set>
std::string braces(const Set& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& x : s) {
        if (!first) out += ", ";
        out += x.to_string();
        first = false;
    }
    return out + "}";
}

bool strict_subset(const std::set<EpistemicLiteral>& a, const std::set<EpistemicLiteral>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void require_subset(const GroundProgram& gp, const Guess& phi, const char* op) {
    std::set<EpistemicLiteral> ep = epistemic_literals(gp);
    for (const EpistemicLiteral& l : phi.assumed)
        if (!ep.count(l)) throw PreconditionError(std::string(op) + ": " + l.to_string() + " is not in EP(program)");
}

void require_epistemic(const GroundProgram& gp, const char* op) {
    if (!gp.has_epistemic()) throw PreconditionError(std::string(op) + ": program has no epistemic literals");
}

Atom prefixed(const std::string& prefix, const Atom& a) {
    return Atom(prefix + a.predicate, a.args);
}

// Truth of an epistemic literal with respect to a nonempty family.
bool truth(const EpistemicLiteral& l, const std::vector<Interpretation>& family) {
    return std::any_of(family.begin(), family.end(),
                       [&](const Interpretation& m) { return (m.count(l.atom) > 0) == l.inner_naf; });
}

} // namespace

std::string Guess::to_string() const { return braces(assumed); }

std::string Scenario::to_string() const {
    std::string out = braces(positive);
    if (!negative.empty()) {
        out += " not{";
        bool first = true;
        for (const EpistemicLiteral& l : negative) {
            if (!first) out += ", ";
            out += "not " + l.to_string();
            first = false;
        }
        out += "}";
    }
    return out;
}

Guess parse_guess(const std::string& text) {
    Guess g;
    std::string item;
    std::stringstream ss(text);
    // Commas inside argument lists are not separators.
    std::string cur;
    int depth = 0;
    auto flush = [&] {
        if (cur.find_first_not_of(" \t\r\n") == std::string::npos) {
            cur.clear();
            return;
        }
        Literal l = parse_literal(cur);
        if (l.form != Form::EPI && l.form != Form::EPI_NAF)
            throw PreconditionError("guess members must be enot A or enot not A: " + cur);
        g.assumed.insert(*epistemic_part(l));
        cur.clear();
    };
    std::string body = text;
    if (auto b = body.find_first_not_of(" \t"); b != std::string::npos && body[b] == '{') {
        auto e = body.find_last_of('}');
        body = body.substr(b + 1, e == std::string::npos ? std::string::npos : e - b - 1);
    }
    for (char c : body) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            flush();
            continue;
        }
        cur += c;
    }
    flush();
    return g;
}

std::set<EpistemicLiteral> epistemic_literals(const GroundProgram& gp) {
    std::set<EpistemicLiteral> ep;
    for (const auto* list : {&gp.rules, &gp.constraints})
        for (const Rule& r : *list)
            for (const Literal& l : r.body)
                if (auto e = epistemic_part(l)) ep.insert(*e);
    return ep;
}

GroundProgram epistemic_reduct(const GroundProgram& gp, const Guess& phi, ReductMode mode) {
    require_subset(gp, phi, "epistemic_reduct");
    std::map<EpistemicLiteral, Atom> fresh;
    std::size_t k = 0;
    for (const EpistemicLiteral& l : epistemic_literals(gp))
        fresh.emplace(l, Atom(std::string(kFreshPrefix) + "x" + std::to_string(k++)));

    const bool se = mode == ReductMode::SHEN_EITER;
    GroundProgram out;
    out.constants = gp.constants;
    auto pass = [&](const std::vector<Rule>& in, std::vector<Rule>& dst) {
        for (const Rule& r : in) {
            Rule nr{r.head, {}};
            bool dead = false;
            for (const Literal& l : r.body) {
                auto e = epistemic_part(l);
                if (!e) {
                    nr.body.push_back(l);
                    continue;
                }
                const bool in_phi = phi.contains(*e);
                const Atom& x = fresh.at(*e);
                switch (l.form) {
                case Form::EPI:
                    if (in_phi) break;
                    nr.body.push_back(se ? naf(l.atom) : pos(x));
                    break;
                case Form::EPI_NAF:
                    if (in_phi) break;
                    if (se) dead = true;
                    else nr.body.push_back(pos(x));
                    break;
                default:  // not enot F: false when enot F is assumed, true otherwise
                    if (in_phi) dead = true;
                    else if (!se) nr.body.push_back(naf(x));
                    break;
                }
                if (dead) break;
            }
            if (!dead) dst.push_back(std::move(nr));
        }
    };
    pass(gp.rules, out.rules);
    pass(gp.constraints, out.constraints);
    return out;
}

GroundProgram tailored_program(const GroundProgram& gp, const Guess& phi) {
    require_subset(gp, phi, "tailored_program");
    GroundProgram out;
    out.constants = gp.constants;
    auto pass = [&](const std::vector<Rule>& in, std::vector<Rule>& dst) {
        for (const Rule& r : in) {
            Rule nr{r.head, {}};
            bool dead = false;
            for (const Literal& l : r.body) {
                auto e = epistemic_part(l);
                if (!e) {
                    nr.body.push_back(l);
                    continue;
                }
                bool value = phi.contains(*e);
                if (l.form == Form::NAF_EPI || l.form == Form::NAF_EPI_NAF) value = !value;
                if (!value) {
                    dead = true;
                    break;
                }
            }
            if (!dead) dst.push_back(std::move(nr));
        }
    };
    pass(gp.rules, out.rules);
    pass(gp.constraints, out.constraints);
    return out;
}

std::optional<WorldView> candidate_world_view(const GroundProgram& gp, const Guess& phi, ReductMode mode,
                                              Semantics sem, const EngineLimits& limits) {
    std::vector<Interpretation> family = answer_sets(epistemic_reduct(gp, phi, mode), sem, limits);
    if (family.empty()) return std::nullopt;
    for (const EpistemicLiteral& l : epistemic_literals(gp))
        if (truth(l, family) != phi.contains(l)) return std::nullopt;
    return WorldView{std::move(family), phi};
}

std::vector<WorldView> world_views_oracle(const GroundProgram& gp, ReductMode mode, Semantics sem,
                                          const EngineLimits& limits, std::size_t max_literals) {
    std::set<EpistemicLiteral> ep_set = epistemic_literals(gp);
    std::vector<EpistemicLiteral> ep(ep_set.begin(), ep_set.end());
    if (ep.size() > max_literals)
        throw CapacityError("world_views_oracle: " + std::to_string(ep.size()) + " epistemic literals exceed the cap of " +
                            std::to_string(max_literals));
    std::vector<WorldView> candidates;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << ep.size()); ++bits) {
        Guess g;
        for (std::size_t i = 0; i < ep.size(); ++i)
            if (bits >> i & 1) g.assumed.insert(ep[i]);
        if (auto wv = candidate_world_view(gp, g, mode, sem, limits)) candidates.push_back(std::move(*wv));
    }
    std::vector<WorldView> out;
    for (const WorldView& c : candidates) {
        bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const WorldView& d) {
            return strict_subset(c.guess.assumed, d.guess.assumed);
        });
        if (!dominated) out.push_back(c);
    }
    sort_world_views(out);
    return out;
}

SimplifiedVersion simplified_version(const GroundProgram& gp) {
    require_epistemic(gp, "simplified_version");
    const std::set<EpistemicLiteral> ep = epistemic_literals(gp);
    SimplifiedVersion sv;
    sv.program.constants = gp.constants;

    auto prime = [](const Atom& a) { return prefixed(std::string(kFreshPrefix) + "m_", a); };
    // A body literal of an intermediate rule: either an enot over an atom
    // (possibly primed) or an ordinary literal.
    struct Item {
        bool epi;
        Literal lit;
    };
    struct Pending {
        Atom head;
        std::vector<Item> body;
    };
    std::vector<Pending> kept;
    std::map<Atom, std::vector<std::size_t>> deleted;
    std::vector<Rule> choices;
    std::size_t counter = 0;

    auto new_choice = [&](std::size_t rule) {
        ++counter;
        Atom ar(std::string(kFreshPrefix) + "r" + std::to_string(counter));
        Atom nar(std::string(kFreshPrefix) + "nr" + std::to_string(counter));
        choices.push_back(Rule{ar, {naf(nar)}});
        choices.push_back(Rule{nar, {naf(ar)}});
        sv.fresh[ar] = FreshAtomInfo{FreshRole::RULE_CHOICE, std::nullopt, rule};
        sv.fresh[nar] = FreshAtomInfo{FreshRole::RULE_CHOICE_DUAL, std::nullopt, rule};
        return ar;
    };

    for (std::size_t i = 0; i < gp.rules.size(); ++i) {
        const Rule& r = gp.rules[i];
        std::vector<Item> epis, plain;
        bool absorbed = false;
        for (const Literal& l : r.body) {
            switch (l.form) {
            case Form::EPI: epis.push_back({true, pos(l.atom)}); break;
            case Form::EPI_NAF: {
                Atom p = prime(l.atom);
                sv.fresh[p] = FreshAtomInfo{FreshRole::PRIME, EpistemicLiteral{l.atom, true}, std::nullopt};
                epis.push_back({true, pos(p)});
                break;
            }
            case Form::NAF_EPI:
            case Form::NAF_EPI_NAF: absorbed = true; break;
            default: plain.push_back({false, l}); break;
            }
        }
        if (epis.empty()) {
            deleted[*r.head].push_back(i);
            continue;
        }
        if (!plain.empty() || absorbed) epis.push_back({false, pos(new_choice(i))});
        kept.push_back({*r.head, std::move(epis)});
    }

    std::set<Atom> heads;
    for (const Pending& p : kept) heads.insert(p.head);
    for (const EpistemicLiteral& l : ep)
        if (!l.inner_naf && heads.count(l.atom)) sv.cyclic.insert(l.atom);
    for (const Atom& c : sv.cyclic) {
        auto it = deleted.find(c);
        if (it == deleted.end()) continue;
        for (std::size_t i : it->second) kept.push_back({c, {{false, pos(new_choice(i))}}});
    }

    // Atoms needing a deciding even cycle, with the literal they decide.
    std::map<Atom, EpistemicLiteral> need;
    for (const Pending& p : kept)
        for (const Item& it : p.body)
            if (it.epi && !heads.count(it.lit.atom)) {
                auto f = sv.fresh.find(it.lit.atom);
                EpistemicLiteral src = f != sv.fresh.end() ? *f->second.literal : EpistemicLiteral{it.lit.atom, false};
                need.emplace(it.lit.atom, src);
            }
    for (const EpistemicLiteral& l : ep) {
        if (l.inner_naf) {
            Atom p = prime(l.atom);
            sv.fresh[p] = FreshAtomInfo{FreshRole::PRIME, l, std::nullopt};
            need.emplace(p, l);
        } else if (!heads.count(l.atom)) {
            need.emplace(l.atom, l);
        }
    }
    auto decider = [&](const Atom& a) {
        auto f = sv.fresh.find(a);
        bool primed = f != sv.fresh.end() && f->second.role == FreshRole::PRIME;
        if (primed) return prefixed(std::string(kFreshPrefix) + "nm_", f->second.literal->atom);
        return prefixed(std::string(kFreshPrefix) + "n_", a);
    };

    for (const Pending& p : kept) {
        Rule r{p.head, {}};
        for (const Item& it : p.body) {
            if (!it.epi) r.body.push_back(it.lit);
            else if (heads.count(it.lit.atom)) r.body.push_back(naf(it.lit.atom));
            else r.body.push_back(pos(decider(it.lit.atom)));
        }
        sv.program.rules.push_back(std::move(r));
    }
    for (const auto& [a, l] : need) {
        Atom n = decider(a);
        bool primed = sv.fresh.count(a) > 0;
        sv.fresh[n] = FreshAtomInfo{primed ? FreshRole::PRIME_DECIDER : FreshRole::DECIDER, l, std::nullopt};
        sv.program.rules.push_back(Rule{a, {naf(n)}});
        sv.program.rules.push_back(Rule{n, {naf(a)}});
    }
    for (Rule& r : choices) sv.program.rules.push_back(std::move(r));
    return sv;
}

std::vector<Scenario> epistemic_scenarios(const GroundProgram& gp, const EngineLimits& limits) {
    SimplifiedVersion sv = simplified_version(gp);
    const std::set<EpistemicLiteral> ep = epistemic_literals(gp);
    std::set<EpistemicLiteral> k_forms, not_forms;
    for (const auto* list : {&gp.rules, &gp.constraints})
        for (const Rule& r : *list)
            for (const Literal& l : r.body) {
                if (l.form == Form::NAF_EPI) k_forms.insert({l.atom, false});
                if (l.form == Form::NAF_EPI_NAF) not_forms.insert({l.atom, true});
            }

    std::map<std::pair<std::set<EpistemicLiteral>, std::set<EpistemicLiteral>>, Scenario> seen;
    for (Interpretation& m : answer_sets_as(sv.program, limits)) {
        Scenario s;
        for (const EpistemicLiteral& l : ep) {
            bool asserted;
            if (l.inner_naf) asserted = m.count(prefixed(std::string(kFreshPrefix) + "nm_", l.atom)) > 0;
            else if (sv.cyclic.count(l.atom)) asserted = !m.count(l.atom);
            else asserted = m.count(prefixed(std::string(kFreshPrefix) + "n_", l.atom)) > 0;
            if (asserted) s.positive.insert(l);
            else if (k_forms.count(l) || not_forms.count(l)) s.negative.insert(l);
        }
        s.source = std::move(m);
        auto key = std::make_pair(s.positive, s.negative);
        seen.emplace(std::move(key), std::move(s));
    }
    std::vector<Scenario> out;
    for (auto& [key, s] : seen) out.push_back(std::move(s));
    return out;
}

std::vector<Scenario> maximal_scenarios(const std::vector<Scenario>& s) {
    std::vector<Scenario> out;
    std::set<std::set<EpistemicLiteral>> emitted;
    for (const Scenario& a : s) {
        bool dominated = std::any_of(s.begin(), s.end(), [&](const Scenario& b) { return strict_subset(a.positive, b.positive); });
        if (!dominated && emitted.insert(a.positive).second) out.push_back(a);
    }
    return out;
}

bool rascgk_check(const GroundProgram& gp, const Guess& phi, const EngineLimits& limits) {
    GroundProgram r = epistemic_reduct(gp, phi, ReductMode::FRESH_ATOM);
    if (!ras_consistent(r, limits)) return false;
    std::set<Literal> occurrences;
    for (const auto* list : {&gp.rules, &gp.constraints})
        for (const Rule& rule : *list)
            for (const Literal& l : rule.body)
                if (is_epistemic(l.form)) occurrences.insert(l);
    // Each query must report the truth value the guess gives its literal.
    for (const Literal& l : occurrences) {
        const bool in_phi = phi.contains(*epistemic_part(l));
        bool ok = true;
        switch (l.form) {
        case Form::EPI: ok = holds_in_some(r, naf(l.atom), limits) == in_phi; break;
        case Form::EPI_NAF: ok = holds_in_some(r, pos(l.atom), limits) == in_phi; break;
        case Form::NAF_EPI: ok = holds_in_all(r, l.atom, limits) == !in_phi; break;
        case Form::NAF_EPI_NAF: ok = !holds_in_some(r, pos(l.atom), limits) == !in_phi; break;
        default: break;
        }
        if (!ok) return false;
    }
    return true;
}

std::vector<Guess> valid_guesses(const GroundProgram& gp, ReductMode mode, Semantics sem, const EngineLimits& limits) {
    if (!gp.has_epistemic()) {
        if (answer_sets(gp, sem, limits).empty()) return {};
        return {Guess{}};
    }
    std::set<std::set<EpistemicLiteral>> unique;
    for (const Scenario& s : epistemic_scenarios(gp, limits)) unique.insert(s.positive);
    std::vector<std::set<EpistemicLiteral>> order(unique.begin(), unique.end());
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });

    const bool query_based = sem == Semantics::RAS && mode == ReductMode::FRESH_ATOM;
    std::vector<std::set<EpistemicLiteral>> passed;
    for (const auto& cand : order) {
        // A subset of a passing guess cannot be maximal.
        bool shadowed = std::any_of(passed.begin(), passed.end(), [&](const auto& p) { return strict_subset(cand, p); });
        if (shadowed) continue;
        Guess g{cand};
        bool ok = query_based ? rascgk_check(gp, g, limits) : candidate_world_view(gp, g, mode, sem, limits).has_value();
        if (ok) passed.push_back(cand);
    }
    std::vector<Guess> out;
    for (const auto& p : passed) out.push_back(Guess{p});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WorldView> world_views(const GroundProgram& gp, ReductMode mode, Semantics sem, const EngineLimits& limits) {
    std::vector<WorldView> out;
    for (const Guess& g : valid_guesses(gp, mode, sem, limits)) {
        if (auto wv = candidate_world_view(gp, g, mode, sem, limits)) out.push_back(std::move(*wv));
        else throw Error("internal: valid guess " + g.to_string() + " yields no candidate world view");
    }
    sort_world_views(out);
    return out;
}

BoundReport guess_count_bound(const GroundProgram& gp) {
    BoundReport rep;
    rep.n = gp.head_atoms().size();
    std::set<Atom> under;
    for (const EpistemicLiteral& l : epistemic_literals(gp)) under.insert(l.atom);
    rep.bold_n = under.size();
    if (!gp.has_epistemic()) return rep;
    rep.n_hat = simplified_version(gp).program.head_atoms().size();
    rep.bound = std::pow(3.0, static_cast<double>(rep.n_hat) / 3.0);
    return rep;
}

Atom view_atom(const Atom& a, std::size_t copy) {
    return prefixed("__w" + std::to_string(copy) + "_", a);
}

MultiViewProgram build_multiview_program(const GroundProgram& gp, const std::vector<Guess>& guesses) {
    MultiViewProgram mv;
    mv.program.constants = gp.constants;
    const std::set<Atom> atoms = gp.atoms();
    for (std::size_t i = 0; i < guesses.size(); ++i) {
        const std::size_t copy = i + 1;
        GroundProgram t = tailored_program(gp, guesses[i]);
        std::map<Atom, Atom> names;
        for (const Atom& a : atoms) names.emplace(a, view_atom(a, copy));
        auto rename = [&](const Rule& r) {
            Rule out{std::nullopt, {}};
            if (r.head) out.head = names.at(*r.head);
            for (const Literal& l : r.body) out.body.push_back({names.at(l.atom), l.form});
            return out;
        };
        for (const Rule& r : t.rules) mv.program.rules.push_back(rename(r));
        for (const Rule& r : t.constraints) mv.program.constraints.push_back(rename(r));
        mv.renaming.push_back(std::move(names));
    }
    return mv;
}

std::string to_string(const std::vector<Interpretation>& family) {
    std::string out = "{";
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (i) out += ",";
        out += to_string(family[i]);
    }
    return out + "}";
}

void sort_world_views(std::vector<WorldView>& wvs) {
    std::sort(wvs.begin(), wvs.end(), [](const WorldView& a, const WorldView& b) {
        if (a.answer_sets != b.answer_sets)
            return std::lexicographical_compare(a.answer_sets.begin(), a.answer_sets.end(), b.answer_sets.begin(),
                                                b.answer_sets.end(), interpretation_less);
        return a.guess < b.guess;
    });
}

} // namespace elp
