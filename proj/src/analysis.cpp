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

#include "elp/analysis.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "elp/as_engine.hpp"

namespace elp {

namespace {

std::size_t sign_bit(Sign s) { return s == Sign::NEG ? 1 : 0; }

struct IndexedGraph {
    std::vector<Atom> atoms;
    std::map<Atom, int> id;
    // adjacency: (target, sign), sorted
    std::vector<std::vector<std::pair<int, Sign>>> out;

    explicit IndexedGraph(const DependencyGraph& g) {
        for (const Atom& a : g.nodes) {
            id.emplace(a, static_cast<int>(atoms.size()));
            atoms.push_back(a);
        }
        out.resize(atoms.size());
        for (const Edge& e : g.edges) out[id.at(e.from)].emplace_back(id.at(e.to), e.sign);
        for (auto& v : out) std::sort(v.begin(), v.end());
    }
};

std::set<Atom> reachable(const DependencyGraph& g, const Atom& from) {
    std::map<Atom, std::vector<const Atom*>> succ;
    for (const Edge& e : g.edges) succ[e.from].push_back(&e.to);
    std::set<Atom> seen{from};
    std::deque<Atom> work{from};
    while (!work.empty()) {
        Atom a = work.front();
        work.pop_front();
        auto it = succ.find(a);
        if (it == succ.end()) continue;
        for (const Atom* b : it->second)
            if (seen.insert(*b).second) work.push_back(*b);
    }
    return seen;
}

std::set<Atom> handle_atoms(const std::vector<Handle>& hs) {
    std::set<Atom> out;
    for (const Handle& h : hs)
        for (const Literal& l : h.conjuncts) out.insert(l.atom);
    return out;
}

bool literal_in_body(const Rule& r, const Atom& a) {
    return std::any_of(r.body.begin(), r.body.end(), [&](const Literal& l) { return l.atom == a; });
}

} // namespace

DependencyGraph build_dependency_graph(const GroundProgram& gp) {
    DependencyGraph g;
    g.rules = gp.rules;
    g.constraints = gp.constraints;
    std::map<std::tuple<Atom, Atom, std::size_t>, std::vector<std::size_t>> edges;
    for (std::size_t i = 0; i < gp.rules.size(); ++i) {
        const Rule& r = gp.rules[i];
        g.nodes.insert(*r.head);
        for (const Literal& l : r.body) {
            if (is_epistemic(l.form)) continue;
            g.nodes.insert(l.atom);
            auto& rules = edges[{*r.head, l.atom, l.form == Form::NAF ? 1u : 0u}];
            if (rules.empty() || rules.back() != i) rules.push_back(i);
        }
    }
    for (const Rule& c : gp.constraints)
        for (const Literal& l : c.body)
            if (!is_epistemic(l.form)) g.nodes.insert(l.atom);
    for (auto& [key, rules] : edges) {
        const auto& [from, to, s] = key;
        g.edges.push_back({from, to, s ? Sign::NEG : Sign::POS, std::move(rules)});
    }
    return g;
}

CycleReport find_cycles(const DependencyGraph& g, const CycleOptions& opts) {
    IndexedGraph ig(g);
    CycleReport rep;
    std::vector<int> path;
    std::vector<Sign> signs;
    std::vector<char> on_path(ig.atoms.size(), 0);

    // Each simple cycle is found once, from its smallest atom.
    auto dfs = [&](auto&& self, int start, int u) -> void {
        for (const auto& [v, s] : ig.out[u]) {
            if (rep.truncated) return;
            if (v == start) {
                if (rep.cycles.size() >= opts.limit) {
                    rep.truncated = true;
                    return;
                }
                Cycle c;
                for (int a : path) c.atoms.push_back(ig.atoms[a]);
                c.signs = signs;
                c.signs.push_back(s);
                std::size_t neg = std::count(c.signs.begin(), c.signs.end(), Sign::NEG);
                c.parity = neg % 2 ? Parity::ODD : Parity::EVEN;
                rep.cycles.push_back(std::move(c));
            } else if (v > start && !on_path[v]) {
                on_path[v] = 1;
                path.push_back(v);
                signs.push_back(s);
                self(self, start, v);
                signs.pop_back();
                path.pop_back();
                on_path[v] = 0;
            }
        }
    };
    for (int s = 0; s < static_cast<int>(ig.atoms.size()) && !rep.truncated; ++s) {
        path.assign(1, s);
        signs.clear();
        on_path[s] = 1;
        dfs(dfs, s, s);
        on_path[s] = 0;
    }
    for (std::size_t i = 0; i < rep.cycles.size(); ++i)
        if (rep.cycles[i].parity == Parity::ODD) rep.handles[i] = cycle_handles(g, rep.cycles[i]);
    return rep;
}

std::vector<Handle> cycle_handles(const DependencyGraph& g, const Cycle& c) {
    std::vector<Handle> out;
    const std::size_t k = c.atoms.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Atom& cur = c.atoms[i];
        const Atom& nxt = c.atoms[(i + 1) % k];
        const Literal cycle_lit{nxt, c.signs[i] == Sign::NEG ? Form::NAF : Form::POS};
        for (std::size_t ri = 0; ri < g.rules.size(); ++ri) {
            const Rule& r = g.rules[ri];
            if (*r.head != cur) continue;
            bool in_cycle = std::find(r.body.begin(), r.body.end(), cycle_lit) != r.body.end();
            Handle h;
            h.kind = in_cycle ? HandleKind::IN_CYCLE_CONJUNCT : HandleKind::OUT_OF_CYCLE_RULE;
            h.rule = ri;
            for (const Literal& l : r.body)
                if (!is_epistemic(l.form) && !(in_cycle && l == cycle_lit)) h.conjuncts.push_back(l);
            if (in_cycle && h.conjuncts.empty()) continue;
            out.push_back(std::move(h));
        }
    }
    return out;
}

bool is_call_consistent(const DependencyGraph& g) {
    IndexedGraph ig(g);
    const std::size_t n = ig.atoms.size();
    for (std::size_t s = 0; s < n; ++s) {
        // states are (atom, parity of NEG edges so far)
        std::vector<char> seen(2 * n, 0);
        std::deque<std::size_t> work{2 * s};
        seen[2 * s] = 1;
        while (!work.empty()) {
            std::size_t st = work.front();
            work.pop_front();
            for (const auto& [v, sg] : ig.out[st / 2]) {
                std::size_t nx = 2 * static_cast<std::size_t>(v) + ((st % 2) ^ sign_bit(sg));
                if (nx == 2 * s + 1) return false;
                if (!seen[nx]) {
                    seen[nx] = 1;
                    work.push_back(nx);
                }
            }
        }
    }
    return true;
}

CoincidenceReport check_coincidence(const GroundProgram& gp, const CycleOptions& opts) {
    CoincidenceReport rep;
    DependencyGraph g = build_dependency_graph(gp);
    rep.call_consistent = is_call_consistent(g);

    if (gp.has_epistemic()) {
        rep.as_consistent = false;
        rep.witnesses.push_back("program has epistemic literals: AS consistency not evaluated");
    } else {
        try {
            rep.as_consistent = !answer_sets_as(gp).empty();
        } catch (const CapacityError& e) {
            rep.as_consistent = false;
            rep.witnesses.push_back(std::string("AS consistency undecided: ") + e.what());
        }
        if (!rep.as_consistent) rep.witnesses.push_back("no AS answer set");
    }

    CycleReport cycles = find_cycles(g, opts);
    rep.truncated = cycles.truncated;
    if (cycles.truncated) {
        rep.structural1 = rep.structural2 = false;
        rep.witnesses.push_back("cycle enumeration truncated at " + std::to_string(opts.limit));
    } else {
        std::vector<std::vector<Handle>> handles;
        std::vector<std::set<Atom>> hatoms, catoms;
        for (const Cycle& c : cycles.cycles) {
            handles.push_back(cycle_handles(g, c));
            hatoms.push_back(handle_atoms(handles.back()));
            catoms.emplace_back(c.atoms.begin(), c.atoms.end());
        }
        std::set<Atom> heads = gp.head_atoms();
        for (std::size_t i = 0; i < cycles.cycles.size(); ++i) {
            if (cycles.cycles[i].parity != Parity::ODD) continue;
            const std::string cname = to_string(cycles.cycles[i]);
            for (const Atom& h : hatoms[i]) {
                std::set<Atom> reach = reachable(g, h);
                for (std::size_t j = 0; j < cycles.cycles.size(); ++j) {
                    if (j == i) continue;
                    auto hits = [&](const std::set<Atom>& s) {
                        return std::any_of(s.begin(), s.end(), [&](const Atom& a) { return reach.count(a) > 0; });
                    };
                    if (hits(catoms[j]) || hits(hatoms[j])) {
                        rep.structural1 = false;
                        rep.witnesses.push_back("odd cycle " + cname + ": handle atom " + h.to_string() +
                                                " reaches cycle " + to_string(cycles.cycles[j]) + " or its handles");
                    }
                }
                std::set<std::size_t> own;
                for (const Handle& hd : handles[i])
                    for (const Literal& l : hd.conjuncts)
                        if (l.atom == h) own.insert(hd.rule);
                bool elsewhere = heads.count(h) > 0;
                for (std::size_t ri = 0; ri < gp.rules.size() && !elsewhere; ++ri)
                    if (!own.count(ri) && literal_in_body(gp.rules[ri], h)) elsewhere = true;
                for (const Rule& c : gp.constraints)
                    if (literal_in_body(c, h)) elsewhere = true;
                if (elsewhere) {
                    rep.structural2 = false;
                    rep.witnesses.push_back("odd cycle " + cname + ": handle atom " + h.to_string() +
                                            " occurs elsewhere in the program");
                }
            }
        }
    }
    rep.condition1 = rep.as_consistent && rep.structural1;
    rep.condition2 = rep.as_consistent && rep.structural2;
    return rep;
}

std::string to_string(const Cycle& c) {
    std::string out = "[";
    for (std::size_t i = 0; i < c.atoms.size(); ++i) {
        if (i) out += ", ";
        out += c.atoms[i].to_string();
    }
    return out + "]";
}

std::string to_text(const CoincidenceReport& r) {
    auto yn = [](bool b) { return b ? "true" : "false"; };
    std::string out;
    out += std::string("call_consistent: ") + yn(r.call_consistent) + "\n";
    out += std::string("as_consistent: ") + yn(r.as_consistent) + "\n";
    out += std::string("condition1: ") + yn(r.condition1) + "\n";
    out += std::string("condition2: ") + yn(r.condition2) + "\n";
    for (const std::string& w : r.witnesses) out += "  " + w + "\n";
    return out;
}

} // namespace elp
