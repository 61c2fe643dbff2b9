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

#include "solver.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace elp::detail {

Indexed index_program(const GroundProgram& gp, const char* op) {
    if (gp.has_epistemic()) throw PreconditionError(std::string(op) + ": program contains epistemic literals");
    Indexed ix;
    for (const Atom& a : gp.head_atoms()) {
        ix.id.emplace(a, static_cast<int>(ix.atoms.size()));
        ix.atoms.push_back(a);
    }
    auto convert = [&](const Rule& r, IRule& out) {
        for (const Literal& l : r.body) {
            auto it = ix.id.find(l.atom);
            if (l.form == Form::POS) {
                if (it == ix.id.end()) return false;
                out.pos.push_back(it->second);
            } else if (it != ix.id.end()) {
                out.neg.push_back(it->second);
            }
        }
        return true;
    };
    for (const Rule& r : gp.rules) {
        IRule ir;
        ir.head = ix.id.at(*r.head);
        if (convert(r, ir)) ix.rules.push_back(std::move(ir));
    }
    for (const Rule& r : gp.constraints) {
        IRule ir;
        if (!convert(r, ir)) continue;
        if (ir.pos.empty() && ir.neg.empty()) ix.trivially_inconsistent = true;
        ix.constraints.push_back(std::move(ir));
    }
    return ix;
}

std::vector<std::vector<int>> components(const Indexed& ix) {
    const int n = static_cast<int>(ix.atoms.size());
    std::vector<std::vector<int>> adj(n);
    for (const IRule& r : ix.rules) {
        for (int b : r.pos) adj[r.head].push_back(b);
        for (int b : r.neg) adj[r.head].push_back(b);
    }
    // Iterative Tarjan; components come out dependencies first.
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    std::vector<std::pair<int, std::size_t>> calls;
    std::vector<std::vector<int>> out;
    int counter = 0;
    for (int s = 0; s < n; ++s) {
        if (index[s] != -1) continue;
        index[s] = low[s] = counter++;
        stack.push_back(s);
        on_stack[s] = 1;
        calls.emplace_back(s, 0);
        while (!calls.empty()) {
            int v = calls.back().first;
            std::size_t& next = calls.back().second;
            if (next < adj[v].size()) {
                int w = adj[v][next++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    calls.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<int> comp;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                out.push_back(std::move(comp));
            }
            calls.pop_back();
            if (!calls.empty()) {
                int u = calls.back().first;
                low[u] = std::min(low[u], low[v]);
            }
        }
    }
    return out;
}

namespace {

struct MaskRule {
    std::uint64_t head;
    std::uint64_t pos;
    std::uint64_t neg;
};

struct LocalRule {
    int head;
    std::vector<int> pos;
    std::vector<int> neg;
};

// Least model of the local rules whose negative atoms avoid `s`.
std::vector<char> local_gamma(const std::vector<LocalRule>& rules, std::size_t k, const std::vector<char>& s) {
    std::vector<char> d(k, 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (const LocalRule& r : rules) {
            if (d[r.head]) continue;
            bool ok = std::none_of(r.neg.begin(), r.neg.end(), [&](int q) { return s[q]; }) &&
                      std::all_of(r.pos.begin(), r.pos.end(), [&](int p) { return d[p]; });
            if (ok) {
                d[r.head] = 1;
                changed = true;
            }
        }
    }
    return d;
}

// With restrict_heads, only rules whose head is in s fire: this is the
// derivation-inside-s test of consistent support.
std::uint64_t mask_lm(const std::vector<MaskRule>& rules, std::uint64_t s, bool restrict_heads) {
    std::uint64_t d = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (const MaskRule& r : rules) {
            if ((d & r.head) || (r.neg & s) || (r.pos & ~d)) continue;
            if (restrict_heads && !(r.head & s)) continue;
            d |= r.head;
            changed = true;
        }
    }
    return d;
}

class ComponentSolver {
public:
    ComponentSolver(const Indexed& ix, Semantics sem, const EngineLimits& limits)
        : ix_(ix), sem_(sem), limits_(limits), local_(ix.atoms.size(), -1) {}

    // Local choices for `comp` given the decided lower part of `model`,
    // each as the list of atoms made true.
    std::vector<std::vector<int>> solve(const std::vector<int>& comp, const std::vector<int>& rule_ids,
                                        const Model& model, int comp_index, const std::vector<int>& comp_of) {
        const std::size_t k = comp.size();
        for (std::size_t i = 0; i < k; ++i) local_[comp[i]] = static_cast<int>(i);

        std::vector<LocalRule> rules;
        for (int rid : rule_ids) {
            const IRule& r = ix_.rules[rid];
            LocalRule lr{local_[r.head], {}, {}};
            bool alive = true;
            for (int p : r.pos) {
                if (comp_of[p] == comp_index) lr.pos.push_back(local_[p]);
                else if (!model[p]) alive = false;
            }
            for (int q : r.neg) {
                if (comp_of[q] == comp_index) lr.neg.push_back(local_[q]);
                else if (model[q]) alive = false;
            }
            if (alive) rules.push_back(std::move(lr));
        }

        // Well-founded bounds: every answer set (and every resource-based
        // answer set) lies between `wt` and `pt`.
        std::vector<char> wt(k, 0), pt;
        for (;;) {
            pt = local_gamma(rules, k, wt);
            std::vector<char> next = local_gamma(rules, k, pt);
            if (next == wt) break;
            wt = std::move(next);
        }

        std::vector<int> free_atoms;
        std::vector<int> bit(k, -1);
        for (std::size_t i = 0; i < k; ++i) {
            if (pt[i] && !wt[i]) {
                bit[i] = static_cast<int>(free_atoms.size());
                free_atoms.push_back(static_cast<int>(i));
            }
        }
        if (free_atoms.size() > limits_.max_free_atoms || free_atoms.size() > 62) {
            throw CapacityError("component with " + std::to_string(free_atoms.size()) +
                                " undecided atoms exceeds the cap of " + std::to_string(limits_.max_free_atoms));
        }

        std::vector<MaskRule> masks;
        for (const LocalRule& r : rules) {
            if (bit[r.head] < 0) continue;
            MaskRule m{std::uint64_t(1) << bit[r.head], 0, 0};
            bool alive = true;
            for (int p : r.pos) {
                if (bit[p] >= 0) m.pos |= std::uint64_t(1) << bit[p];
                else if (!wt[p]) alive = false;
            }
            for (int q : r.neg) {
                if (bit[q] >= 0) m.neg |= std::uint64_t(1) << bit[q];
                else if (wt[q]) alive = false;
            }
            if (alive) masks.push_back(m);
        }

        const std::uint64_t full = free_atoms.empty() ? 0 : (~std::uint64_t(0) >> (64 - free_atoms.size()));
        std::vector<std::uint64_t> chosen;
        const bool ras = sem_ == Semantics::RAS;
        for (std::uint64_t s = 0;; ++s) {
            if (mask_lm(masks, s, ras) == s) chosen.push_back(s);
            if (s == full) break;
        }
        if (ras) chosen = maximal(std::move(chosen));

        std::vector<int> base;
        for (std::size_t i = 0; i < k; ++i)
            if (wt[i]) base.push_back(comp[i]);
        std::vector<std::vector<int>> out;
        for (std::uint64_t s : chosen) {
            std::vector<int> atoms = base;
            for (std::size_t b = 0; b < free_atoms.size(); ++b)
                if (s >> b & 1) atoms.push_back(comp[free_atoms[b]]);
            out.push_back(std::move(atoms));
        }
        for (int a : comp) local_[a] = -1;
        return out;
    }

private:
    static std::vector<std::uint64_t> maximal(std::vector<std::uint64_t> sets) {
        std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa > pb : a < b;
        });
        std::vector<std::uint64_t> kept;
        for (std::uint64_t s : sets) {
            bool dominated = std::any_of(kept.begin(), kept.end(), [&](std::uint64_t k) { return (s & ~k) == 0; });
            if (!dominated) kept.push_back(s);
        }
        return kept;
    }

    const Indexed& ix_;
    Semantics sem_;
    EngineLimits limits_;
    std::vector<int> local_;
};

bool violates(const IRule& c, const Model& m) {
    return std::all_of(c.pos.begin(), c.pos.end(), [&](int p) { return m[p]; }) &&
           std::none_of(c.neg.begin(), c.neg.end(), [&](int q) { return m[q]; });
}

} // namespace

std::vector<Model> enumerate(const Indexed& ix, Semantics sem, const EngineLimits& limits) {
    if (ix.trivially_inconsistent) return {};
    const std::size_t n = ix.atoms.size();
    std::vector<std::vector<int>> comps = components(ix);
    std::vector<int> comp_of(n, -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int a : comps[c]) comp_of[a] = static_cast<int>(c);

    std::vector<std::vector<int>> rules_of(comps.size());
    for (std::size_t r = 0; r < ix.rules.size(); ++r) rules_of[comp_of[ix.rules[r].head]].push_back(static_cast<int>(r));

    // Each constraint is checked once its last atom has been decided.
    std::vector<std::vector<int>> checks(comps.size());
    for (std::size_t c = 0; c < ix.constraints.size(); ++c) {
        int last = -1;
        for (int a : ix.constraints[c].pos) last = std::max(last, comp_of[a]);
        for (int a : ix.constraints[c].neg) last = std::max(last, comp_of[a]);
        checks[last].push_back(static_cast<int>(c));
    }

    ComponentSolver solver(ix, sem, limits);
    std::vector<Model> family{Model(n, 0)};
    for (std::size_t c = 0; c < comps.size() && !family.empty(); ++c) {
        std::vector<Model> next;
        for (const Model& m : family) {
            for (const std::vector<int>& add : solver.solve(comps[c], rules_of[c], m, static_cast<int>(c), comp_of)) {
                Model ext = m;
                for (int a : add) ext[a] = 1;
                bool ok = std::none_of(checks[c].begin(), checks[c].end(),
                                       [&](int ci) { return violates(ix.constraints[ci], ext); });
                if (!ok) continue;
                next.push_back(std::move(ext));
                if (next.size() > limits.max_answer_sets)
                    throw CapacityError("more than " + std::to_string(limits.max_answer_sets) + " answer sets");
            }
        }
        family = std::move(next);
    }
    return family;
}

std::vector<Interpretation> to_interpretations(const Indexed& ix, const std::vector<Model>& models) {
    std::vector<Interpretation> out;
    out.reserve(models.size());
    for (const Model& m : models) {
        Interpretation i;
        for (std::size_t a = 0; a < m.size(); ++a)
            if (m[a]) i.insert(ix.atoms[a]);
        out.push_back(std::move(i));
    }
    sort_family(out);
    return out;
}

} // namespace elp::detail
