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

#ifndef ELP_TESTS_SUPPORT_HPP
#define ELP_TESTS_SUPPORT_HPP

// Random program generators and brute-force oracles shared by the
// property suites and the acceptance binary. The oracles follow the
// definitions directly and do not use the component-wise solver.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "elp/as_engine.hpp"
#include "elp/epistemic.hpp"
#include "elp/ras_engine.hpp"
#include "elp/syntax.hpp"

namespace elp::testing {

struct GenOptions {
    int min_atoms = 2;
    int max_atoms = 6;
    int max_rules = 8;
    int max_body = 3;
    int max_epistemic = 0;       // epistemic literal occurrences
    double epistemic_rate = 0.35;
    double constraint_rate = 0.0;
    bool forms_k_not = true;     // allow K and NOT occurrences
};

inline Atom letter(int i) { return Atom(std::string(1, static_cast<char>('a' + i))); }

/// Normalized random program over atoms a, b, c, ...
inline GroundProgram random_program(std::mt19937_64& rng, const GenOptions& o) {
    auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto coin = [&](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };
    const int n = uni(o.min_atoms, o.max_atoms);
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    std::vector<Form> epi_forms{Form::EPI, Form::EPI_NAF};
    if (o.forms_k_not) {
        epi_forms.push_back(Form::NAF_EPI);
        epi_forms.push_back(Form::NAF_EPI_NAF);
    }
    int budget = o.max_epistemic;
    auto body = [&](std::vector<Literal>& out) {
        std::shuffle(ids.begin(), ids.end(), rng);
        int k = uni(0, std::min(o.max_body, n));
        for (int i = 0; i < k; ++i) {
            Form f;
            if (budget > 0 && coin(o.epistemic_rate)) {
                f = epi_forms[uni(0, static_cast<int>(epi_forms.size()) - 1)];
                --budget;
            } else {
                f = coin(0.35) ? Form::POS : Form::NAF;
            }
            out.push_back({letter(ids[i]), f});
        }
    };
    GroundProgram gp;
    const int rules = uni(1, o.max_rules);
    for (int r = 0; r < rules; ++r) {
        Rule rule{letter(uni(0, n - 1)), {}};
        body(rule.body);
        gp.rules.push_back(std::move(rule));
    }
    if (coin(o.constraint_rate)) {
        Rule c;
        Form f = coin(0.5) ? Form::POS : Form::NAF;
        if (budget > 0 && coin(0.3)) f = Form::NAF_EPI;
        c.body.push_back({letter(uni(0, n - 1)), f});
        gp.constraints.push_back(std::move(c));
    }
    return normalize(gp);
}

/// Programs for the world-view corpus: at most 8 head atoms, 4 epistemic
/// literals and 10 rules, at least one epistemic literal.
inline std::vector<GroundProgram> elp_corpus(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    GenOptions o;
    o.min_atoms = 2;
    o.max_atoms = 7;
    o.max_rules = 10;
    o.max_epistemic = 4;
    o.constraint_rate = 0.2;
    std::vector<GroundProgram> out;
    std::set<std::string> seen;
    while (out.size() < count) {
        GroundProgram gp = random_program(rng, o);
        if (!gp.has_epistemic() || gp.head_atoms().size() > 8) continue;
        if (!seen.insert(print_program(gp)).second) continue;
        out.push_back(std::move(gp));
    }
    return out;
}

inline std::vector<Interpretation> subsets(const std::set<Atom>& atoms) {
    std::vector<Atom> v(atoms.begin(), atoms.end());
    std::vector<Interpretation> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << v.size()); ++bits) {
        Interpretation i;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (bits >> k & 1) i.insert(v[k]);
        out.push_back(std::move(i));
    }
    return out;
}

/// Answer sets by checking every subset of the head atoms.
inline std::vector<Interpretation> brute_answer_sets(const GroundProgram& gp) {
    std::vector<Interpretation> out;
    for (Interpretation& i : subsets(gp.head_atoms()))
        if (gamma(gp, i) == i && satisfies_constraints(gp, i)) out.push_back(std::move(i));
    sort_family(out);
    return out;
}

inline bool body_true(const Rule& r, const Interpretation& i) {
    return std::all_of(r.body.begin(), r.body.end(),
                       [&](const Literal& l) { return (i.count(l.atom) > 0) == (l.form == Form::POS); });
}

// Set-based alternating fixpoint; returns the well-founded true atoms.
inline Interpretation wf_true(const GroundProgram& gp) {
    Interpretation t;
    for (;;) {
        Interpretation u = gamma(gp, t);
        Interpretation t2 = gamma(gp, u);
        if (t2 == t) return t;
        t = std::move(t2);
    }
}

/// Resource-based answer sets computed with sets: components in dependency
/// order, each extended by the maximal subsets that contain the component's
/// well-founded atoms and are consistently supported.
inline std::vector<Interpretation> reference_ras(const GroundProgram& gp) {
    std::set<Atom> heads = gp.head_atoms();
    std::map<Atom, std::set<Atom>> reach;
    for (const Atom& a : heads) {
        std::set<Atom> seen{a};
        std::vector<Atom> work{a};
        while (!work.empty()) {
            Atom x = work.back();
            work.pop_back();
            for (const Rule& r : gp.rules)
                if (*r.head == x)
                    for (const Literal& l : r.body)
                        if (heads.count(l.atom) && seen.insert(l.atom).second) work.push_back(l.atom);
        }
        reach[a] = std::move(seen);
    }
    // Components ordered so that dependencies come first.
    std::vector<std::set<Atom>> comps;
    std::set<Atom> placed;
    while (placed.size() < heads.size()) {
        for (const Atom& a : heads) {
            if (placed.count(a)) continue;
            std::set<Atom> comp;
            for (const Atom& b : reach[a])
                if (reach[b].count(a)) comp.insert(b);
            bool ready = std::all_of(reach[a].begin(), reach[a].end(),
                                     [&](const Atom& b) { return comp.count(b) || placed.count(b); });
            if (!ready) continue;
            placed.insert(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
            break;
        }
    }
    std::vector<Interpretation> family{{}};
    for (const std::set<Atom>& comp : comps) {
        std::vector<Interpretation> next;
        for (const Interpretation& t : family) {
            GroundProgram local;
            for (const Rule& r : gp.rules) {
                if (!comp.count(*r.head)) continue;
                Rule lr{r.head, {}};
                bool alive = true;
                for (const Literal& l : r.body) {
                    if (comp.count(l.atom)) lr.body.push_back(l);
                    else if ((t.count(l.atom) > 0) != (l.form == Form::POS)) alive = false;
                }
                if (alive) local.rules.push_back(std::move(lr));
            }
            Interpretation w = wf_true(local);
            std::vector<Interpretation> cs;
            for (Interpretation& m : subsets(comp))
                if (std::includes(m.begin(), m.end(), w.begin(), w.end()) && is_consistently_supported(local, m))
                    cs.push_back(std::move(m));
            for (const Interpretation& m : cs) {
                bool dominated = std::any_of(cs.begin(), cs.end(), [&](const Interpretation& o) {
                    return o.size() > m.size() && std::includes(o.begin(), o.end(), m.begin(), m.end());
                });
                if (dominated) continue;
                Interpretation ext = t;
                ext.insert(m.begin(), m.end());
                next.push_back(std::move(ext));
            }
        }
        family = std::move(next);
    }
    std::vector<Interpretation> out;
    for (Interpretation& m : family)
        if (satisfies_constraints(gp, m)) out.push_back(std::move(m));
    sort_family(out);
    return out;
}

inline std::vector<Guess> guesses_of(const std::vector<WorldView>& wvs) {
    std::vector<Guess> out;
    for (const WorldView& w : wvs) out.push_back(w.guess);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool same_world_views(std::vector<WorldView> a, std::vector<WorldView> b) {
    sort_world_views(a);
    sort_world_views(b);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].answer_sets != b[i].answer_sets || a[i].guess != b[i].guess) return false;
    return true;
}

inline const char* mode_name(ReductMode m) { return m == ReductMode::SHEN_EITER ? "shen-eiter" : "fresh"; }
inline const char* sem_name(Semantics s) { return s == Semantics::AS ? "AS" : "RAS"; }

} // namespace elp::testing

#endif
