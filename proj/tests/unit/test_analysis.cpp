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

#include <algorithm>

#include <doctest.h>

#include "elp/analysis.hpp"

using namespace elp;

namespace {

std::vector<std::string> names(const Cycle& c) {
    std::vector<std::string> out;
    for (const Atom& a : c.atoms) out.push_back(a.to_string());
    return out;
}

const Edge* find_edge(const DependencyGraph& g, const char* from, const char* to, Sign s) {
    for (const Edge& e : g.edges)
        if (e.from == Atom(from) && e.to == Atom(to) && e.sign == s) return &e;
    return nullptr;
}

} // namespace

TEST_SUITE("analysis") {

TEST_CASE("dependency graph edges") {
    DependencyGraph g = build_dependency_graph(load_program("a :- not b.\nb :- not d.\nd :- not b."));
    CHECK(g.edges.size() == 3);
    CHECK(find_edge(g, "a", "b", Sign::NEG));
    CHECK(find_edge(g, "b", "d", Sign::NEG));
    CHECK(find_edge(g, "d", "b", Sign::NEG));
    CHECK(build_dependency_graph(GroundProgram{}).nodes.empty());

    DependencyGraph p = build_dependency_graph(load_program("p :- not p."));
    REQUIRE(p.edges.size() == 1);
    CHECK(p.edges[0].from == p.edges[0].to);
    CHECK(p.edges[0].sign == Sign::NEG);
}

TEST_CASE("epistemic literals add no edges") {
    DependencyGraph g = build_dependency_graph(load_program("a :- enot b, c.\nb.\nc."));
    REQUIRE(g.edges.size() == 1);
    CHECK(find_edge(g, "a", "c", Sign::POS));
}

TEST_CASE("cycles and parity") {
    CycleReport self = find_cycles(build_dependency_graph(load_program("p :- not p.")));
    REQUIRE(self.cycles.size() == 1);
    CHECK(self.cycles[0].parity == Parity::ODD);
    CHECK(self.handles.at(0).empty());

    CycleReport pi1 = find_cycles(build_dependency_graph(load_program("a :- not b.\nb :- not d.\nd :- not b.")));
    REQUIRE(pi1.cycles.size() == 1);
    CHECK(names(pi1.cycles[0]) == std::vector<std::string>{"b", "d"});
    CHECK(pi1.cycles[0].parity == Parity::EVEN);
    CHECK(pi1.handles.empty());
}

TEST_CASE("handles of the mixed program") {
    DependencyGraph g = build_dependency_graph(load_program("a :- not b.\nb :- not a.\np :- not p, a."));
    CycleReport rep = find_cycles(g);
    REQUIRE(rep.cycles.size() == 2);
    std::size_t odd = rep.cycles[0].parity == Parity::ODD ? 0 : 1;
    CHECK(names(rep.cycles[odd]) == std::vector<std::string>{"p"});
    CHECK(names(rep.cycles[1 - odd]) == std::vector<std::string>{"a", "b"});
    CHECK(rep.cycles[1 - odd].parity == Parity::EVEN);
    const auto& hs = rep.handles.at(odd);
    REQUIRE(hs.size() == 1);
    CHECK(hs[0].kind == HandleKind::IN_CYCLE_CONJUNCT);
    CHECK(hs[0].conjuncts == std::vector<Literal>{pos(Atom("a"))});
}

TEST_CASE("out-of-cycle rules are handles") {
    DependencyGraph g = build_dependency_graph(load_program("p :- not p.\np :- q.\nq :- not r.\nr :- not q."));
    CycleReport rep = find_cycles(g);
    bool found = false;
    for (const auto& [idx, hs] : rep.handles)
        for (const Handle& h : hs)
            if (h.kind == HandleKind::OUT_OF_CYCLE_RULE && h.conjuncts == std::vector<Literal>{pos(Atom("q"))}) found = true;
    CHECK(found);
}

TEST_CASE("enumeration limit is reported") {
    std::string text;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (i != j) text += "x" + std::to_string(i) + " :- not x" + std::to_string(j) + ".\n";
    CycleOptions o;
    o.limit = 10;
    CycleReport rep = find_cycles(build_dependency_graph(load_program(text)), o);
    CHECK(rep.truncated);
    CHECK(rep.cycles.size() == 10);
}

TEST_CASE("parity is invariant under rotation") {
    CycleReport rep = find_cycles(build_dependency_graph(load_program("a :- not b.\nb :- c.\nc :- not d.\nd :- a.")));
    REQUIRE(rep.cycles.size() == 1);
    Cycle c = rep.cycles[0];
    for (std::size_t k = 0; k < c.signs.size(); ++k) {
        std::rotate(c.signs.begin(), c.signs.begin() + 1, c.signs.end());
        CHECK(std::count(c.signs.begin(), c.signs.end(), Sign::NEG) % 2 == 0);
    }
}

TEST_CASE("coincidence report") {
    CHECK(check_coincidence(load_program("a :- not b.\nb :- not d.\nd :- not b.")).call_consistent);

    CoincidenceReport mixed = check_coincidence(load_program("a :- not b.\nb :- not a.\np :- not p, a."));
    CHECK_FALSE(mixed.call_consistent);
    CHECK_FALSE(mixed.condition1);
    CHECK_FALSE(mixed.condition2);
    CHECK_FALSE(mixed.witnesses.empty());

    // the handle q is structurally isolated, but the program has no AS
    // answer set while its RAS answer set is {q}
    CoincidenceReport q = check_coincidence(load_program("q.\np :- not p, q."));
    CHECK_FALSE(q.call_consistent);
    CHECK_FALSE(q.as_consistent);
    CHECK_FALSE(q.condition2);

    CoincidenceReport iso = check_coincidence(load_program("p :- not p, q.\nq :- not r.\nr :- not q."));
    CHECK(iso.as_consistent);
    CHECK_FALSE(iso.structural2);

    CoincidenceReport lone = check_coincidence(load_program("p :- not p, not q.\nq :- not s.\ns :- not t.\nt :- not s."));
    CHECK(lone.as_consistent);
    CHECK_FALSE(lone.call_consistent);
}

TEST_CASE("exact call-consistency check agrees with cycle parity") {
    CHECK(is_call_consistent(build_dependency_graph(load_program("a :- not b.\nb :- not a."))));
    CHECK_FALSE(is_call_consistent(build_dependency_graph(load_program("a :- not b.\nb :- not c.\nc :- not a."))));
    CHECK_FALSE(is_call_consistent(build_dependency_graph(load_program("a :- b.\nb :- not a."))));
}

}
