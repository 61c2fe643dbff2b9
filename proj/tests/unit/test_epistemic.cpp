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

#include <doctest.h>

#include "elp/epistemic.hpp"

using namespace elp;

namespace {

Interpretation I(std::initializer_list<const char*> names) {
    Interpretation i;
    for (const char* n : names) i.insert(parse_atom(n));
    return i;
}

EpistemicLiteral E(const char* a, bool inner_naf = false) { return {parse_atom(a), inner_naf}; }

Guess G(std::initializer_list<EpistemicLiteral> ls) { return Guess{std::set<EpistemicLiteral>(ls)}; }

std::set<std::set<EpistemicLiteral>> positives(const std::vector<Scenario>& s) {
    std::set<std::set<EpistemicLiteral>> out;
    for (const Scenario& x : s) out.insert(x.positive);
    return out;
}

const char* kPi1 = "a :- not b.\nb :- not d.\nd :- not b.";
const char* kPi2 = "a :- enot b.\nb :- not d.\nd :- not b.";
const char* kPi3 = "a :- enot b, not b.\nb :- not d.\nd :- not b.";
const char* kMutual = "a :- enot b.\nb :- enot a.";
const char* kMutual4 = "a :- c.\nc :- enot b.\nb :- d.\nd :- enot a.";

} // namespace

TEST_SUITE("epistemic") {

TEST_CASE("epistemic literals") {
    CHECK(epistemic_literals(load_program(kPi2)) == std::set<EpistemicLiteral>{E("b")});
    CHECK(epistemic_literals(load_program(kPi1)).empty());
    CHECK(epistemic_literals(load_program("a :- M b.\nb.")) == std::set<EpistemicLiteral>{E("b", true)});
    CHECK(epistemic_literals(load_program("a :- K b, NOT c.\nb. c.")) ==
          std::set<EpistemicLiteral>{E("b"), E("c", true)});
}

TEST_CASE("epistemic reduct in both modes") {
    GroundProgram pi2 = load_program(kPi2);
    CHECK(same_rules(epistemic_reduct(pi2, G({E("b")}), ReductMode::SHEN_EITER), load_program("a.\nb :- not d.\nd :- not b.")));
    CHECK(same_rules(epistemic_reduct(pi2, G({}), ReductMode::SHEN_EITER), load_program(kPi1)));
    GroundProgram fresh = epistemic_reduct(pi2, G({}), ReductMode::FRESH_ATOM);
    REQUIRE(fresh.rules.size() == 3);
    REQUIRE(fresh.rules[0].body.size() == 1);
    CHECK(fresh.rules[0].body[0].form == Form::POS);
    CHECK(is_reserved_name(fresh.rules[0].body[0].atom.predicate));
    CHECK_FALSE(fresh.has_epistemic());
    CHECK_THROWS_AS(epistemic_reduct(pi2, G({E("a")}), ReductMode::SHEN_EITER), PreconditionError);
}

TEST_CASE("reduct of the not-enot forms") {
    GroundProgram g = load_program("a :- K b.\nc :- NOT b.\nd :- M b.\nb :- not e.\ne :- not b.");
    GroundProgram in = epistemic_reduct(g, G({E("b"), E("b", true)}), ReductMode::SHEN_EITER);
    CHECK(same_rules(in, load_program("d.\nb :- not e.\ne :- not b.")));
    GroundProgram out = epistemic_reduct(g, G({}), ReductMode::SHEN_EITER);
    CHECK(same_rules(out, load_program("a.\nc.\nb :- not e.\ne :- not b.")));
}

TEST_CASE("candidate world views") {
    GroundProgram pi2 = load_program(kPi2);
    auto wv = candidate_world_view(pi2, G({E("b")}), ReductMode::SHEN_EITER, Semantics::AS);
    REQUIRE(wv);
    CHECK(wv->answer_sets == std::vector<Interpretation>{I({"a", "b"}), I({"a", "d"})});
    CHECK_FALSE(candidate_world_view(pi2, G({}), ReductMode::SHEN_EITER, Semantics::AS));
    CHECK_FALSE(candidate_world_view(load_program(kMutual), G({E("a"), E("b")}), ReductMode::SHEN_EITER, Semantics::AS));
}

TEST_CASE("oracle world views") {
    std::vector<WorldView> w2 = world_views_oracle(load_program(kPi2), ReductMode::SHEN_EITER, Semantics::AS);
    REQUIRE(w2.size() == 1);
    CHECK(w2[0].guess == G({E("b")}));
    CHECK(w2[0].answer_sets == std::vector<Interpretation>{I({"a", "b"}), I({"a", "d"})});

    std::vector<WorldView> wm = world_views_oracle(load_program(kMutual), ReductMode::SHEN_EITER, Semantics::AS);
    REQUIRE(wm.size() == 2);
    CHECK(wm[0].answer_sets == std::vector<Interpretation>{I({"a"})});
    CHECK(wm[1].answer_sets == std::vector<Interpretation>{I({"b"})});

    std::vector<WorldView> w4 = world_views_oracle(load_program(kMutual4), ReductMode::SHEN_EITER, Semantics::AS);
    REQUIRE(w4.size() == 2);
    CHECK(w4[0].answer_sets == std::vector<Interpretation>{I({"a", "c"})});
    CHECK(w4[1].answer_sets == std::vector<Interpretation>{I({"b", "d"})});

    std::string many;
    for (int i = 0; i < 13; ++i) many += "a" + std::to_string(i) + " :- enot b" + std::to_string(i) + ".\nb" + std::to_string(i) + ".\n";
    CHECK_THROWS_AS(world_views_oracle(load_program(many), ReductMode::SHEN_EITER, Semantics::AS), CapacityError);
}

TEST_CASE("simplified version") {
    SimplifiedVersion s2 = simplified_version(load_program(kPi2));
    REQUIRE(s2.program.rules.size() == 3);
    CHECK(s2.program.head_atoms().size() == 3);
    const Rule& first = s2.program.rules[0];
    REQUIRE(first.body.size() == 1);
    const Atom nb = first.body[0].atom;
    CHECK(first.body[0].form == Form::POS);
    CHECK(s2.fresh.at(nb).role == FreshRole::DECIDER);
    CHECK(same_rules(s2.program, GroundProgram{{Rule{Atom("a"), {pos(nb)}}, Rule{Atom("b"), {naf(nb)}},
                                                Rule{nb, {naf(Atom("b"))}}},
                                               {},
                                               {}}));

    SimplifiedVersion sm = simplified_version(load_program(kMutual));
    CHECK(same_rules(sm.program, load_program("a :- not b.\nb :- not a.")));
    CHECK(sm.cyclic == std::set<Atom>{Atom("a"), Atom("b")});

    SimplifiedVersion sc = simplified_version(load_program("a :- enot b, c.\nb :- enot a.\nc :- not d.\nd :- not c."));
    // a :- not b, a_rho.  b :- not a.  plus the even cycle on a_rho
    REQUIRE(sc.program.rules.size() == 4);
    CHECK(sc.program.rules[0].body[0] == naf(Atom("b")));
    const Atom ar = sc.program.rules[0].body[1].atom;
    CHECK(sc.fresh.at(ar).role == FreshRole::RULE_CHOICE);
    CHECK(sc.program.rules[1] == Rule{Atom("b"), {naf(Atom("a"))}});

    CHECK_THROWS_AS(simplified_version(load_program(kPi1)), PreconditionError);
}

TEST_CASE("scenarios") {
    std::vector<Scenario> s2 = epistemic_scenarios(load_program(kPi2));
    CHECK(positives(s2) == std::set<std::set<EpistemicLiteral>>{{}, {E("b")}});
    CHECK(positives(maximal_scenarios(s2)) == std::set<std::set<EpistemicLiteral>>{{E("b")}});
    CHECK(positives(epistemic_scenarios(load_program(kMutual))) ==
          std::set<std::set<EpistemicLiteral>>{{E("a")}, {E("b")}});
    CHECK(maximal_scenarios({}).empty());
    CHECK(maximal_scenarios(epistemic_scenarios(load_program(kMutual))).size() == 2);
}

TEST_CASE("scenario negative parts come from K and NOT occurrences") {
    GroundProgram g = load_program("a :- K b.\nb :- not c.\nc :- not b.");
    for (const Scenario& s : epistemic_scenarios(g)) {
        for (const EpistemicLiteral& l : s.negative) CHECK_FALSE(s.positive.count(l));
        CHECK(s.positive.size() + s.negative.size() == 1);
    }
}

TEST_CASE("RASCGK test") {
    GroundProgram pi2 = load_program(kPi2);
    CHECK(rascgk_check(pi2, G({E("b")})));
    CHECK_FALSE(rascgk_check(pi2, G({})));
    CHECK_FALSE(rascgk_check(load_program(kMutual), G({E("a"), E("b")})));
    CHECK(rascgk_check(load_program(kMutual), G({E("a")})));
}

TEST_CASE("valid guesses and world views") {
    CHECK(valid_guesses(load_program(kPi2), ReductMode::SHEN_EITER, Semantics::AS) == std::vector<Guess>{G({E("b")})});
    CHECK(valid_guesses(load_program(kMutual), ReductMode::SHEN_EITER, Semantics::AS) ==
          std::vector<Guess>{G({E("a")}), G({E("b")})});
    CHECK(valid_guesses(load_program(kPi1), ReductMode::SHEN_EITER, Semantics::AS) == std::vector<Guess>{G({})});
    CHECK(valid_guesses(load_program("p :- not p."), ReductMode::SHEN_EITER, Semantics::AS).empty());

    std::vector<WorldView> w3 = world_views(load_program(kPi3), ReductMode::SHEN_EITER, Semantics::AS);
    REQUIRE(w3.size() == 1);
    CHECK(w3[0].answer_sets == std::vector<Interpretation>{I({"a", "d"}), I({"b"})});
}

TEST_CASE("the empty guess can be valid") {
    GroundProgram g = load_program("c.\nd.\nc :- enot d.\nd :- enot c.");
    CHECK(valid_guesses(g, ReductMode::SHEN_EITER, Semantics::AS) == std::vector<Guess>{G({})});
    CHECK(world_views_oracle(g, ReductMode::SHEN_EITER, Semantics::AS).size() == 1);
}

TEST_CASE("the reduct modes differ") {
    GroundProgram g = load_program("b :- enot b.\nb :- c.\nc :- not d.\nd :- not c.");
    std::vector<WorldView> se = world_views(g, ReductMode::SHEN_EITER, Semantics::AS);
    REQUIRE(se.size() == 1);
    CHECK(se[0].guess == G({}));
    CHECK(se[0].answer_sets == std::vector<Interpretation>{I({"b", "c"})});
    CHECK(world_views(g, ReductMode::FRESH_ATOM, Semantics::AS).empty());
}

TEST_CASE("guess count bound") {
    BoundReport b2 = guess_count_bound(load_program(kPi2));
    CHECK(b2.n_hat == 3);
    CHECK(b2.bound == doctest::Approx(3.0));
    CHECK(b2.n == 3);
    CHECK(b2.bold_n == 1);
    BoundReport bm = guess_count_bound(load_program(kMutual));
    CHECK(bm.n_hat == 2);
    CHECK(bm.bound == doctest::Approx(2.0801).epsilon(0.001));
    CHECK(guess_count_bound(load_program(kPi1)).bound == 1.0);
}

TEST_CASE("multi-view program") {
    GroundProgram m = load_program(kMutual);
    MultiViewProgram mv = build_multiview_program(m, {G({E("b")}), G({E("a")})});
    CHECK(same_rules(mv.program, GroundProgram{{Rule{view_atom(Atom("a"), 1), {}}, Rule{view_atom(Atom("b"), 2), {}}}, {}, {}}));
    REQUIRE(mv.renaming.size() == 2);
    CHECK(mv.renaming[1].at(Atom("b")) == view_atom(Atom("b"), 2));

    MultiViewProgram one = build_multiview_program(load_program(kPi2), {G({E("b")})});
    GroundProgram expect;
    Atom a1 = view_atom(Atom("a"), 1), b1 = view_atom(Atom("b"), 1), d1 = view_atom(Atom("d"), 1);
    expect.rules = {Rule{a1, {}}, Rule{b1, {naf(d1)}}, Rule{d1, {naf(b1)}}};
    CHECK(same_rules(one.program, expect));
    CHECK_THROWS_AS(build_multiview_program(m, {G({E("c")})}), PreconditionError);
}

TEST_CASE("guess parsing and printing") {
    CHECK(parse_guess("enot b, enot not c") == G({E("b"), E("c", true)}));
    CHECK(parse_guess("{M p(x,y)}") == G({E("p(x,y)", true)}));
    CHECK(parse_guess("") == G({}));
    CHECK_THROWS_AS(parse_guess("K b"), PreconditionError);
    CHECK(G({E("b"), E("c", true)}).to_string() == "{enot b, enot not c}");
}

}
