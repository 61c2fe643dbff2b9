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

#ifndef ELP_EPISTEMIC_HPP
#define ELP_EPISTEMIC_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "elp/as_engine.hpp"
#include "elp/syntax.hpp"

namespace elp {

/// `enot A` (inner_naf false) or `enot not A` (inner_naf true).
struct EpistemicLiteral {
    Atom atom;
    bool inner_naf = false;

    std::string to_string() const;
    auto operator<=>(const EpistemicLiteral&) const = default;
    bool operator==(const EpistemicLiteral&) const = default;
};

/// The epistemic literal a body literal mentions; none for POS and NAF.
std::optional<EpistemicLiteral> epistemic_part(const Literal& l);

struct Guess {
    std::set<EpistemicLiteral> assumed;

    bool contains(const EpistemicLiteral& l) const { return assumed.count(l) > 0; }
    std::string to_string() const;
    auto operator<=>(const Guess&) const = default;
    bool operator==(const Guess&) const = default;
};

/// Parses "enot b, enot not c" (M sugar accepted); empty text is the empty guess.
Guess parse_guess(const std::string& text);

struct Scenario {
    std::set<EpistemicLiteral> positive;
    std::set<EpistemicLiteral> negative;
    Interpretation source;  // the answer set of the simplified version it came from

    std::string to_string() const;
};

struct WorldView {
    std::vector<Interpretation> answer_sets;
    Guess guess;
};

enum class ReductMode { SHEN_EITER, FRESH_ATOM };

std::set<EpistemicLiteral> epistemic_literals(const GroundProgram& gp);

GroundProgram epistemic_reduct(const GroundProgram& gp, const Guess& phi, ReductMode mode);

/// The reduct with assumed literals true and the others false, dead rules
/// dropped; no fresh atoms.
GroundProgram tailored_program(const GroundProgram& gp, const Guess& phi);

std::optional<WorldView> candidate_world_view(const GroundProgram& gp, const Guess& phi, ReductMode mode,
                                              Semantics sem, const EngineLimits& limits = {});

std::vector<WorldView> world_views_oracle(const GroundProgram& gp, ReductMode mode, Semantics sem,
                                          const EngineLimits& limits = {}, std::size_t max_literals = 12);

enum class FreshRole {
    DECIDER,          // N_C, deciding enot C for an atom C that heads no rule
    PRIME,            // A' standing for not A inside enot not A
    PRIME_DECIDER,    // N_A' deciding enot not A
    RULE_CHOICE,      // a_rho replacing non-epistemic conjuncts of rule rho
    RULE_CHOICE_DUAL  // no_a_rho
};

struct FreshAtomInfo {
    FreshRole role = FreshRole::DECIDER;
    std::optional<EpistemicLiteral> literal;
    std::optional<std::size_t> rule;  // index into the source rules
};

struct SimplifiedVersion {
    GroundProgram program;
    std::map<Atom, FreshAtomInfo> fresh;
    std::set<Atom> cyclic;  // atoms of EP(gp) that keep a defining rule
};

SimplifiedVersion simplified_version(const GroundProgram& gp);

std::vector<Scenario> epistemic_scenarios(const GroundProgram& gp, const EngineLimits& limits = {});
std::vector<Scenario> maximal_scenarios(const std::vector<Scenario>& s);

bool rascgk_check(const GroundProgram& gp, const Guess& phi, const EngineLimits& limits = {});

std::vector<Guess> valid_guesses(const GroundProgram& gp, ReductMode mode, Semantics sem,
                                 const EngineLimits& limits = {});
std::vector<WorldView> world_views(const GroundProgram& gp, ReductMode mode, Semantics sem,
                                   const EngineLimits& limits = {});

struct BoundReport {
    std::size_t n_hat = 0;   // head atoms of the simplified version
    std::size_t n = 0;       // head atoms of the program
    std::size_t bold_n = 0;  // atoms under epistemic negation
    double bound = 1.0;      // 3^(n_hat/3)
};

BoundReport guess_count_bound(const GroundProgram& gp);

struct MultiViewProgram {
    GroundProgram program;
    std::vector<std::map<Atom, Atom>> renaming;  // per copy: source atom to its copy
};

MultiViewProgram build_multiview_program(const GroundProgram& gp, const std::vector<Guess>& guesses);

/// Copy-i name of an atom.
Atom view_atom(const Atom& a, std::size_t copy);

std::string to_string(const std::vector<Interpretation>& family);
void sort_world_views(std::vector<WorldView>& wvs);

} // namespace elp

#endif
