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

#ifndef ELP_ANALYSIS_HPP
#define ELP_ANALYSIS_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "elp/syntax.hpp"

namespace elp {

enum class Sign { POS, NEG };
enum class Parity { EVEN, ODD };

struct Edge {
    Atom from;
    Atom to;
    Sign sign = Sign::POS;
    std::vector<std::size_t> rules;  // indices into DependencyGraph::rules
};

/// Atom-level dependencies; epistemic literals contribute no edges.
struct DependencyGraph {
    std::set<Atom> nodes;
    std::vector<Edge> edges;  // one per (from, to, sign), sorted
    std::vector<Rule> rules;  // the program rules the edges refer to
    std::vector<Rule> constraints;
};

/// atoms[i] -> atoms[i+1] (cyclically) carries signs[i].
struct Cycle {
    std::vector<Atom> atoms;
    std::vector<Sign> signs;
    Parity parity = Parity::EVEN;
    bool operator==(const Cycle&) const = default;
};

enum class HandleKind {
    IN_CYCLE_CONJUNCT,  // other conjuncts of a rule realizing a cycle edge
    OUT_OF_CYCLE_RULE   // body of another rule for a cycle atom
};

struct Handle {
    std::vector<Literal> conjuncts;
    HandleKind kind = HandleKind::IN_CYCLE_CONJUNCT;
    std::size_t rule = 0;
};

struct CycleReport {
    std::vector<Cycle> cycles;
    std::map<std::size_t, std::vector<Handle>> handles;  // keyed by index of an ODD cycle
    bool truncated = false;
};

struct CycleOptions {
    std::size_t limit = 10000;
};

struct CoincidenceReport {
    bool call_consistent = true;
    bool as_consistent = true;
    bool condition1 = true;
    bool condition2 = true;
    bool structural1 = true;  // the syntactic part of condition1 alone
    bool structural2 = true;  // the syntactic part of condition2 alone
    bool truncated = false;
    std::vector<std::string> witnesses;
};

DependencyGraph build_dependency_graph(const GroundProgram& gp);
CycleReport find_cycles(const DependencyGraph& g, const CycleOptions& opts = {});

/// Handles of one cycle, whatever its parity.
std::vector<Handle> cycle_handles(const DependencyGraph& g, const Cycle& c);

/// Exact test for odd cycles, independent of cycle enumeration limits.
bool is_call_consistent(const DependencyGraph& g);

/// Sufficient conditions for AS and RAS answer sets to coincide. condition1
/// and condition2 hold only for programs that have an AS answer set.
CoincidenceReport check_coincidence(const GroundProgram& gp, const CycleOptions& opts = {});

std::string to_string(const Cycle& c);
std::string to_text(const CoincidenceReport& r);

} // namespace elp

#endif
