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

#ifndef ELP_RAS_ENGINE_HPP
#define ELP_RAS_ENGINE_HPP

#include <map>
#include <optional>
#include <vector>

#include "elp/as_engine.hpp"

namespace elp {

enum class QueryMode { CONTEXTUAL, INDEPENDENT };

/// For each atom of m, the rules used in its derivation inside m, in
/// derivation order (each rule's positive body is derived earlier).
struct SupportCertificate {
    std::map<Atom, std::vector<Rule>> support;
};

bool is_consistently_supported(const GroundProgram& gp, const Interpretation& m);
std::optional<SupportCertificate> support_certificate(const GroundProgram& gp, const Interpretation& m);

/// Resource-based answer sets, constraints applied afterwards; sorted.
std::vector<Interpretation> answer_sets_ras(const GroundProgram& gp, const EngineLimits& limits = {});

/// Dispatches on the semantics.
std::vector<Interpretation> answer_sets(const GroundProgram& gp, Semantics sem, const EngineLimits& limits = {});

/// Rules for a and every atom a depends on, plus constraints over kept atoms.
GroundProgram relevant_subprogram(const GroundProgram& gp, const Atom& a);

/// ?A for POS, ?not A for NAF.
bool holds_in_some(const GroundProgram& gp, const Literal& lit, const EngineLimits& limits = {});
bool holds_in_all(const GroundProgram& gp, const Atom& a, const EngineLimits& limits = {});
/// Whether the program has at least one RAS answer set under its constraints.
bool ras_consistent(const GroundProgram& gp, const EngineLimits& limits = {});

std::vector<bool> eval_query_sequence(const GroundProgram& gp, const std::vector<Literal>& queries,
                                      QueryMode mode, const EngineLimits& limits = {});

} // namespace elp

#endif
