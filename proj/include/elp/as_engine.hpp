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

#ifndef ELP_AS_ENGINE_HPP
#define ELP_AS_ENGINE_HPP

#include <cstddef>
#include <set>
#include <vector>

#include "elp/syntax.hpp"

namespace elp {

using Interpretation = std::set<Atom>;

enum class Semantics { AS, RAS };

/// Size caps for the exponential parts of answer-set enumeration.
struct EngineLimits {
    /// Undecided atoms per strongly connected component after well-founded
    /// propagation; each component is enumerated over their subsets.
    std::size_t max_free_atoms = 22;
    std::size_t max_answer_sets = std::size_t(1) << 20;
};

struct PositiveRule {
    Atom head;
    std::vector<Atom> body;
    auto operator<=>(const PositiveRule&) const = default;
    bool operator==(const PositiveRule&) const = default;
};

struct PositiveProgram {
    std::vector<PositiveRule> rules;
    bool operator==(const PositiveProgram&) const = default;
};

PositiveProgram gl_reduct(const GroundProgram& gp, const Interpretation& i);
Interpretation least_model(const PositiveProgram& pp);
Interpretation gamma(const GroundProgram& gp, const Interpretation& i);

/// Stable models that violate no constraint, sorted.
std::vector<Interpretation> answer_sets_as(const GroundProgram& gp, const EngineLimits& limits = {});

/// True iff no constraint body holds in i.
bool satisfies_constraints(const GroundProgram& gp, const Interpretation& i);

/// Canonical text `{a, b}`.
std::string to_string(const Interpretation& i);
/// Lexicographic order on sorted atom lists, used for all family output.
bool interpretation_less(const Interpretation& a, const Interpretation& b);
void sort_family(std::vector<Interpretation>& family);

} // namespace elp

#endif
