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

#ifndef ELP_SRC_SOLVER_HPP
#define ELP_SRC_SOLVER_HPP

// Integer-indexed view of an epistemic-free ground program and the
// component-wise enumeration shared by the AS and RAS engines.

#include <cstdint>
#include <map>
#include <vector>

#include "elp/as_engine.hpp"

namespace elp::detail {

struct IRule {
    int head = -1;
    std::vector<int> pos;
    std::vector<int> neg;
};

/// Atoms are the head atoms of the program. Literals over other atoms are
/// evaluated away: a positive one kills its rule, a negative one is true.
struct Indexed {
    std::vector<Atom> atoms;
    std::map<Atom, int> id;
    std::vector<IRule> rules;
    std::vector<IRule> constraints;
    bool trivially_inconsistent = false;
};

Indexed index_program(const GroundProgram& gp, const char* op);

/// Strongly connected components of the head-to-body dependency relation,
/// each listed after every component it depends on.
std::vector<std::vector<int>> components(const Indexed& ix);

using Model = std::vector<char>;

std::vector<Model> enumerate(const Indexed& ix, Semantics sem, const EngineLimits& limits);

std::vector<Interpretation> to_interpretations(const Indexed& ix, const std::vector<Model>& models);

} // namespace elp::detail

#endif
