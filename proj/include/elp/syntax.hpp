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

#ifndef ELP_SYNTAX_HPP
#define ELP_SYNTAX_HPP

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "elp/error.hpp"

namespace elp {

/// Atoms are ordered by predicate, then argument-wise; for the identifier
/// alphabet this coincides with the order of their printed form.
struct Atom {
    std::string predicate;
    std::vector<std::string> args;

    Atom() = default;
    explicit Atom(std::string pred, std::vector<std::string> a = {})
        : predicate(std::move(pred)), args(std::move(a)) {}

    bool is_ground() const;
    std::string to_string() const;

    auto operator<=>(const Atom&) const = default;
    bool operator==(const Atom&) const = default;
};

bool is_variable(std::string_view term);

/// The six literal forms. K, M and NOT are surface sugar for the last three.
enum class Form {
    POS,         // A
    NAF,         // not A
    EPI,         // enot A
    EPI_NAF,     // enot not A   (M A)
    NAF_EPI,     // not enot A   (K A)
    NAF_EPI_NAF  // not enot not A (NOT A)
};

bool is_epistemic(Form f);
const char* form_name(Form f);

struct Literal {
    Atom atom;
    Form form = Form::POS;

    std::string to_string() const;

    auto operator<=>(const Literal&) const = default;
    bool operator==(const Literal&) const = default;
};

inline Literal pos(Atom a) { return {std::move(a), Form::POS}; }
inline Literal naf(Atom a) { return {std::move(a), Form::NAF}; }

/// A rule without head is a constraint.
struct Rule {
    std::optional<Atom> head;
    std::vector<Literal> body;

    bool is_constraint() const { return !head.has_value(); }
    bool is_fact() const { return head.has_value() && body.empty(); }
    bool has_epistemic() const;
    std::string to_string() const;

    auto operator<=>(const Rule&) const = default;
    bool operator==(const Rule&) const = default;
};

struct Program {
    std::vector<Rule> rules;
    std::vector<Rule> constraints;
    std::set<std::string> constants;

    bool empty() const { return rules.empty() && constraints.empty(); }
    bool operator==(const Program&) const = default;
};

/// Variable-free program consumed by the engines.
struct GroundProgram {
    std::vector<Rule> rules;
    std::vector<Rule> constraints;
    std::set<std::string> constants;

    bool empty() const { return rules.empty() && constraints.empty(); }
    bool has_epistemic() const;
    std::set<Atom> head_atoms() const;
    std::set<Atom> atoms() const;
    bool operator==(const GroundProgram&) const = default;
};

/// Equality modulo rule and constraint order.
bool same_rules(const GroundProgram& a, const GroundProgram& b);

Program parse_program(std::string_view text);
GroundProgram ground(const Program& p);
GroundProgram ground(const GroundProgram& gp);
GroundProgram normalize(const GroundProgram& gp);
std::string print_program(const GroundProgram& gp);
std::string print_program(const Program& p);

/// parse, ground and normalize in one step.
GroundProgram load_program(std::string_view text);
GroundProgram load_program_file(const std::string& path);

/// Parses a single ground atom such as `p(a,b)`.
Atom parse_atom(std::string_view text);
/// Parses a single body literal, sugar allowed.
Literal parse_literal(std::string_view text);

/// True for names produced internally; user programs may not use them.
bool is_reserved_name(std::string_view name);
inline constexpr std::string_view kFreshPrefix = "__f_";

} // namespace elp

#endif
