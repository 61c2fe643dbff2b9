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

#include "elp/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace elp {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line), column_(column) {}

bool is_variable(std::string_view term) {
    return !term.empty() && std::isupper(static_cast<unsigned char>(term.front()));
}

bool Atom::is_ground() const {
    return std::none_of(args.begin(), args.end(), [](const std::string& t) { return is_variable(t); });
}

std::string Atom::to_string() const {
    std::string out = predicate;
    if (!args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i) out += ',';
            out += args[i];
        }
        out += ')';
    }
    return out;
}

bool is_epistemic(Form f) {
    return f != Form::POS && f != Form::NAF;
}

const char* form_name(Form f) {
    switch (f) {
    case Form::POS: return "POS";
    case Form::NAF: return "NAF";
    case Form::EPI: return "EPI";
    case Form::EPI_NAF: return "EPI_NAF";
    case Form::NAF_EPI: return "NAF_EPI";
    case Form::NAF_EPI_NAF: return "NAF_EPI_NAF";
    }
    return "?";
}

std::string Literal::to_string() const {
    switch (form) {
    case Form::POS: return atom.to_string();
    case Form::NAF: return "not " + atom.to_string();
    case Form::EPI: return "enot " + atom.to_string();
    case Form::EPI_NAF: return "M " + atom.to_string();
    case Form::NAF_EPI: return "K " + atom.to_string();
    case Form::NAF_EPI_NAF: return "NOT " + atom.to_string();
    }
    return {};
}

bool Rule::has_epistemic() const {
    return std::any_of(body.begin(), body.end(), [](const Literal& l) { return is_epistemic(l.form); });
}

std::string Rule::to_string() const {
    std::string out = head ? head->to_string() : std::string();
    if (!body.empty()) {
        out += head ? " :- " : ":- ";
        for (std::size_t i = 0; i < body.size(); ++i) {
            if (i) out += ", ";
            out += body[i].to_string();
        }
    }
    out += '.';
    return out;
}

bool GroundProgram::has_epistemic() const {
    auto epi = [](const Rule& r) { return r.has_epistemic(); };
    return std::any_of(rules.begin(), rules.end(), epi) ||
           std::any_of(constraints.begin(), constraints.end(), epi);
}

std::set<Atom> GroundProgram::head_atoms() const {
    std::set<Atom> out;
    for (const Rule& r : rules) out.insert(*r.head);
    return out;
}

std::set<Atom> GroundProgram::atoms() const {
    std::set<Atom> out = head_atoms();
    for (const auto* list : {&rules, &constraints})
        for (const Rule& r : *list)
            for (const Literal& l : r.body) out.insert(l.atom);
    return out;
}

bool same_rules(const GroundProgram& a, const GroundProgram& b) {
    auto key = [](const std::vector<Rule>& v) { return std::multiset<Rule>(v.begin(), v.end()); };
    return key(a.rules) == key(b.rules) && key(a.constraints) == key(b.constraints);
}

bool is_reserved_name(std::string_view name) {
    return name.substr(0, kFreshPrefix.size()) == kFreshPrefix;
}

namespace {

template <class P>
std::string print_rules(const P& p) {
    std::string out;
    for (const Rule& r : p.rules) out += r.to_string() + '\n';
    for (const Rule& r : p.constraints) out += r.to_string() + '\n';
    return out;
}

} // namespace

std::string print_program(const GroundProgram& gp) { return print_rules(gp); }
std::string print_program(const Program& p) { return print_rules(p); }

GroundProgram load_program(std::string_view text) {
    return normalize(ground(parse_program(text)));
}

GroundProgram load_program_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_program(buf.str());
}

} // namespace elp
