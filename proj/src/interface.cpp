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

#include "elp/interface.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace elp {

bool is_world_view_level(QueryOp op) {
    switch (op) {
    case QueryOp::ENOT_W:
    case QueryOp::M_W_SOME:
    case QueryOp::M_W_ALL:
    case QueryOp::K_W:
    case QueryOp::NOT_W: return true;
    default: return false;
    }
}

const char* op_name(QueryOp op) {
    switch (op) {
    case QueryOp::PLAIN: return "";
    case QueryOp::NAF: return "not";
    case QueryOp::ENOT: return "ENOT";
    case QueryOp::M: return "M";
    case QueryOp::K: return "K";
    case QueryOp::NOT: return "NOT";
    case QueryOp::ENOT_W: return "ENOTW";
    case QueryOp::M_W_SOME: return "MWsome";
    case QueryOp::M_W_ALL: return "MWall";
    case QueryOp::K_W: return "KW";
    case QueryOp::NOT_W: return "NOTW";
    }
    return "?";
}

std::string Query::to_string() const {
    std::string p = op_name(op);
    return p.empty() ? atom.to_string() : p + " " + atom.to_string();
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Query parse_one(const std::string& text) {
    static const std::pair<const char*, QueryOp> prefixes[] = {
        {"KW", QueryOp::K_W},       {"MWsome", QueryOp::M_W_SOME}, {"MWall", QueryOp::M_W_ALL},
        {"ENOTW", QueryOp::ENOT_W}, {"NOTW", QueryOp::NOT_W},      {"ENOT", QueryOp::ENOT},
        {"enot", QueryOp::ENOT},    {"NOT", QueryOp::NOT},         {"not", QueryOp::NAF},
        {"K", QueryOp::K},          {"M", QueryOp::M}};
    Query q;
    std::string rest = text;
    auto split = rest.find_first_of(" \t");
    if (split != std::string::npos && split < rest.find('(')) {
        std::string word = rest.substr(0, split);
        bool matched = false;
        for (const auto& [name, op] : prefixes) {
            if (word == name) {
                q.op = op;
                rest = trim(rest.substr(split));
                matched = true;
                break;
            }
        }
        if (!matched) throw PreconditionError("unknown query operator '" + word + "'");
    }
    q.atom = parse_atom(rest);
    if (!q.atom.is_ground()) throw PreconditionError("query atom must be ground: " + rest);
    return q;
}

bool contains(const Interpretation& m, const Atom& a) { return m.count(a) > 0; }

// Existential and universal membership tests over one family, with the
// member that certifies the answer.
std::optional<std::size_t> find_member(const std::vector<Interpretation>& fam, const Atom& a, bool with) {
    for (std::size_t i = 0; i < fam.size(); ++i)
        if (contains(fam[i], a) == with) return i;
    return std::nullopt;
}

} // namespace

std::vector<Query> parse_query(const std::string& text) {
    std::string body = trim(text);
    if (!body.empty() && body.back() == '.') body = trim(body.substr(0, body.size() - 1));
    if (body.rfind("?-", 0) == 0) body = trim(body.substr(2));
    std::vector<Query> out;
    std::string cur;
    int depth = 0;
    for (char c : body) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(parse_one(trim(cur)));
            cur.clear();
            continue;
        }
        cur += c;
    }
    if (trim(cur).empty()) throw PreconditionError("empty query");
    out.push_back(parse_one(trim(cur)));
    return out;
}

QueryResult eval_on_world_view(const WorldView& wv, const Query& q) {
    if (is_world_view_level(q.op)) throw PreconditionError(q.to_string() + " ranges over all world views");
    if (wv.answer_sets.empty()) throw PreconditionError("empty world view");
    const auto& fam = wv.answer_sets;
    QueryResult r;
    auto witness = [&](std::optional<std::size_t> i) {
        if (i) r.witnesses.push_back({0, fam[*i]});
    };
    switch (q.op) {
    case QueryOp::PLAIN:
    case QueryOp::M: {
        auto i = find_member(fam, q.atom, true);
        r.value = i.has_value();
        witness(i);
        break;
    }
    case QueryOp::NAF:
    case QueryOp::ENOT: {
        auto i = find_member(fam, q.atom, false);
        r.value = i.has_value();
        witness(i);
        break;
    }
    case QueryOp::K: {
        auto i = find_member(fam, q.atom, false);
        r.value = !i.has_value();
        witness(i);
        break;
    }
    case QueryOp::NOT: {
        auto i = find_member(fam, q.atom, true);
        r.value = !i.has_value();
        witness(i);
        break;
    }
    default: break;
    }
    return r;
}

QueryResult eval_over_world_views(const std::vector<WorldView>& wvs, const Query& q) {
    if (!is_world_view_level(q.op)) throw PreconditionError(q.to_string() + " is not a world-view level query");
    if (wvs.empty()) throw PreconditionError("no world views");
    QueryOp inner;
    bool every;
    switch (q.op) {
    case QueryOp::K_W: inner = QueryOp::K; every = true; break;
    case QueryOp::M_W_SOME: inner = QueryOp::M; every = false; break;
    case QueryOp::M_W_ALL: inner = QueryOp::M; every = true; break;
    case QueryOp::ENOT_W: inner = QueryOp::ENOT; every = false; break;
    default: inner = QueryOp::NOT; every = true; break;
    }
    QueryResult r;
    r.value = every;
    for (std::size_t i = 0; i < wvs.size(); ++i) {
        QueryResult one = eval_on_world_view(wvs[i], Query{inner, q.atom});
        if (one.value != every) {
            r.value = !every;
            for (Witness& w : one.witnesses) r.witnesses.push_back({i, std::move(w.answer_set)});
            break;
        }
    }
    return r;
}

QueryResult guess_tailored_eval(const GroundProgram& gp, const Guess& phi, const Query& q, const EngineLimits& limits) {
    if (is_world_view_level(q.op)) throw PreconditionError(q.to_string() + " ranges over all world views");
    if (!rascgk_check(gp, phi, limits)) throw PreconditionError("invalid guess " + phi.to_string());
    GroundProgram t = tailored_program(gp, phi);
    QueryResult r;
    switch (q.op) {
    case QueryOp::PLAIN:
    case QueryOp::M: r.value = holds_in_some(t, pos(q.atom), limits); break;
    case QueryOp::NAF:
    case QueryOp::ENOT: r.value = holds_in_some(t, naf(q.atom), limits); break;
    case QueryOp::K: r.value = holds_in_all(t, q.atom, limits); break;
    case QueryOp::NOT: r.value = !holds_in_some(t, pos(q.atom), limits); break;
    default: break;
    }
    return r;
}

bool eval_via_multiview(const GroundProgram& gp, const std::vector<Guess>& guesses, const Query& q,
                        const EngineLimits& limits) {
    if (!is_world_view_level(q.op)) throw PreconditionError(q.to_string() + " is not a world-view level query");
    if (guesses.empty()) throw PreconditionError("no guesses");
    MultiViewProgram mv = build_multiview_program(gp, guesses);
    auto per_copy = [&](std::size_t copy) {
        Atom a = view_atom(q.atom, copy);
        switch (q.op) {
        case QueryOp::K_W: return holds_in_all(mv.program, a, limits);
        case QueryOp::M_W_SOME:
        case QueryOp::M_W_ALL: return holds_in_some(mv.program, pos(a), limits);
        case QueryOp::ENOT_W: return holds_in_some(mv.program, naf(a), limits);
        default: return !holds_in_some(mv.program, pos(a), limits);
        }
    };
    const bool every = q.op == QueryOp::K_W || q.op == QueryOp::M_W_ALL || q.op == QueryOp::NOT_W;
    for (std::size_t i = 1; i <= guesses.size(); ++i)
        if (per_copy(i) != every) return !every;
    return every;
}

std::vector<WorldView> compute_world_views(const GroundProgram& gp, const SolveOptions& opts) {
    if (opts.oracle) return world_views_oracle(gp, opts.mode, opts.semantics, opts.limits);
    return world_views(gp, opts.mode, opts.semantics, opts.limits);
}

QueryResult eval_conjunction(const std::vector<WorldView>& wvs, const std::vector<Query>& qs, std::size_t view,
                             QueryMode mode, std::vector<Interpretation>* ctx) {
    if (wvs.empty()) throw PreconditionError("program has no world views");
    QueryResult r;
    r.value = true;
    std::vector<Interpretation> context;
    if (ctx) context = *ctx;
    for (const Query& q : qs) {
        QueryResult one;
        if (is_world_view_level(q.op)) {
            one = eval_over_world_views(wvs, q);
        } else {
            if (view >= wvs.size())
                throw PreconditionError("world view " + std::to_string(view + 1) + " does not exist");
            if (context.empty()) context = wvs[view].answer_sets;
            if (q.op == QueryOp::PLAIN || q.op == QueryOp::NAF) {
                // Query sequences narrow to the answer sets that satisfy every
                // literal so far.
                std::vector<Interpretation> narrowed;
                for (const Interpretation& m : context)
                    if (contains(m, q.atom) == (q.op == QueryOp::PLAIN)) narrowed.push_back(m);
                one.value = !narrowed.empty();
                if (one.value) {
                    one.witnesses.push_back({view, narrowed.front()});
                    if (mode == QueryMode::CONTEXTUAL) context = std::move(narrowed);
                }
            } else {
                one = eval_on_world_view(wvs[view], q);
                for (Witness& w : one.witnesses) w.world_view = view;
            }
        }
        r.value = r.value && one.value;
        for (Witness& w : one.witnesses) r.witnesses.push_back(std::move(w));
        if (!r.value) break;
    }
    if (ctx && r.value && mode == QueryMode::CONTEXTUAL) *ctx = std::move(context);
    return r;
}

std::vector<LayerRule> parse_layer_rules(const std::string& text) {
    std::string clean;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) clean += line.substr(0, line.find('%')) + ' ';
    std::vector<LayerRule> out;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i < clean.size(); ++i) {
        if (clean[i] == '(') ++depth;
        else if (clean[i] == ')') --depth;
        else if (clean[i] == '.' && depth == 0) {
            std::string r = trim(clean.substr(start, i - start));
            start = i + 1;
            if (r.empty()) continue;
            LayerRule lr;
            auto arrow = r.find(":-");
            lr.head = parse_atom(trim(r.substr(0, arrow)));
            if (!lr.head.is_ground()) throw PreconditionError("layer rule head must be ground: " + r);
            if (arrow != std::string::npos) lr.body = parse_query(r.substr(arrow + 2));
            for (const Query& q : lr.body)
                if (q.op != QueryOp::PLAIN && !is_world_view_level(q.op))
                    throw PreconditionError("layer rule bodies take plain atoms or world-view level queries: " + r);
            out.push_back(std::move(lr));
        }
    }
    if (!trim(clean.substr(start)).empty()) throw PreconditionError("layer rule missing final '.'");
    return out;
}

std::set<Atom> layer_consequences(const std::vector<WorldView>& wvs, const std::vector<LayerRule>& rules) {
    std::set<Atom> derived;
    for (bool changed = true; changed;) {
        changed = false;
        for (const LayerRule& r : rules) {
            if (derived.count(r.head)) continue;
            bool holds = true;
            for (const Query& q : r.body) {
                if (q.op == QueryOp::PLAIN)
                    holds = derived.count(q.atom) || eval_over_world_views(wvs, Query{QueryOp::K_W, q.atom}).value;
                else
                    holds = eval_over_world_views(wvs, q).value;
                if (!holds) break;
            }
            if (holds) changed = derived.insert(r.head).second || changed;
        }
    }
    return derived;
}

std::string format_world_view(const WorldView& wv, std::size_t number) {
    return "WV " + std::to_string(number) + " (guess: " + wv.guess.to_string() + "): " + to_string(wv.answer_sets);
}

} // namespace elp
