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

#ifndef ELP_INTERFACE_HPP
#define ELP_INTERFACE_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "elp/epistemic.hpp"
#include "elp/ras_engine.hpp"

namespace elp {

enum class QueryOp { PLAIN, NAF, ENOT, M, K, NOT, ENOT_W, M_W_SOME, M_W_ALL, K_W, NOT_W };

bool is_world_view_level(QueryOp op);
const char* op_name(QueryOp op);

struct Query {
    QueryOp op = QueryOp::PLAIN;
    Atom atom;
    std::string to_string() const;
};

struct Witness {
    std::size_t world_view = 0;  // 0-based index into the evaluated list
    Interpretation answer_set;
};

struct QueryResult {
    bool value = false;
    std::vector<Witness> witnesses;
};

/// `[K|M|NOT|KW|MWsome|MWall|ENOT|ENOTW|NOTW|not]? atom`, comma-separated; a
/// trailing `.` is accepted.
std::vector<Query> parse_query(const std::string& text);

QueryResult eval_on_world_view(const WorldView& wv, const Query& q);
QueryResult eval_over_world_views(const std::vector<WorldView>& wvs, const Query& q);

/// Evaluates without materializing the world view of phi.
QueryResult guess_tailored_eval(const GroundProgram& gp, const Guess& phi, const Query& q,
                                const EngineLimits& limits = {});

/// _W operators answered through the renamed union of the guess-tailored copies.
bool eval_via_multiview(const GroundProgram& gp, const std::vector<Guess>& guesses, const Query& q,
                        const EngineLimits& limits = {});

struct SolveOptions {
    Semantics semantics = Semantics::AS;
    ReductMode mode = ReductMode::SHEN_EITER;
    bool oracle = false;  // brute-force guess enumeration instead of scenarios
    EngineLimits limits;
};

std::vector<WorldView> compute_world_views(const GroundProgram& gp, const SolveOptions& opts);

/// A conjunction: _W members range over all world views, the others over
/// world view `view` (0-based). In CONTEXTUAL mode plain and `not` members
/// narrow the answer sets later members are checked against. A non-null
/// `context` supplies the starting answer sets (when nonempty) and receives
/// the narrowed ones if the whole conjunction holds.
QueryResult eval_conjunction(const std::vector<WorldView>& wvs, const std::vector<Query>& qs, std::size_t view,
                             QueryMode mode = QueryMode::CONTEXTUAL,
                             std::vector<Interpretation>* context = nullptr);

// Ground rules evaluated on top of the world views. Body literals are
// world-view level queries or plain atoms; a plain atom holds when the layer
// derives it or it is true in every answer set of every world view.
struct LayerRule {
    Atom head;
    std::vector<Query> body;
};

std::vector<LayerRule> parse_layer_rules(const std::string& text);
std::set<Atom> layer_consequences(const std::vector<WorldView>& wvs, const std::vector<LayerRule>& rules);

std::string format_world_view(const WorldView& wv, std::size_t number);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct ReplOptions {
    SolveOptions solve;
    QueryMode mode = QueryMode::CONTEXTUAL;
    bool prompt = false;
};

/// Reads commands from in until `:quit` or end of input.
int run_repl(const std::string& path, std::istream& in, std::ostream& out, std::ostream& err,
             const ReplOptions& opts = {});

} // namespace elp

#endif
