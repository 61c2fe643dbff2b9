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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "elp/analysis.hpp"
#include "elp/interface.hpp"

namespace elp {

namespace {

using nlohmann::json;

json to_json(const Interpretation& i) {
    json a = json::array();
    for (const Atom& x : i) a.push_back(x.to_string());
    return a;
}

json to_json(const std::vector<Interpretation>& fam) {
    json a = json::array();
    for (const Interpretation& i : fam) a.push_back(to_json(i));
    return a;
}

json to_json(const std::set<EpistemicLiteral>& s) {
    json a = json::array();
    for (const EpistemicLiteral& l : s) a.push_back(l.to_string());
    return a;
}

json to_json(const QueryResult& r) {
    json w = json::array();
    for (const Witness& x : r.witnesses) w.push_back({{"world_view", x.world_view + 1}, {"answer_set", to_json(x.answer_set)}});
    return {{"value", r.value}, {"witnesses", w}};
}

struct Common {
    std::string file;
    std::string semantics = "as";
    std::string method = "scenario";
    std::string reduct = "shen-eiter";
    std::string mode = "contextual";
    std::string guess;
    std::string query;
    std::string layer;
    std::size_t view = 1;
    bool json = false;

    SolveOptions solve() const {
        SolveOptions o;
        o.semantics = semantics == "ras" ? Semantics::RAS : Semantics::AS;
        o.mode = reduct == "fresh" ? ReductMode::FRESH_ATOM : ReductMode::SHEN_EITER;
        o.oracle = method == "oracle";
        return o;
    }
    QueryMode query_mode() const { return mode == "independent" ? QueryMode::INDEPENDENT : QueryMode::CONTEXTUAL; }
};

void add_common(CLI::App* sc, Common& c) {
    sc->add_option("FILE", c.file, "program file")->required();
    sc->add_option("--semantics", c.semantics, "as or ras")->check(CLI::IsMember({"as", "ras"}));
    sc->add_option("--method", c.method, "scenario or oracle")->check(CLI::IsMember({"scenario", "oracle"}));
    sc->add_option("--reduct", c.reduct, "shen-eiter or fresh")->check(CLI::IsMember({"shen-eiter", "fresh"}));
    sc->add_option("--mode", c.mode, "contextual or independent")->check(CLI::IsMember({"contextual", "independent"}));
    sc->add_flag("--json", c.json, "JSON output");
}

int cmd_answersets(const Common& c, std::ostream& out) {
    GroundProgram gp = load_program_file(c.file);
    if (gp.has_epistemic()) throw PreconditionError("program has epistemic literals; use worldviews");
    std::vector<Interpretation> fam = answer_sets(gp, c.solve().semantics);
    if (c.json) out << to_json(fam).dump() << '\n';
    else
        for (const Interpretation& i : fam) out << to_string(i) << '\n';
    return 0;
}

int cmd_scenarios(const Common& c, std::ostream& out) {
    GroundProgram gp = load_program_file(c.file);
    std::vector<Scenario> all = epistemic_scenarios(gp);
    std::set<std::set<EpistemicLiteral>> maximal;
    for (const Scenario& s : maximal_scenarios(all)) maximal.insert(s.positive);
    json arr = json::array();
    std::size_t k = 0;
    for (const Scenario& s : all) {
        bool is_max = maximal.count(s.positive) > 0;
        if (c.json) {
            arr.push_back({{"positive", to_json(s.positive)},
                           {"negative", to_json(s.negative)},
                           {"maximal", is_max},
                           {"source", to_json(s.source)}});
            continue;
        }
        out << "S " << ++k << ": " << s.to_string() << (is_max ? " (maximal)" : "") << '\n';
    }
    if (c.json) out << arr.dump() << '\n';
    return 0;
}

int cmd_worldviews(const Common& c, std::ostream& out) {
    GroundProgram gp = load_program_file(c.file);
    std::vector<WorldView> wvs = compute_world_views(gp, c.solve());
    json arr = json::array();
    for (std::size_t i = 0; i < wvs.size(); ++i) {
        if (c.json)
            arr.push_back({{"index", i + 1}, {"guess", to_json(wvs[i].guess.assumed)}, {"answer_sets", to_json(wvs[i].answer_sets)}});
        else
            out << format_world_view(wvs[i], i + 1) << '\n';
    }
    if (c.json) out << arr.dump() << '\n';
    return 0;
}

int cmd_check_guess(const Common& c, std::ostream& out) {
    GroundProgram gp = load_program_file(c.file);
    Guess g = parse_guess(c.guess);
    SolveOptions o = c.solve();
    bool candidate;
    std::optional<WorldView> wv = candidate_world_view(gp, g, o.mode, o.semantics);
    if (o.semantics == Semantics::RAS && o.mode == ReductMode::FRESH_ATOM) candidate = rascgk_check(gp, g);
    else candidate = wv.has_value();
    bool valid = false;
    if (candidate) {
        for (const Guess& v : valid_guesses(gp, o.mode, o.semantics))
            if (v == g) valid = true;
    }
    if (c.json) {
        json j = {{"guess", to_json(g.assumed)}, {"candidate", candidate}, {"valid", valid}};
        if (wv) j["answer_sets"] = to_json(wv->answer_sets);
        out << j.dump() << '\n';
    } else {
        out << "candidate: " << (candidate ? "true" : "false") << '\n';
        out << "valid: " << (valid ? "true" : "false") << '\n';
        if (wv) out << "answer sets: " << to_string(wv->answer_sets) << '\n';
    }
    return valid ? 0 : 1;
}

int cmd_bound(const Common& c, std::ostream& out) {
    GroundProgram gp = load_program_file(c.file);
    BoundReport b = guess_count_bound(gp);
    std::size_t scenarios = gp.has_epistemic() ? epistemic_scenarios(gp).size() : 1;
    std::size_t valid = valid_guesses(gp, c.solve().mode, c.solve().semantics).size();
    if (c.json) {
        out << json({{"n_hat", b.n_hat}, {"n", b.n}, {"bold_n", b.bold_n}, {"bound", b.bound},
                     {"scenarios", scenarios}, {"valid_guesses", valid}})
                   .dump()
            << '\n';
        return 0;
    }
    std::ostringstream bound;
    bound.precision(4);
    bound << b.bound;
    out << "n_hat: " << b.n_hat << '\n'
        << "n: " << b.n << '\n'
        << "bold_n: " << b.bold_n << '\n'
        << "bound: " << bound.str() << '\n'
        << "scenarios: " << scenarios << '\n'
        << "valid_guesses: " << valid << '\n';
    return 0;
}

int cmd_analyze(const Common& c, std::ostream& out) {
    GroundProgram gp = load_program_file(c.file);
    DependencyGraph g = build_dependency_graph(gp);
    CycleReport cyc = find_cycles(g);
    CoincidenceReport rep = check_coincidence(gp);
    auto handle_text = [](const Handle& h) {
        std::string s = h.kind == HandleKind::IN_CYCLE_CONJUNCT ? "conjunct" : "rule";
        s += " {";
        for (std::size_t i = 0; i < h.conjuncts.size(); ++i) s += (i ? ", " : "") + h.conjuncts[i].to_string();
        return s + "}";
    };
    if (c.json) {
        json cycles = json::array();
        for (std::size_t i = 0; i < cyc.cycles.size(); ++i) {
            json atoms = json::array();
            for (const Atom& a : cyc.cycles[i].atoms) atoms.push_back(a.to_string());
            json handles = json::array();
            if (auto it = cyc.handles.find(i); it != cyc.handles.end())
                for (const Handle& h : it->second) handles.push_back(handle_text(h));
            cycles.push_back({{"atoms", atoms},
                              {"parity", cyc.cycles[i].parity == Parity::ODD ? "ODD" : "EVEN"},
                              {"handles", handles}});
        }
        out << json({{"call_consistent", rep.call_consistent},
                     {"as_consistent", rep.as_consistent},
                     {"condition1", rep.condition1},
                     {"condition2", rep.condition2},
                     {"truncated", rep.truncated},
                     {"witnesses", rep.witnesses},
                     {"cycles", cycles}})
                   .dump()
            << '\n';
        return 0;
    }
    for (std::size_t i = 0; i < cyc.cycles.size(); ++i) {
        out << "cycle " << to_string(cyc.cycles[i]) << ' ' << (cyc.cycles[i].parity == Parity::ODD ? "ODD" : "EVEN") << '\n';
        if (auto it = cyc.handles.find(i); it != cyc.handles.end())
            for (const Handle& h : it->second) out << "  handle " << handle_text(h) << '\n';
    }
    out << to_text(rep);
    return 0;
}

int cmd_query(const Common& c, std::ostream& out) {
    GroundProgram gp = load_program_file(c.file);
    std::vector<Query> qs = parse_query(c.query);
    std::vector<WorldView> wvs = compute_world_views(gp, c.solve());
    if (c.view == 0) throw PreconditionError("--view counts from 1");
    QueryResult r = eval_conjunction(wvs, qs, c.view - 1, c.query_mode());
    if (c.json) out << to_json(r).dump() << '\n';
    else out << (r.value ? "true" : "false") << '\n';
    return r.value ? 0 : 1;
}

int cmd_derive(const Common& c, std::ostream& out) {
    GroundProgram gp = load_program_file(c.file);
    std::ifstream in(c.layer);
    if (!in) throw Error("cannot open " + c.layer);
    std::stringstream text;
    text << in.rdbuf();
    std::set<Atom> derived = layer_consequences(compute_world_views(gp, c.solve()), parse_layer_rules(text.str()));
    if (c.json) out << to_json(Interpretation(derived.begin(), derived.end())).dump() << '\n';
    else
        for (const Atom& a : derived) out << a.to_string() << '\n';
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Epistemic logic program toolkit", "elp"};
    app.require_subcommand(1);
    Common c;
    struct Sub {
        const char* name;
        const char* help;
        int (*run)(const Common&, std::ostream&);
    };
    const Sub subs[] = {
        {"answersets", "answer sets of an epistemic-free program", cmd_answersets},
        {"scenarios", "epistemic scenarios", cmd_scenarios},
        {"worldviews", "world views", cmd_worldviews},
        {"check-guess", "check a guess", cmd_check_guess},
        {"bound", "guess-count bound report", cmd_bound},
        {"analyze", "cycles, handles and AS/RAS coincidence conditions", cmd_analyze},
        {"query", "answer a query", cmd_query},
        {"derive", "consequences of world-view level rules", cmd_derive},
        {"repl", "interactive query session", nullptr},
    };
    std::vector<std::pair<CLI::App*, const Sub*>> apps;
    for (const Sub& s : subs) {
        CLI::App* sc = app.add_subcommand(s.name, s.help);
        add_common(sc, c);
        if (std::string(s.name) == "check-guess") sc->add_option("--guess", c.guess, "comma-separated enot literals");
        if (std::string(s.name) == "derive")
            sc->add_option("--layer", c.layer, "rules over world-view level queries")->required();
        if (std::string(s.name) == "query") {
            sc->add_option("QUERY", c.query, "query text")->required();
            sc->add_option("--view", c.view, "world view for per-view operators (from 1)");
        }
        apps.emplace_back(sc, &s);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }
    try {
        for (const auto& [sc, s] : apps) {
            if (!sc->parsed()) continue;
            if (!s->run) {
                ReplOptions ro;
                ro.solve = c.solve();
                ro.mode = c.query_mode();
                return run_repl(c.file, std::cin, out, err, ro);
            }
            return s->run(c, out);
        }
    } catch (const Error& e) {
        err << "elp: error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

namespace {

class Session {
public:
    Session(std::ostream& out, std::ostream& err, const ReplOptions& opts) : out_(out), err_(err), opts_(opts) {}

    void load(const std::string& path) {
        gp_ = load_program_file(path);
        wvs_.reset();
        context_.clear();
        view_ = 0;
    }

    const std::vector<WorldView>& world_views() {
        if (!wvs_) wvs_ = compute_world_views(gp_, opts_.solve);
        return *wvs_;
    }

    // Returns false on :quit.
    bool command(const std::string& line) {
        std::istringstream ss(line);
        std::string cmd, arg;
        ss >> cmd;
        std::getline(ss >> std::ws, arg);
        if (cmd == ":quit" || cmd == ":q") return false;
        if (cmd == ":help") {
            out_ << "?- QUERY.  :mode contextual|independent  :worldviews  :view K  :load FILE  :reset  :quit\n";
        } else if (cmd == ":mode") {
            if (arg == "contextual") opts_.mode = QueryMode::CONTEXTUAL;
            else if (arg == "independent") opts_.mode = QueryMode::INDEPENDENT;
            else throw PreconditionError("mode must be contextual or independent");
            context_.clear();
            out_ << "mode " << arg << '\n';
        } else if (cmd == ":worldviews") {
            const auto& wvs = world_views();
            for (std::size_t i = 0; i < wvs.size(); ++i) out_ << format_world_view(wvs[i], i + 1) << '\n';
        } else if (cmd == ":view") {
            std::size_t k = std::stoul(arg);
            if (k == 0 || k > world_views().size()) throw PreconditionError("no world view " + arg);
            view_ = k - 1;
            context_.clear();
            out_ << "view " << k << '\n';
        } else if (cmd == ":load") {
            load(arg);
            out_ << "loaded " << arg << '\n';
        } else if (cmd == ":reset") {
            context_.clear();
        } else {
            std::string q = line;
            if (q.rfind("?-", 0) != 0) throw PreconditionError("expected ?- QUERY. or a :command");
            QueryResult r = eval_conjunction(world_views(), parse_query(q), view_, opts_.mode, &context_);
            out_ << (r.value ? "true" : "false") << '\n';
        }
        return true;
    }

    std::ostream& out_;
    std::ostream& err_;

private:
    ReplOptions opts_;
    GroundProgram gp_;
    std::optional<std::vector<WorldView>> wvs_;
    std::vector<Interpretation> context_;
    std::size_t view_ = 0;
};

} // namespace

int run_repl(const std::string& path, std::istream& in, std::ostream& out, std::ostream& err, const ReplOptions& opts) {
    Session s(out, err, opts);
    try {
        s.load(path);
    } catch (const Error& e) {
        err << "elp: error: " << e.what() << '\n';
        return 2;
    }
    std::string line;
    int status = 0;
    for (;;) {
        if (opts.prompt) out << "elp> " << std::flush;
        if (!std::getline(in, line)) break;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            if (!s.command(line.substr(line.find_first_not_of(" \t")))) break;
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            status = 2;
        }
    }
    return status;
}

} // namespace elp
