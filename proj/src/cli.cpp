#include "tfix/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tfix/errors.hpp"
#include "tfix/fas.hpp"
#include "tfix/gen.hpp"
#include "tfix/instance.hpp"
#include "tfix/oracle.hpp"
#include "tfix/ptf_solver.hpp"
#include "tfix/stf_solver.hpp"

namespace tfix::cli {

using json = nlohmann::ordered_json;

namespace {

struct Caps {
    int k = 3;
    int uncertainty = 4;
    int oracle_n = 8;
    int fas = 8;
};

Caps parse_caps(const std::vector<std::string>& items) {
    Caps caps;
    for (const auto& group : items) {
        std::stringstream ss(group);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw ValidationError("cap \"" + item + "\" is not key=value");
            std::string key = item.substr(0, eq);
            int value = 0;
            try {
                std::size_t used = 0;
                value = std::stoi(item.substr(eq + 1), &used);
                if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw ValidationError("cap \"" + item + "\" needs an integer value");
            }
            if (value <= 0) throw ValidationError("caps must be positive");
            if (key == "k")
                caps.k = value;
            else if (key == "u")
                caps.uncertainty = value;
            else if (key == "n")
                caps.oracle_n = value;
            else if (key == "fas")
                caps.fas = value;
            else
                throw ValidationError("unknown cap \"" + key + "\" (known: k, u, n, fas)");
        }
    }
    return caps;
}

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw ValidationError("cannot open " + path);
    buf << file.rdbuf();
    return buf.str();
}

json names_of(const Seeding& seeding, const std::vector<std::string>& players) {
    json out = json::array();
    for (int p : seeding) out.push_back(players[p]);
    return out;
}

std::string join_names(const Seeding& seeding, const std::vector<std::string>& players) {
    std::string s;
    for (std::size_t i = 0; i < seeding.size(); ++i) s += (i ? " " : "") + players[seeding[i]];
    return s;
}

Seeding parse_seeding(const std::string& text, const std::vector<std::string>& players) {
    Seeding s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) s.push_back(find_player(players, item));
    if (!is_bijective(s, static_cast<int>(players.size())))
        throw ValidationError("seeding must list every player exactly once");
    return s;
}

json params_json(const AnyInstance& inst, const Caps& caps) {
    FasOptions fas;
    fas.search_max_size = caps.fas;
    if (const auto* stf = std::get_if<StfInstance>(&inst)) {
        InstanceParameters p = shared_structure(*stf);
        OrderedFas f = min_fas(p.shared_arcs, fas);
        return {{"players", stf->size()},
                {"scenarios", stf->scenario_count()},
                {"shared_fas", f.size()},
                {"private_arcs", p.private_arc_count},
                {"k", f.size() + p.private_arc_count}};
    }
    const auto& ptf = std::get<ProbabilityInstance>(inst);
    Digraph c = certainty_digraph(ptf);
    OrderedFas f = min_fas(c, fas);
    return {{"players", ptf.size()},
            {"degree_of_uncertainty", degree_of_uncertainty(ptf)},
            {"certainty_fas", f.size()},
            {"target", to_string(ptf.target())}};
}

void print_params(std::ostream& out, const json& params) {
    out << "params:";
    for (auto it = params.begin(); it != params.end(); ++it)
        out << ' ' << it.key() << '=' << (it->is_string() ? it->get<std::string>() : it->dump());
    out << '\n';
}

struct Settings {
    std::string input = "-";
    bool json_output = false;
    bool witness = false;
    bool oracle = false;
    bool deterministic = true;
    int threads = 1;
    std::vector<std::string> caps;
    std::string seeding;
    // gen
    std::string kind = "stf";
    int n = 4;
    int m = 1;
    int private_pairs = 0;
    int fractional = 0;
    int back_arcs = 0;
    std::uint64_t seed = 0;
};

class Runner {
   public:
    Runner(const Settings& s, std::istream& in, std::ostream& out, std::ostream& err)
        : s_(s), caps_(parse_caps(s.caps)), in_(in), out_(out), err_(err), start_(std::chrono::steady_clock::now()) {}

    int solve(InstanceKind kind) {
        AnyInstance inst = parse_instance(read_input(s_.input, in_), kind);
        json report = {{"params", params_json(inst, caps_)}};
        bool yes = false;
        std::optional<Seeding> witness;
        const std::vector<std::string>& players = std::visit([](const auto& i) -> const std::vector<std::string>& {
            return i.players();
        }, inst);

        if (kind == InstanceKind::ptf) {
            const auto& ptf = std::get<ProbabilityInstance>(inst);
            PtfVerdict v = solve_ptf(ptf, ptf_options());
            yes = v.yes;
            witness = v.witness;
            if (v.achieved) report["achieved"] = to_string(*v.achieved);
            report["events_tested"] = v.events_tested;
        } else {
            const auto& stf = std::get<StfInstance>(inst);
            StfVerdict v = solve_stf(stf, stf_options());
            yes = v.yes;
            witness = v.witness;
            report["blueprints_examined"] = v.blueprints_examined;
            report["search_steps"] = v.search_steps;
        }
        report["verdict"] = yes ? "yes" : "no";
        if (witness) report["witness"] = names_of(*witness, players);

        int code = yes ? ExitCode::yes : ExitCode::no;
        if (s_.oracle) {
            OracleReport o = run_oracle(inst);
            report["oracle"] = {{"verdict", o.yes ? "yes" : "no"}};
            if (o.best_probability) report["oracle"]["best_probability"] = to_string(*o.best_probability);
            if (o.yes != yes) code = ExitCode::oracle_mismatch;
        }
        emit(report, players);
        if (code == ExitCode::oracle_mismatch) err_ << "error: solver and oracle verdicts differ\n";
        return code;
    }

    int oracle() {
        AnyInstance inst = parse_instance(read_input(s_.input, in_));
        OracleReport o = run_oracle(inst);
        json report = {{"params", params_json(inst, caps_)}, {"verdict", o.yes ? "yes" : "no"}};
        if (o.best_probability) report["best_probability"] = to_string(*o.best_probability);
        const auto& players = players_of(inst);
        if (o.witness) report["witness"] = names_of(*o.witness, players);
        emit(report, players);
        return o.yes ? ExitCode::yes : ExitCode::no;
    }

    int verify() {
        AnyInstance inst = parse_instance(read_input(s_.input, in_));
        const auto& players = players_of(inst);
        if (s_.seeding.empty()) throw ValidationError("verify needs --seeding a,b,c,...");
        Seeding seeding = parse_seeding(s_.seeding, players);
        json report = {{"params", params_json(inst, caps_)}, {"witness", names_of(seeding, players)}};
        bool yes = false;
        if (const auto* stf = std::get_if<StfInstance>(&inst)) {
            std::vector<PlayerId> winners = verify_seeding(seeding, *stf);
            json w = json::array();
            for (PlayerId p : winners) w.push_back(players[p]);
            report["winners"] = w;
            yes = favorite_wins_all(seeding, *stf);
        } else {
            const auto& ptf = std::get<ProbabilityInstance>(inst);
            Rational achieved = win_probability(seeding, ptf)[ptf.favorite()];
            report["achieved"] = to_string(achieved);
            yes = achieved >= ptf.target();
        }
        report["verdict"] = yes ? "yes" : "no";
        emit(report, players, true);
        return yes ? ExitCode::yes : ExitCode::no;
    }

    int fas() {
        AnyInstance inst = parse_instance(read_input(s_.input, in_));
        const auto& players = players_of(inst);
        Digraph g = std::holds_alternative<StfInstance>(inst) ? shared_structure(std::get<StfInstance>(inst)).shared_arcs
                                                              : certainty_digraph(std::get<ProbabilityInstance>(inst));
        FasOptions options;
        options.search_max_size = caps_.fas;
        OrderedFas f = min_fas(g, options);
        json back = json::array();
        for (auto [x, y] : f.back_arcs) back.push_back({players[x], players[y]});
        json report = {{"size", f.size()}, {"ordering", names_of(f.ordering, players)}, {"back_arcs", back}};
        if (s_.json_output) {
            report["timings"] = timings();
            out_ << report.dump() << '\n';
        } else {
            out_ << "fas size: " << f.size() << "\nordering: " << join_names(f.ordering, players) << "\nback arcs:";
            for (auto [x, y] : f.back_arcs) out_ << ' ' << players[x] << "->" << players[y];
            out_ << '\n';
        }
        return ExitCode::yes;
    }

    int params() {
        AnyInstance inst = parse_instance(read_input(s_.input, in_));
        json p = params_json(inst, caps_);
        if (s_.json_output)
            out_ << json{{"params", p}, {"timings", timings()}}.dump() << '\n';
        else
            print_params(out_, p);
        return ExitCode::yes;
    }

    int gen() {
        GenSpec spec;
        spec.n = s_.n;
        spec.scenarios = s_.m;
        spec.private_pairs = s_.private_pairs;
        spec.fractional_pairs = s_.fractional;
        spec.back_arcs = s_.back_arcs;
        spec.seed = s_.seed;
        InstanceKind kind = parse_kind(s_.kind);
        if (kind == InstanceKind::ptf) {
            out_ << serialize(gen_random_ptf(spec));
        } else {
            if (kind == InstanceKind::tf) spec.scenarios = 1;
            out_ << serialize(gen_random_stf(spec));
        }
        return ExitCode::yes;
    }

   private:
    static const std::vector<std::string>& players_of(const AnyInstance& inst) {
        return std::visit([](const auto& i) -> const std::vector<std::string>& { return i.players(); }, inst);
    }

    StfOptions stf_options() const {
        StfOptions o;
        o.max_k = caps_.k;
        o.fas.search_max_size = caps_.fas;
        return o;
    }

    PtfOptions ptf_options() const {
        PtfOptions o;
        o.max_uncertainty = caps_.uncertainty;
        o.stf = stf_options();
        o.threads = s_.threads;
        o.deterministic = s_.deterministic;
        return o;
    }

    OracleReport run_oracle(const AnyInstance& inst) const {
        OracleOptions o;
        o.max_n = caps_.oracle_n;
        o.threads = s_.threads;
        o.deterministic = s_.deterministic;
        if (const auto* stf = std::get_if<StfInstance>(&inst)) return oracle_stf(*stf, o);
        return oracle_ptf(std::get<ProbabilityInstance>(inst), o);
    }

    json timings() const {
        auto elapsed = std::chrono::steady_clock::now() - start_;
        return {{"total_ms", std::chrono::duration<double, std::milli>(elapsed).count()}};
    }

    void emit(json report, const std::vector<std::string>& players, bool always_witness = false) {
        report["timings"] = timings();
        if (s_.json_output) {
            out_ << report.dump() << '\n';
            return;
        }
        out_ << "verdict: " << report["verdict"].get<std::string>() << '\n';
        if (report.contains("winners")) {
            out_ << "winners:";
            for (const auto& w : report["winners"]) out_ << ' ' << w.get<std::string>();
            out_ << '\n';
        }
        if (report.contains("witness") && (s_.witness || always_witness)) {
            out_ << "witness:";
            for (const auto& w : report["witness"]) out_ << ' ' << w.get<std::string>();
            out_ << '\n';
        }
        if (report.contains("achieved")) out_ << "achieved: " << report["achieved"].get<std::string>() << '\n';
        if (report.contains("best_probability"))
            out_ << "best probability: " << report["best_probability"].get<std::string>() << '\n';
        if (report.contains("oracle")) {
            out_ << "oracle: " << report["oracle"]["verdict"].get<std::string>();
            if (report["oracle"].contains("best_probability"))
                out_ << " (best " << report["oracle"]["best_probability"].get<std::string>() << ")";
            out_ << '\n';
        }
        print_params(out_, report["params"]);
        (void)players;
    }

    const Settings& s_;
    Caps caps_;
    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact single-elimination tournament fixing (TF, STF, PTF)"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings s;

    app.add_flag("--json", s.json_output, "Machine-readable output");
    app.add_flag("--witness", s.witness, "Print the witness seeding");
    app.add_flag("--oracle", s.oracle, "Cross-check against brute force");
    app.add_flag("--deterministic,!--no-deterministic", s.deterministic, "Deterministic witnesses (default on)");
    app.add_option("--threads", s.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--caps", s.caps, "Caps as k=..,u=..,n=..,fas=..");

    std::string which;
    auto add_solver = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("input", s.input, "Instance file or - for stdin");
        sub->callback([&which, name] { which = name; });
        return sub;
    };
    add_solver("solve-tf", "Decide tournament fixing");
    add_solver("solve-stf", "Decide simultaneous tournament fixing");
    add_solver("solve-ptf", "Decide probabilistic tournament fixing");
    add_solver("oracle", "Brute-force report");
    add_solver("fas", "Minimum feedback arc set of the shared or certainty digraph");
    add_solver("params", "Report structural parameters");
    add_solver("verify", "Check a seeding")->add_option("--seeding", s.seeding, "Comma-separated players, leaf order");
    auto* gen = app.add_subcommand("gen", "Emit a random instance");
    gen->add_option("--kind", s.kind, "tf, stf or ptf");
    gen->add_option("--n", s.n, "Players (power of 2)");
    gen->add_option("--m", s.m, "Scenarios (stf)");
    gen->add_option("--private", s.private_pairs, "Private pairs (stf)");
    gen->add_option("--fractional", s.fractional, "Fractional pairs (ptf)");
    gen->add_option("--back-arcs", s.back_arcs, "Flipped arcs of the hidden order");
    gen->add_option("--seed", s.seed, "Generator seed");
    gen->callback([&which] { which = "gen"; });

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : ExitCode::usage_error;
    }

    try {
        Runner runner(s, in, out, err);
        if (which == "solve-tf") return runner.solve(InstanceKind::tf);
        if (which == "solve-stf") return runner.solve(InstanceKind::stf);
        if (which == "solve-ptf") return runner.solve(InstanceKind::ptf);
        if (which == "oracle") return runner.oracle();
        if (which == "verify") return runner.verify();
        if (which == "fas") return runner.fas();
        if (which == "params") return runner.params();
        if (which == "gen") return runner.gen();
        err << "error: no subcommand\n";
        return ExitCode::usage_error;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::usage_error;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return ExitCode::cap_exceeded;
    }
}

}  // namespace tfix::cli
