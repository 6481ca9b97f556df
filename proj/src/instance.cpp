#include "tfix/instance.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "tfix/errors.hpp"
#include "tfix/fas.hpp"

namespace tfix {

using nlohmann::json;

Digraph::Digraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 0) throw ValidationError("negative player count");
}

void Digraph::add_arc(PlayerId u, PlayerId v) {
    if (u == v) throw ValidationError("self-arc");
    if (has_arc(v, u)) throw ValidationError("both orientations of one pair");
    adj_[index(u, v)] = 1;
}

void Digraph::remove_arc(PlayerId u, PlayerId v) { adj_[index(u, v)] = 0; }

int Digraph::arc_count() const { return static_cast<int>(std::count(adj_.begin(), adj_.end(), 1)); }

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (has_arc(u, v)) out.emplace_back(u, v);
    return out;
}

bool Digraph::is_tournament() const {
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_arc(u, v) == has_arc(v, u)) return false;
    return true;
}

bool Digraph::has_cycle() const {
    // Kahn's algorithm: a cycle remains iff some vertex is never freed.
    std::vector<int> indeg(n_, 0);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (has_arc(u, v)) ++indeg[v];
    std::vector<int> ready;
    for (int v = 0; v < n_; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    int freed = 0;
    while (!ready.empty()) {
        int u = ready.back();
        ready.pop_back();
        ++freed;
        for (int v = 0; v < n_; ++v)
            if (has_arc(u, v) && --indeg[v] == 0) ready.push_back(v);
    }
    return freed != n_;
}

Tournament::Tournament(Digraph graph) : graph_(std::move(graph)) {
    if (!graph_.is_tournament()) throw ValidationError("digraph is not a tournament");
}

Tournament Tournament::transitive(const std::vector<PlayerId>& order) {
    Digraph g(static_cast<int>(order.size()));
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) g.add_arc(order[i], order[j]);
    return Tournament(std::move(g));
}

void Tournament::reverse(PlayerId u, PlayerId v) {
    if (beats(u, v)) {
        graph_.remove_arc(u, v);
        graph_.add_arc(v, u);
    } else {
        graph_.remove_arc(v, u);
        graph_.add_arc(u, v);
    }
}

std::vector<std::uint8_t> Tournament::key() const {
    std::vector<std::uint8_t> k;
    for (int u = 0; u < size(); ++u)
        for (int v = u + 1; v < size(); ++v) k.push_back(beats(u, v) ? 1 : 0);
    return k;
}

bool is_power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

namespace {

void check_players(const std::vector<std::string>& players, PlayerId favorite) {
    int n = static_cast<int>(players.size());
    if (!is_power_of_two(n)) throw ValidationError("n not a power of 2 (n = " + std::to_string(n) + ")");
    std::set<std::string> seen(players.begin(), players.end());
    if (static_cast<int>(seen.size()) != n) throw ValidationError("duplicate player identifiers");
    if (favorite < 0 || favorite >= n) throw ValidationError("favorite not in player list");
}

}  // namespace

ProbabilityInstance::ProbabilityInstance(std::vector<std::string> players, std::vector<Rational> matrix,
                                         Rational target, PlayerId favorite)
    : players_(std::move(players)), matrix_(std::move(matrix)), target_(std::move(target)), favorite_(favorite) {
    check_players(players_, favorite_);
    int n = size();
    if (matrix_.size() != static_cast<std::size_t>(n) * n) throw ValidationError("matrix is not n x n");
    if (target_ < 0 || target_ > 1) throw ValidationError("target outside [0,1]");
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (prob(u, v) < 0 || prob(u, v) > 1)
                throw ValidationError("matrix entry outside [0,1] at (" + players_[u] + "," + players_[v] + ")");
            if (u < v && prob(u, v) + prob(v, u) != 1)
                throw ValidationError("matrix asymmetry: P[" + players_[u] + "][" + players_[v] + "] + P[" +
                                      players_[v] + "][" + players_[u] + "] != 1");
        }
    }
}

ProbabilityInstance ProbabilityInstance::with_target(Rational target) const {
    return ProbabilityInstance(players_, matrix_, std::move(target), favorite_);
}

StfInstance::StfInstance(std::vector<std::string> players, std::vector<Tournament> tournaments, PlayerId favorite)
    : players_(std::move(players)), favorite_(favorite) {
    check_players(players_, favorite_);
    if (tournaments.empty()) throw ValidationError("no tournaments given");
    std::set<Tournament> seen;
    for (auto& t : tournaments) {
        if (t.size() != size()) throw ValidationError("tournament player count differs from player list");
        if (seen.insert(t).second) tournaments_.push_back(std::move(t));
    }
}

InstanceKind parse_kind(std::string_view text) {
    if (text == "tf") return InstanceKind::tf;
    if (text == "stf") return InstanceKind::stf;
    if (text == "ptf") return InstanceKind::ptf;
    throw ValidationError("unknown instance kind \"" + std::string(text) + "\"");
}

std::string_view to_string(InstanceKind kind) {
    switch (kind) {
        case InstanceKind::tf: return "tf";
        case InstanceKind::stf: return "stf";
        case InstanceKind::ptf: return "ptf";
    }
    return "?";
}

PlayerId find_player(const std::vector<std::string>& players, std::string_view name) {
    auto it = std::find(players.begin(), players.end(), name);
    if (it == players.end()) throw ValidationError("unknown player \"" + std::string(name) + "\"");
    return static_cast<PlayerId>(it - players.begin());
}

namespace {

const json& require(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ValidationError(std::string("missing field \"") + key + "\"");
    return *it;
}

std::string require_string(const json& j, const char* what) {
    if (!j.is_string()) throw ValidationError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

Tournament parse_tournament(const json& arcs, const std::vector<std::string>& players) {
    if (!arcs.is_array()) throw ValidationError("tournament must be a list of arcs");
    Digraph g(static_cast<int>(players.size()));
    for (const auto& arc : arcs) {
        if (!arc.is_array() || arc.size() != 2) throw ValidationError("arc must be a [\"winner\",\"loser\"] pair");
        PlayerId u = find_player(players, require_string(arc[0], "arc endpoint"));
        PlayerId v = find_player(players, require_string(arc[1], "arc endpoint"));
        if (g.has_arc(u, v)) throw ValidationError("duplicate arc " + players[u] + "->" + players[v]);
        g.add_arc(u, v);
    }
    if (!g.is_tournament()) throw ValidationError("arc list does not orient every pair exactly once");
    return Tournament(std::move(g));
}

}  // namespace

AnyInstance parse_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("instance must be a JSON object");
    InstanceKind kind = parse_kind(require_string(require(doc, "kind"), "kind"));

    const json& pj = require(doc, "players");
    if (!pj.is_array()) throw ValidationError("players must be a list");
    std::vector<std::string> players;
    for (const auto& p : pj) players.push_back(require_string(p, "player"));
    if (!is_power_of_two(static_cast<int>(players.size())))
        throw ValidationError("n not a power of 2 (n = " + std::to_string(players.size()) + ")");
    PlayerId favorite = find_player(players, require_string(require(doc, "favorite"), "favorite"));
    int n = static_cast<int>(players.size());

    if (kind == InstanceKind::ptf) {
        const json& mj = require(doc, "matrix");
        if (!mj.is_array() || static_cast<int>(mj.size()) != n) throw ValidationError("matrix must have n rows");
        std::vector<Rational> matrix(static_cast<std::size_t>(n) * n);
        for (int u = 0; u < n; ++u) {
            if (!mj[u].is_array() || static_cast<int>(mj[u].size()) != n)
                throw ValidationError("matrix row " + std::to_string(u) + " must have n entries");
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;  // diagonal ignored
                const json& e = mj[u][v];
                matrix[static_cast<std::size_t>(u) * n + v] =
                    e.is_number_integer() ? Rational(e.get<long>()) : parse_rational(require_string(e, "matrix entry"));
            }
        }
        Rational target = parse_rational(require_string(require(doc, "target"), "target"));
        return ProbabilityInstance(std::move(players), std::move(matrix), std::move(target), favorite);
    }

    const json& tj = require(doc, "tournaments");
    if (!tj.is_array() || tj.empty()) throw ValidationError("tournaments must be a nonempty list");
    if (kind == InstanceKind::tf && tj.size() != 1) throw ValidationError("tf instance needs exactly one tournament");
    std::vector<Tournament> tournaments;
    for (const auto& arcs : tj) tournaments.push_back(parse_tournament(arcs, players));
    return StfInstance(std::move(players), std::move(tournaments), favorite);
}

AnyInstance parse_instance(std::string_view text, InstanceKind expected) {
    AnyInstance inst = parse_instance(text);
    bool is_ptf = std::holds_alternative<ProbabilityInstance>(inst);
    if (is_ptf != (expected == InstanceKind::ptf))
        throw ValidationError("expected a " + std::string(to_string(expected)) + " instance");
    if (expected == InstanceKind::tf && std::get<StfInstance>(inst).scenario_count() != 1)
        throw ValidationError("tf instance needs exactly one tournament");
    return inst;
}

std::string serialize(const ProbabilityInstance& instance) {
    int n = instance.size();
    json matrix = json::array();
    for (int u = 0; u < n; ++u) {
        json row = json::array();
        for (int v = 0; v < n; ++v) row.push_back(u == v ? std::string("0") : to_string(instance.prob(u, v)));
        matrix.push_back(row);
    }
    json doc = {{"kind", "ptf"},
                {"players", instance.players()},
                {"favorite", instance.players()[instance.favorite()]},
                {"matrix", matrix},
                {"target", to_string(instance.target())}};
    return doc.dump(2) + "\n";
}

std::string serialize(const StfInstance& instance) {
    json tournaments = json::array();
    for (const auto& t : instance.tournaments()) {
        json arcs = json::array();
        for (auto [u, v] : t.graph().arcs()) arcs.push_back({instance.players()[u], instance.players()[v]});
        tournaments.push_back(arcs);
    }
    json doc = {{"kind", instance.scenario_count() == 1 ? "tf" : "stf"},
                {"players", instance.players()},
                {"favorite", instance.players()[instance.favorite()]},
                {"tournaments", tournaments}};
    return doc.dump(2) + "\n";
}

Digraph certainty_digraph(const ProbabilityInstance& instance) {
    Digraph g(instance.size());
    for (int u = 0; u < instance.size(); ++u)
        for (int v = 0; v < instance.size(); ++v)
            if (u != v && instance.prob(u, v) == 1) g.add_arc(u, v);
    return g;
}

int degree_of_uncertainty(const ProbabilityInstance& instance) {
    int count = 0;
    for (int u = 0; u < instance.size(); ++u)
        for (int v = u + 1; v < instance.size(); ++v)
            if (!is_integral(instance.prob(u, v))) ++count;
    return count;
}

InstanceParameters shared_structure(const StfInstance& instance) {
    int n = instance.size();
    InstanceParameters params;
    params.shared_arcs = Digraph(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            bool everywhere = std::all_of(instance.tournaments().begin(), instance.tournaments().end(),
                                          [&](const Tournament& t) { return t.beats(u, v); });
            if (everywhere) params.shared_arcs.add_arc(u, v);
        }
    params.private_arc_count = n * (n - 1) / 2 - params.shared_arcs.arc_count();
    params.shared_fas_size = min_fas(params.shared_arcs).size();
    return params;
}

InstanceParameters certainty_structure(const ProbabilityInstance& instance) {
    InstanceParameters params;
    params.shared_arcs = certainty_digraph(instance);
    params.degree_of_uncertainty = degree_of_uncertainty(instance);
    params.certainty_fas_size = min_fas(params.shared_arcs).size();
    return params;
}

}  // namespace tfix
