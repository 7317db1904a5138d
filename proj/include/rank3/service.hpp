#ifndef RANK3_SERVICE_HPP
#define RANK3_SERVICE_HPP

// Session-based JSON game service. Transport-free: handle() maps a method, a
// path and a body to a status and a JSON document, so it can be driven by an
// HTTP server or directly from tests.
//
//   POST /games                 {"edges": [["a","b"],...], "player": "M"}
//                               {"preset": "v-shape"}
//                               {"generator": {"kind": "random", "n": 9, "m": 20, "seed": 7}, "player": "B"}
//   GET  /games/{id}
//   POST /games/{id}/move       {"vertex": "b"}  (optional "player" is checked)
//   POST /games/{id}/engine-move
//   GET  /games/{id}/analysis
//   GET  /presets

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rank3/classifier.hpp"
#include "rank3/game_file.hpp"
#include "rank3/generators.hpp"
#include "rank3/json_io.hpp"
#include "rank3/solver.hpp"

namespace rank3 {

struct ServiceOptions {
  // Positions with more vertices than this are classified but not solved.
  std::size_t solve_vertex_limit = 40;
  std::size_t max_vertices = 200;
};

struct ServiceResponse {
  int status = 200;
  nlohmann::json body;
};

class GameService {
 public:
  using json = nlohmann::json;

  explicit GameService(ServiceOptions opts = {}) : opts_(opts) {}

  ServiceResponse handle(std::string_view method, std::string_view path, std::string_view body) {
    try {
      const auto parts = split(path);
      if (parts.size() == 1 && parts[0] == "presets" && method == "GET") return {200, presets()};
      if (parts.size() == 1 && parts[0] == "games" && method == "POST") return create(parse(body));
      if (parts.size() >= 2 && parts[0] == "games") {
        auto session = find(parts[1]);
        if (!session) return error(404, "not_found", "no game with id '" + parts[1] + "'");
        if (parts.size() == 2 && method == "GET") return {200, state(*session)};
        if (parts.size() == 3 && parts[2] == "move" && method == "POST") return move(*session, parse(body));
        if (parts.size() == 3 && parts[2] == "engine-move" && method == "POST") return engine(*session);
        if (parts.size() == 3 && parts[2] == "analysis" && method == "GET") return analysis(*session);
      }
      return error(404, "not_found", "no route for " + std::string(method) + " " + std::string(path));
    } catch (const json::exception& e) {
      return error(400, "bad_request", e.what());
    } catch (const MalformedInput& e) {
      return error(400, "bad_request", e.what());
    }
  }

  static json presets() {
    json out = json::array();
    for (const auto& p : preset_table()) out.push_back({{"name", p.name}, {"player", p.player}, {"edges", p.edges}});
    return out;
  }

 private:
  struct Session {
    std::string id;
    Game initial;
    Game current;
    std::vector<std::pair<Player, std::string>> history;
    std::mutex mu;
  };

  struct Preset {
    const char* name;
    const char* player;
    std::vector<std::vector<std::string>> edges;
  };

  static const std::vector<Preset>& preset_table() {
    static const std::vector<Preset> table{
        {"v-shape", "M", {{"a", "b"}, {"b", "c"}}},
        {"hot-path", "M", {{"a", "b"}, {"b", "c", "d"}, {"d", "e"}}},
        {"virtual-end", "M", {{"a", "b"}, {"b", "c", "d"}, {"c", "d", "e"}, {"c", "d", "f"}}},
        {"two-v-shapes", "B", {{"a", "b"}, {"b", "c"}, {"d", "e"}, {"e", "f"}}},
        {"extremal-6", "M", {}},
    };
    return table;
  }

  static std::vector<std::string> split(std::string_view path) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < path.size()) {
      while (i < path.size() && path[i] == '/') ++i;
      std::size_t j = i;
      while (j < path.size() && path[j] != '/') ++j;
      if (j > i) out.emplace_back(path.substr(i, j - i));
      i = j;
    }
    return out;
  }

  static json parse(std::string_view body) {
    if (body.empty()) return json::object();
    return json::parse(body);
  }

  static ServiceResponse error(int status, const std::string& kind, const std::string& msg) {
    return {status, {{"error", kind}, {"reason", msg}}};
  }

  std::shared_ptr<Session> find(const std::string& id) {
    std::lock_guard lock(mu_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
  }

  static Game from_preset(const std::string& name) {
    for (const auto& p : preset_table()) {
      if (name != p.name) continue;
      if (name == "extremal-6") return gen_extremal(6);
      return game_from_labels(p.edges, p.player[0] == 'M' ? Player::Maker : Player::Breaker);
    }
    throw MalformedInput("unknown preset '" + name + "'");
  }

  Game build(const json& req) const {
    std::optional<Player> player;
    if (req.contains("player")) player = json_io::parse_player(req.at("player"));
    Game g;
    if (req.contains("preset")) {
      g = from_preset(req.at("preset").get<std::string>());
    } else if (req.contains("generator")) {
      const json& gen = req.at("generator");
      const std::string kind = gen.at("kind").get<std::string>();
      const auto n = gen.at("n").get<std::size_t>();
      if (n > opts_.max_vertices) throw MalformedInput("n exceeds the service limit");
      if (kind == "extremal") {
        g = gen_extremal(n);
      } else if (kind == "random") {
        g = gen_random(n, gen.at("m").get<std::size_t>(), gen.value("seed", std::uint64_t{1})).game;
      } else {
        throw MalformedInput("unknown generator '" + kind + "'");
      }
    } else if (req.contains("edges")) {
      g = game_from_labels(req.at("edges").get<std::vector<std::vector<std::string>>>(), Player::Maker);
    } else {
      throw MalformedInput("expected one of \"edges\", \"preset\" or \"generator\"");
    }
    if (player) g.to_move = *player;
    if (g.graph.vertex_count() > opts_.max_vertices) throw MalformedInput("game exceeds the service vertex limit");
    return g;
  }

  ServiceResponse create(const json& req) {
    auto s = std::make_shared<Session>();
    s->initial = build(req);
    s->current = s->initial;
    {
      std::lock_guard lock(mu_);
      s->id = "g" + std::to_string(++next_id_);
      sessions_[s->id] = s;
    }
    std::lock_guard lock(s->mu);
    return {201, state_locked(*s)};
  }

  static std::optional<Player> finished_winner(const Game& g) {
    if (g.graph.has_empty_edge()) return Player::Maker;
    if (detail::full_terminal(g)) return Player::Breaker;
    return std::nullopt;
  }

  bool solvable(const Game& g) const { return g.graph.vertex_count() <= opts_.solve_vertex_limit; }

  json state(Session& s) {
    std::lock_guard lock(s.mu);
    return state_locked(s);
  }

  json state_locked(const Session& s) const {
    const Game& g = s.current;
    json out = json_io::graph_json(g.graph);
    out["id"] = s.id;
    out["to_move"] = json_io::player_code(g.to_move);
    json history = json::array();
    json taken = json::array(), deleted = json::array();
    for (const auto& [p, label] : s.history) {
      history.push_back({{"player", json_io::player_code(p)}, {"vertex", label}});
      (p == Player::Maker ? taken : deleted).push_back(label);
    }
    out["history"] = history;
    out["taken"] = taken;
    out["deleted"] = deleted;
    json all = json::array();
    for (Vertex v = 0; v < s.initial.graph.vertex_count(); ++v) all.push_back(s.initial.graph.label(v));
    out["all_vertices"] = all;

    const EndgameClass c = classify(g);
    out["classification"] = tag_name(c.tag);
    if (const auto w = finished_winner(g)) {
      out["finished"] = true;
      out["winner"] = player_name(*w);
      return out;
    }
    out["finished"] = false;
    if (!solvable(g)) {
      out["solved"] = false;
      return out;
    }
    SolveOptions o;
    o.principal_variation = false;
    const SolveResult r = solve(g, o);
    out["solved"] = true;
    out["winner"] = player_name(r.winner);
    if (r.sdepth.finite()) out["sdepth"] = r.sdepth.value();
    out["best_move"] = r.best_move ? json(g.graph.label(*r.best_move)) : json(nullptr);
    return out;
  }

  ServiceResponse apply_move(Session& s, Vertex v) {
    const Player mover = s.current.to_move;
    const std::string label = s.current.graph.label(v);
    s.current = play(s.current, v);
    s.history.emplace_back(mover, label);
    return {200, state_locked(s)};
  }

  ServiceResponse move(Session& s, const json& req) {
    std::lock_guard lock(s.mu);
    if (finished_winner(s.current)) return error(409, "game_over", "the game is already decided");
    if (!req.contains("vertex")) return error(400, "bad_request", "missing \"vertex\"");
    if (req.contains("player") && json_io::parse_player(req.at("player")) != s.current.to_move) {
      return error(422, "wrong_player", std::string(player_name(s.current.to_move)) + " is to move");
    }
    const std::string label = req.at("vertex").get<std::string>();
    const auto v = s.current.graph.find_label(label);
    if (!v) return error(422, "illegal_move", "vertex '" + label + "' is not available");
    return apply_move(s, *v);
  }

  ServiceResponse engine(Session& s) {
    std::lock_guard lock(s.mu);
    if (finished_winner(s.current)) return error(409, "game_over", "the game is already decided");
    if (!solvable(s.current)) return error(422, "too_large", "position exceeds the synchronous solve limit");
    const BestMove m = engine_move(s.current);
    const std::string label = s.current.graph.label(m.vertex);
    ServiceResponse r = apply_move(s, m.vertex);
    r.body["engine_move"] = {{"vertex", label}, {"nonstrategic", !m.strategic}};
    return r;
  }

  ServiceResponse analysis(Session& s) {
    std::lock_guard lock(s.mu);
    json out = state_locked(s);
    const Game& g = s.current;
    if (!solvable(g)) return {200, out};
    out["children"] = json_io::children_json(g);
    if (auto cert = fam1_certificate(g.graph); cert && g.to_move == Player::Maker) {
      out["certificate"] = json_io::fam1_json(g.graph, *cert);
    } else if (auto w = find_hot_path(g.graph)) {
      out["certificate"] = {{"hot_path", json_io::witness_json(g.graph, *w)}};
    }
    return {200, out};
  }

  ServiceOptions opts_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::size_t next_id_ = 0;
};

}  // namespace rank3

#endif  // RANK3_SERVICE_HPP
