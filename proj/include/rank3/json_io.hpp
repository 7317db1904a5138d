#ifndef RANK3_JSON_IO_HPP
#define RANK3_JSON_IO_HPP

// JSON views of games and solver output. The service and the CLI both go
// through these functions, so their payloads agree byte for byte.

#include <string>
#include <vector>

#include "json.hpp"
#include "rank3/classifier.hpp"
#include "rank3/game_file.hpp"
#include "rank3/solver.hpp"

namespace rank3::json_io {

using nlohmann::json;

inline json depth_json(Depth d) { return d.finite() ? json(d.value()) : json("inf"); }

inline const char* player_code(Player p) { return p == Player::Maker ? "M" : "B"; }

inline Player parse_player(const json& j) {
  const std::string s = j.get<std::string>();
  if (s == "M" || s == "Maker") return Player::Maker;
  if (s == "B" || s == "Breaker") return Player::Breaker;
  throw MalformedInput("player must be \"M\" or \"B\"");
}

inline json labels_json(const Hypergraph& h, const Edge& e) {
  std::vector<std::string> ls;
  for (Vertex v : e) ls.push_back(h.label(v));
  std::sort(ls.begin(), ls.end());
  return ls;
}

inline json witness_json(const Hypergraph& h, const HotPathWitness& w) {
  auto end = [&](const TwoEdgeEnd& e, const std::vector<Vertex>& choice) {
    json out{{"pair", labels_json(h, e.edge())}, {"kind", e.kind == EndKind::Proper ? "proper" : "virtual"}};
    if (e.kind == EndKind::Virtual) {
      std::vector<std::string> gs;
      for (Vertex g : choice) gs.push_back(h.label(g));
      out["generators"] = gs;
    }
    return out;
  };
  json mids = json::array();
  for (const Edge& t : w.intermediates) mids.push_back(labels_json(h, t));
  return {{"start", end(w.start, w.start_choice)},
          {"intermediates", mids},
          {"end", end(w.end, w.end_choice)},
          {"opening_move", h.label(w.opening_move())}};
}

// Certificate of a Fam1 position: a singleton vertex or a hot path.
inline json fam1_json(const Hypergraph& h, const Fam1Certificate& c) {
  if (const auto* s = std::get_if<SingletonCertificate>(&c)) {
    return {{"singleton", h.label(s->vertex)}};
  }
  return {{"hot_path", witness_json(h, std::get<HotPathWitness>(c))}};
}

inline json graph_json(const Hypergraph& h) {
  json vertices = json::array();
  for (Vertex v = 0; v < h.vertex_count(); ++v) vertices.push_back(h.label(v));
  json edges = json::array();
  for (const auto& e : labelled_edges(h)) edges.push_back(e);
  json virt = json::array();
  for (const VirtualEdge& ve : virtual_edges(h)) {
    std::vector<std::string> gs;
    for (Vertex g : ve.generators) gs.push_back(h.label(g));
    std::sort(gs.begin(), gs.end());
    virt.push_back({{"pair", labels_json(h, Edge{ve.pair[0], ve.pair[1]})}, {"generators", gs}});
  }
  return {{"vertices", vertices}, {"edges", edges}, {"virtual_edges", virt}};
}

// Exact shortened depth after each legal move, keyed by vertex label.
inline json children_json(const Game& g, const SolveOptions& opts = {}) {
  json out = json::object();
  for (const auto& [v, d] : evaluate_children(g, opts)) out[g.graph.label(v)] = depth_json(d);
  return out;
}

inline json solve_json(const Game& g, const SolveResult& r) {
  json out{{"to_move", player_code(g.to_move)},
           {"winner", player_name(r.winner)},
           {"sdepth", depth_json(r.sdepth)},
           {"root_class", tag_name(r.root_class)},
           {"nodes_visited", r.nodes_visited}};
  out["best_move"] = r.best_move ? json(g.graph.label(*r.best_move)) : json(nullptr);
  if (r.principal_variation) {
    std::vector<std::string> line;
    for (Vertex o : *r.principal_variation) line.push_back(g.graph.origin_label(o));
    out["principal_variation"] = line;
  }
  return out;
}

}  // namespace rank3::json_io

#endif  // RANK3_JSON_IO_HPP
