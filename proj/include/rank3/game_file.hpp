#ifndef RANK3_GAME_FILE_HPP
#define RANK3_GAME_FILE_HPP

// Line-oriented game files:
//
//   # comment
//   player M
//   edge a b c
//   edge            <- the empty edge
//
// Labels match [A-Za-z0-9_]+. The writer emits the player line first, then the
// edges sorted by their sorted label lists, so output is diff-stable.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rank3/hypergraph.hpp"

namespace rank3 {

namespace detail {

inline bool valid_label(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

inline std::string describe(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i];
  return out + "}";
}

}  // namespace detail

// Edges as sorted label lists; the identity of a game independent of vertex ids.
inline std::vector<std::vector<std::string>> labelled_edges(const Hypergraph& h) {
  std::vector<std::vector<std::string>> out;
  for (const Edge& e : h.edges()) {
    std::vector<std::string> ls;
    for (Vertex v : e) ls.push_back(h.label(v));
    std::sort(ls.begin(), ls.end());
    out.push_back(std::move(ls));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Builds a normalized game from labelled edges. Vertex ids follow sorted label
// order. Duplicates and redundant supersets are reported through `warnings`.
inline Game game_from_labels(const std::vector<std::vector<std::string>>& raw, Player to_move,
                             std::vector<std::string>* warnings = nullptr) {
  std::set<std::string> names;
  for (const auto& e : raw) {
    if (e.size() > Edge::kMaxSize) {
      throw RankError("edge " + detail::describe(e) + " has cardinality " + std::to_string(e.size()));
    }
    for (const auto& l : e) {
      if (!detail::valid_label(l)) throw MalformedInput("invalid vertex label '" + l + "'");
      names.insert(l);
    }
  }
  Hypergraph::LabelTable labels(names.begin(), names.end());
  std::map<std::string, Vertex> id;
  for (std::size_t i = 0; i < labels.size(); ++i) id[labels[i]] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (const auto& e : raw) {
    std::vector<Vertex> vs;
    for (const auto& l : e) vs.push_back(id[l]);
    edges.emplace_back(std::span<const Vertex>(vs));
  }
  Hypergraph built = Hypergraph::build(labels.size(), edges, labels);
  if (warnings) {
    if (built.edge_count() < edges.size()) {
      warnings->push_back(std::to_string(edges.size() - built.edge_count()) + " duplicate edge(s) merged");
    }
  }
  Hypergraph norm = normalize(built);
  if (warnings && norm.edge_count() < built.edge_count()) {
    for (const Edge& e : built.edges()) {
      if (norm.has_edge(e)) continue;
      std::string line = "edge";
      for (Vertex v : e) line += " " + built.label(v);
      warnings->push_back("'" + line + "' removed: it contains another edge");
    }
  }
  return Game{prune_isolated(norm), to_move};
}

inline Game parse_game(std::string_view text, std::vector<std::string>* warnings = nullptr) {
  std::optional<Player> player;
  std::vector<std::vector<std::string>> raw;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "player") {
      if (tok.size() != 2 || (tok[1] != "M" && tok[1] != "B")) throw ParseError(lineno, "expected 'player M' or 'player B'");
      if (player) throw ParseError(lineno, "duplicate player line");
      player = tok[1] == "M" ? Player::Maker : Player::Breaker;
    } else if (tok[0] == "edge") {
      std::vector<std::string> e(tok.begin() + 1, tok.end());
      if (e.size() > Edge::kMaxSize) {
        throw RankError("line " + std::to_string(lineno) + ": edge of cardinality " + std::to_string(e.size()) +
                        " exceeds rank 3");
      }
      for (const auto& l : e) {
        if (!detail::valid_label(l)) throw ParseError(lineno, "invalid vertex label '" + l + "'");
      }
      std::vector<std::string> sorted = e;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ParseError(lineno, "edge repeats a vertex");
      }
      raw.push_back(std::move(e));
    } else {
      throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  if (!player) throw ParseError(lineno, "missing player line");
  return game_from_labels(raw, *player, warnings);
}

inline std::string write_game(const Game& g) {
  std::string out = g.to_move == Player::Maker ? "player M\n" : "player B\n";
  for (const auto& e : labelled_edges(g.graph)) {
    out += "edge";
    for (const auto& l : e) out += " " + l;
    out += "\n";
  }
  return out;
}

inline Game load_game(const std::string& path, std::vector<std::string>* warnings = nullptr) {
  std::ifstream f(path);
  if (!f) throw MalformedInput("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_game(ss.str(), warnings);
}

}  // namespace rank3

#endif  // RANK3_GAME_FILE_HPP
