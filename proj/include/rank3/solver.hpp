#ifndef RANK3_SOLVER_HPP
#define RANK3_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rank3/classifier.hpp"
#include "rank3/depth.hpp"
#include "rank3/hypergraph.hpp"

namespace rank3 {

struct SolveOptions {
  // Shortened game tree depth. Every winning game has shortened depth at most 4,
  // so 4 makes the root value exact.
  int depth_cap = 4;
  // Stop scanning a node's children once its value can no longer change.
  // Off by default so node counts reflect the full tree.
  bool prune = false;
  bool principal_variation = true;
};

struct SolveResult {
  Player winner = Player::Breaker;
  Depth sdepth = Depth::infinite();
  EndgameTag root_class = EndgameTag::NotEndgame;
  std::optional<Vertex> best_move;                        // id in the solved game
  std::optional<std::vector<Vertex>> principal_variation;  // original vertex ids
  std::uint64_t nodes_visited = 0;
  std::chrono::nanoseconds wall_time{0};
};

namespace detail {

// Moves that lose nothing are preferred by value, then by smaller original id.
inline bool better_choice(Player mover, Depth cand, Vertex cand_origin, Depth best, Vertex best_origin) {
  if (cand != best) return mover == Player::Maker ? cand < best : cand > best;
  return cand_origin < best_origin;
}

inline bool full_terminal(const Game& g) {
  return g.graph.has_empty_edge() || g.graph.edge_count() == 0 || g.graph.vertex_count() == 0;
}

class ShortenedSearch {
 public:
  explicit ShortenedSearch(const SolveOptions& opts) : opts_(opts) {}

  // Capped shortened depth of `g` sitting at tree depth `depth`.
  Depth value(const Game& g, int depth) {
    ++nodes_;
    const Hypergraph& h = g.graph;
    if (h.has_empty_edge()) return Depth(0);
    if (h.edge_count() == 0 || h.vertex_count() == 0) return Depth::infinite();
    if (g.to_move == Player::Maker) {
      if (is_fam1(h)) return Depth(0);
      if (depth >= opts_.depth_cap) return Depth::infinite();
      Depth best = Depth::infinite();
      for (Vertex x = 0; x < h.vertex_count(); ++x) {
        best = std::min(best, value(maker_move(g, x), depth + 1));
        if (opts_.prune && best == Depth(0)) break;
      }
      return best.next();
    }
    if (depth >= opts_.depth_cap) return fam2_leaf(g) ? Depth(0) : Depth::infinite();
    Depth worst(0);
    for (Vertex y = 0; y < h.vertex_count(); ++y) {
      worst = std::max(worst, value(breaker_move(g, y), depth + 1));
      if (opts_.prune && !worst.finite()) break;
    }
    // Every reply valued 0 means every reply is Fam1: this node is Fam2.
    return worst == Depth(0) ? worst : worst.next();
  }

  bool fam2_leaf(const Game& g) {
    for (Vertex y = 0; y < g.graph.vertex_count(); ++y) {
      ++nodes_;
      if (!is_fam1(breaker_move(g, y).graph)) return false;
    }
    return true;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  SolveOptions opts_;
  std::uint64_t nodes_ = 0;
};

inline EndgameTag quick_class(const Game& g) {
  const Hypergraph& h = g.graph;
  if (h.has_empty_edge()) return EndgameTag::Fam0;
  if (g.to_move == Player::Maker) return is_fam1(h) ? EndgameTag::Fam1 : EndgameTag::NotEndgame;
  if (h.edge_count() == 0 || h.vertex_count() == 0) return EndgameTag::NotEndgame;
  for (Vertex y = 0; y < h.vertex_count(); ++y) {
    if (!is_fam1(breaker_move(g, y).graph)) return EndgameTag::NotEndgame;
  }
  return EndgameTag::Fam2;
}

}  // namespace detail

inline SolveResult solve(const Game& g, const SolveOptions& opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  SolveResult r;
  r.root_class = detail::quick_class(g);
  detail::ShortenedSearch search(opts);
  const Hypergraph& h = g.graph;

  if (r.root_class != EndgameTag::NotEndgame) {
    r.sdepth = Depth(0);
  } else if (!detail::full_terminal(g) && opts.depth_cap > 0) {
    std::optional<Vertex> best;
    Depth best_value;
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
      const Depth d = search.value(play(g, v), 1);
      if (!best || detail::better_choice(g.to_move, d, h.origin(v), best_value, h.origin(*best))) {
        best = v;
        best_value = d;
      }
    }
    r.best_move = best;
    r.sdepth = best_value.next();
  }
  r.winner = r.sdepth.finite() ? Player::Maker : Player::Breaker;
  r.nodes_visited = search.nodes() + 1;

  if (opts.principal_variation && r.best_move && r.sdepth.finite()) {
    std::vector<Vertex> line{h.origin(*r.best_move)};
    Game cur = play(g, *r.best_move);
    SolveOptions sub = opts;
    sub.principal_variation = false;
    for (;;) {
      SolveResult next = solve(cur, sub);
      if (!next.best_move) break;
      line.push_back(cur.graph.origin(*next.best_move));
      cur = play(cur, *next.best_move);
    }
    r.principal_variation = std::move(line);
  }
  r.wall_time = std::chrono::steady_clock::now() - t0;
  return r;
}

struct BestMove {
  Vertex vertex = 0;
  Depth sdepth;  // value of the position the move is played from
  // False when the side to move is lost and the move only delays under the cap.
  bool strategic = true;
};

inline BestMove best_move(const Game& g, const SolveOptions& opts = {}) {
  SolveOptions o = opts;
  o.principal_variation = false;
  const SolveResult r = solve(g, o);
  if (!r.best_move) {
    throw NoMove(r.root_class == EndgameTag::NotEndgame ? "position is terminal"
                                                          : "position is already a shortened endgame");
  }
  const bool mover_wins = (r.winner == g.to_move);
  return {*r.best_move, r.sdepth, mover_wins};
}

// Exact shortened depth after each legal move, each child solved as its own root.
inline std::map<Vertex, Depth> evaluate_children(const Game& g, const SolveOptions& opts = {}) {
  std::map<Vertex, Depth> out;
  if (detail::full_terminal(g)) return out;
  SolveOptions o = opts;
  o.principal_variation = false;
  for (Vertex v = 0; v < g.graph.vertex_count(); ++v) out[v] = solve(play(g, v), o).sdepth;
  return out;
}

// A move to actually play from any non-terminal position, including shortened
// endgames: Fam1 follows its certificate, a lost side gets a best-effort move.
inline BestMove engine_move(const Game& g, const SolveOptions& opts = {}) {
  if (detail::full_terminal(g)) throw NoMove("game is over");
  const EndgameClass c = classify(g);
  if (c.tag == EndgameTag::Fam1) {
    if (const auto* s = std::get_if<SingletonCertificate>(&c.certificate)) return {s->vertex, Depth(0), true};
    return {std::get<HotPathWitness>(c.certificate).opening_move(), Depth(0), true};
  }
  if (c.tag == EndgameTag::Fam2) {
    // Every reply leaves a Fam1 game; take the smallest original id.
    Vertex pick = 0;
    for (Vertex v = 1; v < g.graph.vertex_count(); ++v) {
      if (g.graph.origin(v) < g.graph.origin(pick)) pick = v;
    }
    return {pick, Depth(0), false};
  }
  return best_move(g, opts);
}

}  // namespace rank3

#endif  // RANK3_SOLVER_HPP
