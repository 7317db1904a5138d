#ifndef RANK3_MINER_HPP
#define RANK3_MINER_HPP

// Searches small games for the smallest instance of every uncapped shortened
// depth, per player to move. Exhaustive up to isomorphism for n <= 5, seeded
// sampling above.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rank3/game_file.hpp"
#include "rank3/generators.hpp"
#include "rank3/oracle.hpp"

namespace rank3::oracle {

struct MineOptions {
  std::size_t max_vertices = 7;
  std::size_t exhaustive_up_to = 5;
  std::size_t samples_per_size = 3000;
  std::uint64_t seed = 1;
};

struct MinedGame {
  Game game;
  Depth sdep;
  Depth dep;
};

struct MineReport {
  static constexpr int kValues = 5;

  // smallest[player][value]
  std::array<std::array<std::optional<MinedGame>, kValues>, 2> smallest;
  std::size_t games_examined = 0;
  std::vector<MinedGame> over_bound;  // winning games with sdep >= 5; expected empty
  // Largest edge count seen among Breaker wins, by player to move and vertex count.
  std::array<std::map<std::size_t, std::size_t>, 2> max_breaker_edges;
  std::map<std::size_t, bool> size_exhaustive;

  bool attained(Player p, int value) const { return smallest[static_cast<int>(p)][value].has_value(); }
};

namespace detail {

// Fewer vertices, then fewer edges, then the written form.
inline bool smaller(const Game& a, const Game& b) {
  if (a.graph.vertex_count() != b.graph.vertex_count()) return a.graph.vertex_count() < b.graph.vertex_count();
  if (a.graph.edge_count() != b.graph.edge_count()) return a.graph.edge_count() < b.graph.edge_count();
  return write_game(a) < write_game(b);
}

inline void record(const Game& g, MineReport& rep) {
  ++rep.games_examined;
  const Depth sdep = shortened_minimax_uncapped(g).dep;
  const std::size_t n = g.graph.vertex_count();
  if (!sdep.finite()) {
    auto& best = rep.max_breaker_edges[static_cast<int>(g.to_move)][n];
    best = std::max(best, g.graph.edge_count());
    return;
  }
  if (sdep.value() >= MineReport::kValues) {
    rep.over_bound.push_back({g, sdep, full_minimax(g).dep});
    return;
  }
  auto& slot = rep.smallest[static_cast<int>(g.to_move)][sdep.value()];
  if (!slot || smaller(g, slot->game)) slot = MinedGame{g, sdep, full_minimax(g).dep};
}

}  // namespace detail

inline MineReport mine_witnesses(const MineOptions& opts = {}) {
  if (opts.max_vertices > 8) throw ResourceLimit("the miner supports at most 8 vertices");
  MineReport rep;
  for (std::size_t n = 1; n <= std::min(opts.max_vertices, opts.exhaustive_up_to); ++n) {
    rep.size_exhaustive[n] = true;
    std::set<std::vector<Mask>> seen;
    for_each_antichain(n, [&](const std::vector<Edge>& edges) {
      Mask used = 0;
      for (const Edge& e : edges) {
        for (Vertex v : e) used |= bit(v);
      }
      if (used != (Mask{1} << n) - 1) return;  // counted at a smaller n
      if (!seen.insert(canonical_form(n, edges)).second) return;
      for (Player p : {Player::Maker, Player::Breaker}) detail::record(make_game(n, edges, p), rep);
    });
  }
  std::mt19937_64 rng(opts.seed);
  for (std::size_t n = opts.exhaustive_up_to + 1; n <= opts.max_vertices; ++n) {
    rep.size_exhaustive[n] = false;
    const std::size_t triples = n * (n - 1) * (n - 2) / 6;
    for (std::size_t i = 0; i < opts.samples_per_size; ++i) {
      const bool uniform = i % 2 == 1;
      const std::size_t cap = uniform ? triples : triples + n * (n - 1) / 2;
      const std::size_t m = std::min(cap, std::uniform_int_distribution<std::size_t>(n / 2 + 1, 2 * n)(rng));
      const Player p = i % 4 < 2 ? Player::Maker : Player::Breaker;
      const Game g = gen_random(n, m, rng(), p, uniform ? kThreeUniform : kDefaultSizeWeights).game;
      if (g.graph.vertex_count() == n) detail::record(g, rep);
    }
  }
  return rep;
}

// Game-file text for a mined instance, with its values in a comment header.
inline std::string fixture_text(const MinedGame& m) {
  return "# sdep " + m.sdep.str() + ", dep " + m.dep.str() + "\n" + write_game(m.game);
}

}  // namespace rank3::oracle

#endif  // RANK3_MINER_HPP
