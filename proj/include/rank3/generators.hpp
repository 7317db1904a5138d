#ifndef RANK3_GENERATORS_HPP
#define RANK3_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rank3/hypergraph.hpp"

namespace rank3 {

// V = {u1..un}, E = {{u(2k-1), u(2k), u} : u outside the k-th pair, k <= n/2}.
// (n-2)*floor(n/2) edges and a Breaker win for every n tried.
inline Game gen_extremal(std::size_t n, Player to_move = Player::Maker) {
  if (n < 3) throw MalformedInput("extremal construction needs n >= 3");
  Hypergraph::LabelTable labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("u" + std::to_string(i));
  std::vector<Edge> edges;
  for (std::size_t k = 1; k <= n / 2; ++k) {
    const auto a = static_cast<Vertex>(2 * k - 2), b = static_cast<Vertex>(2 * k - 1);
    for (Vertex u = 0; u < n; ++u) {
      if (u != a && u != b) edges.push_back(Edge{a, b, u});
    }
  }
  return make_game(n, std::move(edges), to_move, std::move(labels));
}

// Relative frequency of edge sizes 0..3 in gen_random; size 0 is ignored.
using SizeWeights = std::array<double, 4>;

inline constexpr SizeWeights kDefaultSizeWeights{0.0, 0.0, 1.0, 4.0};
inline constexpr SizeWeights kThreeUniform{0.0, 0.0, 0.0, 1.0};

struct RandomGame {
  Game game;
  std::size_t requested_edges = 0;
  std::size_t realized_edges = 0;  // after normalization
};

// m distinct edges drawn without replacement (size first, then a uniform edge of
// that size), then normalized. Deterministic in the seed.
inline RandomGame gen_random(std::size_t n, std::size_t m, std::uint64_t seed, Player to_move = Player::Maker,
                             const SizeWeights& weights = kDefaultSizeWeights) {
  std::array<std::vector<Edge>, 4> pool;
  for (Vertex a = 0; a < n; ++a) {
    if (weights[1] > 0) pool[1].push_back(Edge{a});
    for (Vertex b = a + 1; b < n; ++b) {
      if (weights[2] > 0) pool[2].push_back(Edge{a, b});
      for (Vertex c = b + 1; c < n && weights[3] > 0; ++c) pool[3].push_back(Edge{a, b, c});
    }
  }
  const std::size_t available = pool[1].size() + pool[2].size() + pool[3].size();
  if (m > available) {
    throw MalformedInput("cannot draw " + std::to_string(m) + " distinct edges; only " +
                         std::to_string(available) + " available");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    std::array<double, 3> w{};
    for (std::size_t s = 1; s <= 3; ++s) w[s - 1] = pool[s].empty() ? 0.0 : weights[s];
    std::discrete_distribution<std::size_t> pick_size(w.begin(), w.end());
    auto& bucket = pool[pick_size(rng) + 1];
    std::uniform_int_distribution<std::size_t> pick(0, bucket.size() - 1);
    const std::size_t i = pick(rng);
    edges.push_back(bucket[i]);
    bucket[i] = bucket.back();
    bucket.pop_back();
  }
  RandomGame out;
  out.requested_edges = m;
  out.game = make_game(n, std::move(edges), to_move);
  out.realized_edges = out.game.graph.edge_count();
  return out;
}

}  // namespace rank3

#endif  // RANK3_GENERATORS_HPP
