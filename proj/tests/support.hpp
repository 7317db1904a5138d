#ifndef RANK3_TESTS_SUPPORT_HPP
#define RANK3_TESTS_SUPPORT_HPP

#include <algorithm>
#include <filesystem>
#include <initializer_list>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rank3/game_file.hpp"
#include "rank3/generators.hpp"
#include "rank3/hypergraph.hpp"

namespace rank3::testing {

using Labels = std::vector<std::vector<std::string>>;

// Hypergraph over single-letter vertices, edges given as strings: raw("abcd", {"abc", "bd", ""}).
// Not normalized.
inline Hypergraph raw(std::string_view vertices, std::initializer_list<std::string_view> edges) {
  Hypergraph::LabelTable labels;
  for (char c : vertices) labels.emplace_back(1, c);
  std::vector<Edge> es;
  for (std::string_view e : edges) {
    std::vector<Vertex> vs;
    for (char c : e) vs.push_back(static_cast<Vertex>(vertices.find(c)));
    es.emplace_back(std::span<const Vertex>(vs));
  }
  const std::size_t n = labels.size();
  return Hypergraph::build(n, std::move(es), std::move(labels));
}

inline Game game(std::string_view text) { return parse_game(text); }

inline Labels edges_of(const Hypergraph& h) { return labelled_edges(h); }

inline Vertex id(const Hypergraph& h, std::string_view label) { return h.find_label(label).value(); }

inline std::vector<std::string> vertex_labels(const Hypergraph& h) {
  std::vector<std::string> out;
  for (Vertex v = 0; v < h.vertex_count(); ++v) out.push_back(h.label(v));
  return out;
}

inline std::filesystem::path fixture_dir() { return std::filesystem::path(RANK3_FIXTURES) / "mined"; }

inline std::vector<std::filesystem::path> mined_fixtures() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(fixture_dir())) {
    if (e.path().extension() == ".game") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Normalized random games of mixed edge sizes, small enough for the oracle.
inline std::vector<Game> random_games(std::size_t count, std::size_t n_lo, std::size_t n_hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Game> out;
  while (out.size() < count) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(n_lo, n_hi)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 2 * n)(rng);
    const bool uniform = rng() % 2 == 0;
    const std::size_t cap = n * (n - 1) * (n - 2) / 6 + (uniform ? 0 : n * (n - 1) / 2);
    const Player p = rng() % 2 == 0 ? Player::Maker : Player::Breaker;
    out.push_back(gen_random(n, std::min(m, cap), rng(), p, uniform ? kThreeUniform : kDefaultSizeWeights).game);
  }
  return out;
}

}  // namespace rank3::testing

#endif  // RANK3_TESTS_SUPPORT_HPP
