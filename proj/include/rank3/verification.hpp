#ifndef RANK3_VERIFICATION_HPP
#define RANK3_VERIFICATION_HPP

// Cross-checks of the polynomial solver against the brute-force oracle over
// exhaustive and sampled game universes.

#include <array>
#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rank3/game_file.hpp"
#include "rank3/generators.hpp"
#include "rank3/hotpath.hpp"
#include "rank3/oracle.hpp"
#include "rank3/solver.hpp"

namespace rank3::verify {

struct SweepStats {
  std::size_t games = 0;
  std::size_t winner_disagreements = 0;  // solver or shortened vs full rules
  std::size_t bound_violations = 0;      // uncapped shortened depth above 3 (Maker) / 4 (Breaker)
  std::size_t parity_violations = 0;
  std::size_t exactness_violations = 0;  // solver root value vs uncapped shortened value
  std::size_t depth_order_violations = 0;  // sdep > dep
  std::array<int, 2> max_sdep{-1, -1};     // indexed by Player, winning games only
  std::array<std::array<std::size_t, 5>, 2> sdep_histogram{};
  std::vector<std::string> failures;  // first few offending games, in game-file form
  double seconds = 0;

  bool clean() const {
    return winner_disagreements == 0 && bound_violations == 0 && parity_violations == 0 &&
           exactness_violations == 0 && depth_order_violations == 0;
  }

  void merge(const SweepStats& o) {
    games += o.games;
    winner_disagreements += o.winner_disagreements;
    bound_violations += o.bound_violations;
    parity_violations += o.parity_violations;
    exactness_violations += o.exactness_violations;
    depth_order_violations += o.depth_order_violations;
    for (int p = 0; p < 2; ++p) {
      max_sdep[p] = std::max(max_sdep[p], o.max_sdep[p]);
      for (int d = 0; d < 5; ++d) sdep_histogram[p][d] += o.sdep_histogram[p][d];
    }
    for (const auto& f : o.failures) {
      if (failures.size() < 8) failures.push_back(f);
    }
    seconds += o.seconds;
  }
};

// Shortened depth parity: Breaker-first even, Maker-first 0 or odd.
inline bool parity_ok(Player to_move, Depth d) {
  if (!d.finite()) return true;
  if (to_move == Player::Breaker) return d.value() % 2 == 0;
  return d.value() == 0 || d.value() % 2 == 1;
}

inline int max_allowed_sdep(Player to_move) { return to_move == Player::Maker ? 3 : 4; }

// Runs solver, full-rules oracle and (optionally) the uncapped shortened oracle on one game.
inline void check_game(const Game& g, SweepStats& st, bool with_shortened = true) {
  ++st.games;
  const auto full = oracle::full_minimax(g);
  SolveOptions so;
  so.principal_variation = false;
  const auto solved = solve(g, so);
  bool bad = false;
  if (solved.winner != full.winner) {
    ++st.winner_disagreements;
    bad = true;
  }
  if (!parity_ok(g.to_move, solved.sdepth)) {
    ++st.parity_violations;
    bad = true;
  }
  if (with_shortened) {
    const auto sh = oracle::shortened_minimax_uncapped(g);
    if (sh.winner != full.winner) {
      ++st.winner_disagreements;
      bad = true;
    }
    if (!parity_ok(g.to_move, sh.dep)) {
      ++st.parity_violations;
      bad = true;
    }
    if (sh.dep.finite()) {
      const int p = static_cast<int>(g.to_move);
      st.max_sdep[p] = std::max(st.max_sdep[p], sh.dep.value());
      if (sh.dep.value() <= 4) ++st.sdep_histogram[p][sh.dep.value()];
      if (sh.dep.value() > max_allowed_sdep(g.to_move)) {
        ++st.bound_violations;
        bad = true;
      }
      if (full.dep < sh.dep) {
        ++st.depth_order_violations;
        bad = true;
      }
    }
    const Depth expected = (sh.dep.finite() && sh.dep.value() <= 4) ? sh.dep : Depth::infinite();
    if (solved.sdepth != expected) {
      ++st.exactness_violations;
      bad = true;
    }
  }
  if (bad && st.failures.size() < 8) st.failures.push_back(write_game(g));
}

// Every antichain of nonempty edges (size <= 3) on n labelled vertices, for all
// n <= max_n, with both players to move. Isolated vertices are kept.
inline SweepStats exhaustive_agreement(std::size_t max_n = 4) {
  const auto t0 = std::chrono::steady_clock::now();
  SweepStats st;
  for (std::size_t n = 0; n <= max_n; ++n) {
    oracle::for_each_antichain(n, [&](const std::vector<Edge>& edges) {
      for (Player p : {Player::Maker, Player::Breaker}) {
        check_game(make_game(n, edges, p, {}, IsolatedVertices::Keep), st);
      }
    });
  }
  st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return st;
}

// A random normalized game with n_lo..n_hi vertices after isolated-vertex pruning.
// Alternates the default 2/3-edge mix with 3-uniform draws.
inline Game sample_game(std::mt19937_64& rng, std::size_t n_lo, std::size_t n_hi) {
  for (;;) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(n_lo, n_hi)(rng);
    const bool uniform = std::bernoulli_distribution(0.5)(rng);
    const std::size_t available = uniform ? n * (n - 1) * (n - 2) / 6 : n * (n - 1) * (n - 2) / 6 + n * (n - 1) / 2;
    const std::size_t m = std::min(available, std::uniform_int_distribution<std::size_t>(n / 2 + 1, 2 * n)(rng));
    const Player p = std::bernoulli_distribution(0.5)(rng) ? Player::Maker : Player::Breaker;
    RandomGame rg = gen_random(n, m, rng(), p, uniform ? kThreeUniform : kDefaultSizeWeights);
    if (rg.game.graph.vertex_count() >= n_lo) return std::move(rg.game);
  }
}

inline SweepStats sampled_agreement(std::size_t count, std::size_t n_lo, std::size_t n_hi, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  SweepStats st;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) check_game(sample_game(rng, n_lo, n_hi), st);
  st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return st;
}

struct EquivalenceStats {
  std::size_t hypergraphs = 0;
  std::size_t with_hot_path = 0;
  std::size_t disagreements = 0;   // detector vs enumerator existence
  std::size_t invalid_witnesses = 0;
  std::vector<std::string> failures;
};

// Regular-path detector vs exhaustive enumeration of all hot paths.
inline void check_hot_path_equivalence(const Hypergraph& h, EquivalenceStats& st) {
  ++st.hypergraphs;
  const bool brute = oracle::any_hot_path(h, 12);
  const auto witness = find_hot_path(h);
  const bool fast = has_hot_path(h);
  if (brute) ++st.with_hot_path;
  bool bad = false;
  if (brute != witness.has_value() || fast != witness.has_value()) {
    ++st.disagreements;
    bad = true;
  }
  if (witness && !verify_witness(h, *witness, false)) {
    ++st.invalid_witnesses;
    bad = true;
  }
  if (bad && st.failures.size() < 8) st.failures.push_back(write_game(Game{h, Player::Maker}));
}

inline EquivalenceStats hot_path_equivalence(std::size_t count, std::size_t max_n, std::uint64_t seed) {
  EquivalenceStats st;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    check_hot_path_equivalence(sample_game(rng, 3, max_n).graph, st);
  }
  return st;
}

struct InvarianceStats {
  std::size_t games = 0;
  std::size_t violations = 0;
  std::vector<std::string> failures;
};

// Adds a random proper superset of a random edge and compares full-rules winners
// with the redundant edge kept in play.
inline InvarianceStats superset_invariance(std::size_t count, std::uint64_t seed) {
  InvarianceStats st;
  std::mt19937_64 rng(seed);
  while (st.games < count) {
    const Game g = sample_game(rng, 3, 7);
    const Hypergraph& h = g.graph;
    std::vector<Edge> extendable;
    for (const Edge& e : h.edges()) {
      if (e.size() < 3 && e.size() < h.vertex_count()) extendable.push_back(e);
    }
    if (extendable.empty()) continue;
    const Edge base = extendable[std::uniform_int_distribution<std::size_t>(0, extendable.size() - 1)(rng)];
    std::vector<Vertex> outside;
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
      if (!base.contains(v)) outside.push_back(v);
    }
    std::shuffle(outside.begin(), outside.end(), rng);
    const std::size_t extra = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3 - base.size(), outside.size()))(rng);
    std::vector<Vertex> vs(base.begin(), base.end());
    vs.insert(vs.end(), outside.begin(), outside.begin() + extra);
    std::vector<Edge> edges = h.edges();
    edges.emplace_back(std::span<const Vertex>(vs));
    const Game raw{Hypergraph::build(h.vertex_count(), std::move(edges)), g.to_move};

    oracle::OracleOptions keep;
    keep.normalize = false;
    ++st.games;
    if (oracle::full_minimax(raw, keep).winner != oracle::full_minimax(g).winner) {
      ++st.violations;
      if (st.failures.size() < 8) st.failures.push_back(write_game(raw));
    }
  }
  return st;
}

}  // namespace rank3::verify

#endif  // RANK3_VERIFICATION_HPP
