#ifndef RANK3_BENCH_HPP
#define RANK3_BENCH_HPP

// Node-count and wall-time scaling of the solver on random games.

#include <cmath>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "rank3/generators.hpp"
#include "rank3/solver.hpp"

namespace rank3 {

struct BenchSize {
  std::size_t n = 0;
  std::size_t m = 0;
};

struct BenchConfig {
  std::vector<BenchSize> sizes;
  std::size_t trials = 3;
  std::uint64_t seed = 1;
  std::vector<Player> players{Player::Maker};
  // 3-uniform by default: 2-edges make most random games endgames at the root.
  SizeWeights weights = kThreeUniform;
};

struct BenchRecord {
  std::size_t n = 0;         // requested
  std::size_t m = 0;         // requested
  std::size_t vertices = 0;  // after normalization and pruning
  std::size_t edges = 0;
  Player to_move = Player::Maker;
  std::size_t trial = 0;
  std::uint64_t nodes = 0;
  double seconds = 0;
  Depth sdepth;
  EndgameTag root_class = EndgameTag::NotEndgame;
};

struct BenchReport {
  std::vector<BenchRecord> records;

  // Least-squares slope of log(nodes) against log(vertices) for one player.
  // Games that are endgames at the root cost one node and are left out of the
  // fit. NaN with fewer than two usable records.
  double node_slope(Player p) const { return slope(p, false); }
  double time_slope(Player p) const { return slope(p, true); }

  void write_csv(std::ostream& out) const {
    out << "n,m,vertices,edges,player,trial,nodes,seconds,sdepth,root_class\n";
    for (const auto& r : records) {
      out << r.n << ',' << r.m << ',' << r.vertices << ',' << r.edges << ','
          << (r.to_move == Player::Maker ? 'M' : 'B') << ',' << r.trial << ',' << r.nodes << ',' << r.seconds << ','
          << r.sdepth.str() << ',' << tag_name(r.root_class) << '\n';
    }
  }

 private:
  double slope(Player p, bool time) const {
    std::vector<double> xs, ys;
    for (const auto& r : records) {
      if (r.to_move != p || r.vertices < 2 || r.root_class != EndgameTag::NotEndgame) continue;
      const double y = time ? r.seconds : static_cast<double>(r.nodes);
      if (y <= 0) continue;
      xs.push_back(std::log(static_cast<double>(r.vertices)));
      ys.push_back(std::log(y));
    }
    if (xs.size() < 2) return std::nan("");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxx > 0 ? sxy / sxx : std::nan("");
  }
};

inline BenchReport bench(const BenchConfig& cfg) {
  BenchReport rep;
  SolveOptions opts;
  opts.principal_variation = false;
  std::mt19937_64 seeds(cfg.seed);
  for (Player p : cfg.players) {
    for (const BenchSize& s : cfg.sizes) {
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        const RandomGame rg = gen_random(s.n, s.m, seeds(), p, cfg.weights);
        const SolveResult r = solve(rg.game, opts);
        rep.records.push_back({s.n, s.m, rg.game.graph.vertex_count(), rg.game.graph.edge_count(), p, t,
                               r.nodes_visited, std::chrono::duration<double>(r.wall_time).count(), r.sdepth,
                               r.root_class});
      }
    }
  }
  return rep;
}

// m = n / 2 over the given vertex counts; the protocol behind the scaling check.
inline std::vector<BenchSize> half_density_sizes(const std::vector<std::size_t>& ns) {
  std::vector<BenchSize> out;
  for (std::size_t n : ns) out.push_back({n, std::max<std::size_t>(1, n / 2)});
  return out;
}

}  // namespace rank3

#endif  // RANK3_BENCH_HPP
