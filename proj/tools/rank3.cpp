// rank3: solve, check and generate rank-3 Maker-Breaker games.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rank3/bench.hpp"
#include "rank3/game_file.hpp"
#include "rank3/generators.hpp"
#include "rank3/http_server.hpp"
#include "rank3/json_io.hpp"
#include "rank3/miner.hpp"
#include "rank3/oracle.hpp"
#include "rank3/service.hpp"
#include "rank3/solver.hpp"
#include "rank3/verification.hpp"

namespace {

using namespace rank3;
using nlohmann::json;

Game load_or_die(const std::string& path) {
  std::vector<std::string> warnings;
  Game g = load_game(path, &warnings);
  for (const auto& w : warnings) std::cerr << path << ": warning: " << w << '\n';
  return g;
}

std::string join_labels(const Hypergraph& h, const std::vector<Vertex>& originals) {
  std::string out;
  for (Vertex o : originals) out += (out.empty() ? "" : " ") + h.origin_label(o);
  return out;
}

int run_solve(const std::string& path, bool only_best, bool children, bool as_json) {
  const Game g = load_or_die(path);
  const SolveResult r = solve(g);
  if (as_json) {
    json out = json_io::solve_json(g, r);
    if (children) out["children"] = json_io::children_json(g);
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  if (only_best) {
    if (!r.best_move) {
      std::cout << "no move: " << (r.root_class == EndgameTag::NotEndgame ? "terminal position" : tag_name(r.root_class))
                << '\n';
    } else {
      std::cout << g.graph.label(*r.best_move) << '\n';
    }
    return 0;
  }
  std::cout << "to move:  " << player_name(g.to_move) << '\n'
            << "class:    " << tag_name(r.root_class) << '\n'
            << "winner:   " << player_name(r.winner) << '\n'
            << "sdepth:   " << r.sdepth << '\n';
  if (r.best_move) std::cout << "best:     " << g.graph.label(*r.best_move) << '\n';
  if (r.principal_variation) std::cout << "line:     " << join_labels(g.graph, *r.principal_variation) << '\n';
  std::cout << "nodes:    " << r.nodes_visited << '\n'
            << "time:     " << std::chrono::duration<double, std::milli>(r.wall_time).count() << " ms\n";
  if (children) {
    for (const auto& [v, d] : evaluate_children(g)) std::cout << "  " << g.graph.label(v) << "  " << d << '\n';
  }
  return 0;
}

int run_oracle(const std::string& path, std::size_t max_vertices) {
  const Game g = load_or_die(path);
  oracle::OracleOptions o;
  o.max_vertices = max_vertices;
  const auto full = oracle::full_minimax(g, o);
  const auto sh = oracle::shortened_minimax_uncapped(g, o);
  std::cout << "winner:   " << player_name(full.winner) << '\n'
            << "dep:      " << full.dep << '\n'
            << "sdep:     " << sh.dep << '\n'
            << "entries:  " << full.transposition_entries << " full, " << sh.transposition_entries << " shortened\n";
  return 0;
}

void print_sweep(const char* name, const verify::SweepStats& st) {
  std::cout << name << ": " << st.games << " games, " << st.winner_disagreements << " winner disagreements, "
            << st.bound_violations << " bound violations, " << st.parity_violations << " parity violations, "
            << st.exactness_violations << " depth mismatches, " << std::fixed << std::setprecision(1) << st.seconds
            << " s\n";
  std::cout << "  max sdep: Maker-first " << st.max_sdep[0] << ", Breaker-first " << st.max_sdep[1] << '\n';
  for (const auto& f : st.failures) std::cout << "  failing game:\n" << f;
}

int run_verify(std::size_t exhaustive_n, std::size_t sample, const std::string& range, std::uint64_t seed) {
  std::size_t lo = 5, hi = 9;
  if (char colon; !(std::istringstream(range) >> lo >> colon >> hi) || colon != ':' || lo > hi || lo < 3) {
    std::cerr << "bad --n-range '" << range << "', expected LO:HI with 3 <= LO <= HI\n";
    return 2;
  }
  const auto ex = verify::exhaustive_agreement(exhaustive_n);
  print_sweep("exhaustive", ex);
  const auto sm = verify::sampled_agreement(sample, lo, hi, seed);
  print_sweep("sampled", sm);
  return ex.clean() && sm.clean() ? 0 : 1;
}

int run_mine(std::size_t max_vertices, std::size_t samples, std::uint64_t seed, const std::string& out_dir) {
  oracle::MineOptions o;
  o.max_vertices = max_vertices;
  o.samples_per_size = samples;
  o.seed = seed;
  const auto rep = oracle::mine_witnesses(o);
  std::cout << rep.games_examined << " games examined\n";
  for (Player p : {Player::Maker, Player::Breaker}) {
    for (int d = 0; d < oracle::MineReport::kValues; ++d) {
      const auto& slot = rep.smallest[static_cast<int>(p)][d];
      std::cout << player_name(p) << "-first sdep " << d << ": ";
      if (!slot) {
        std::cout << "not attained\n";
        continue;
      }
      std::cout << slot->game.graph.vertex_count() << " vertices, " << slot->game.graph.edge_count() << " edges\n";
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        const std::string name = std::string(1, p == Player::Maker ? 'm' : 'b') + std::to_string(d) + ".game";
        std::ofstream(std::filesystem::path(out_dir) / name) << oracle::fixture_text(*slot);
      }
    }
  }
  std::cout << "largest Breaker-win edge count, Maker to move (extremal construction in brackets):\n";
  for (const auto& [n, e] : rep.max_breaker_edges[0]) {
    std::cout << "  n=" << n << ": " << e;
    if (n >= 3) std::cout << " [" << (n - 2) * (n / 2) << "]";
    std::cout << (rep.size_exhaustive.at(n) ? "  exhaustive" : "  sampled") << '\n';
  }
  for (const auto& g : rep.over_bound) std::cout << "sdep " << g.sdep << " exceeds the bound:\n" << write_game(g.game);
  return rep.over_bound.empty() ? 0 : 1;
}

std::vector<BenchSize> parse_sizes(const std::string& list) {
  std::vector<BenchSize> out;
  std::istringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    BenchSize s;
    const auto colon = item.find(':');
    s.n = std::stoul(item.substr(0, colon));
    s.m = colon == std::string::npos ? std::max<std::size_t>(1, s.n / 2) : std::stoul(item.substr(colon + 1));
    out.push_back(s);
  }
  return out;
}

int run_bench(const std::string& sizes, std::size_t trials, std::uint64_t seed, const std::string& player,
              bool mixed, const std::string& csv) {
  BenchConfig cfg;
  cfg.sizes = parse_sizes(sizes);
  cfg.trials = trials;
  cfg.seed = seed;
  if (player == "M") cfg.players = {Player::Maker};
  else if (player == "B") cfg.players = {Player::Breaker};
  else cfg.players = {Player::Maker, Player::Breaker};
  if (mixed) cfg.weights = kDefaultSizeWeights;
  const BenchReport rep = bench(cfg);
  if (!csv.empty()) {
    std::ofstream f(csv);
    rep.write_csv(f);
  } else {
    rep.write_csv(std::cout);
  }
  for (Player p : cfg.players) {
    std::cerr << player_name(p) << "-first: node slope " << rep.node_slope(p) << ", time slope " << rep.time_slope(p)
              << '\n';
  }
  return 0;
}

int run_gen_extremal(std::size_t n, const std::string& player) {
  std::cout << write_game(gen_extremal(n, player == "B" ? Player::Breaker : Player::Maker));
  return 0;
}

int run_gen_random(std::size_t n, std::size_t m, std::uint64_t seed, const std::string& player, bool uniform) {
  const RandomGame rg =
      gen_random(n, m, seed, player == "B" ? Player::Breaker : Player::Maker, uniform ? kThreeUniform : kDefaultSizeWeights);
  std::cout << "# " << rg.requested_edges << " edges drawn, " << rg.realized_edges << " after normalization\n"
            << write_game(rg.game);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-3 Maker-Breaker solver and tools"};
  app.require_subcommand(1);
  int status = 0;

  std::string file;
  bool best = false, children = false, as_json = false;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a game file");
  solve_cmd->add_option("FILE", file, "Game file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_flag("--best-move", best, "Print only the best move");
  solve_cmd->add_flag("--children", children, "Value every legal move");
  solve_cmd->add_flag("--json", as_json, "JSON output");
  solve_cmd->callback([&] { status = run_solve(file, best, children, as_json); });

  std::size_t oracle_max = 12;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force values of a small game");
  oracle_cmd->add_option("FILE", file, "Game file")->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--max-vertices", oracle_max, "Refuse larger games")->capture_default_str();
  oracle_cmd->callback([&] { status = run_oracle(file, oracle_max); });

  std::size_t exhaustive_n = 4, sample = 10000;
  std::string range = "5:9";
  std::uint64_t seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the solver against the oracle");
  verify_cmd->add_option("--exhaustive-n", exhaustive_n, "All games up to this many vertices")->capture_default_str();
  verify_cmd->add_option("--sample", sample, "Random games to check")->capture_default_str();
  verify_cmd->add_option("--n-range", range, "Vertex range of sampled games, LO:HI")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  verify_cmd->callback([&] { status = run_verify(exhaustive_n, sample, range, seed); });

  std::size_t mine_max = 7, mine_samples = 3000;
  std::string out_dir;
  auto* mine_cmd = app.add_subcommand("mine", "Smallest games for each shortened depth");
  mine_cmd->add_option("--max-vertices", mine_max, "Largest vertex count (at most 8)")->capture_default_str();
  mine_cmd->add_option("--samples", mine_samples, "Random games per size above 5 vertices")->capture_default_str();
  mine_cmd->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  mine_cmd->add_option("--out", out_dir, "Write fixtures here");
  mine_cmd->callback([&] { status = run_mine(mine_max, mine_samples, seed, out_dir); });

  std::size_t n = 0, m = 0;
  std::string player = "M";
  bool uniform = false;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a game file");
  gen_cmd->require_subcommand(1);
  auto* ext_cmd = gen_cmd->add_subcommand("extremal", "Dense Breaker-win construction");
  ext_cmd->add_option("--n", n, "Vertex count")->required();
  ext_cmd->add_option("--player", player, "M or B")->check(CLI::IsMember({"M", "B"}));
  ext_cmd->callback([&] { status = run_gen_extremal(n, player); });
  auto* rnd_cmd = gen_cmd->add_subcommand("random", "Random game");
  rnd_cmd->add_option("--n", n, "Vertex count")->required();
  rnd_cmd->add_option("--m", m, "Edges to draw")->required();
  rnd_cmd->add_option("--seed", seed, "Seed")->capture_default_str();
  rnd_cmd->add_option("--player", player, "M or B")->check(CLI::IsMember({"M", "B"}));
  rnd_cmd->add_flag("--three-uniform", uniform, "Draw 3-edges only");
  rnd_cmd->callback([&] { status = run_gen_random(n, m, seed, player, uniform); });

  std::string sizes = "8,10,12,14,16", csv, bench_player = "both";
  std::size_t trials = 10;
  bool mixed = false;
  auto* bench_cmd = app.add_subcommand("bench", "Solver scaling on random games");
  bench_cmd->add_option("--sizes", sizes, "Comma list of N or N:M (M defaults to N/2)")->capture_default_str();
  bench_cmd->add_option("--trials", trials, "Games per size")->capture_default_str();
  bench_cmd->add_option("--seed", seed, "Seed")->capture_default_str();
  bench_cmd->add_option("--player", bench_player, "M, B or both")->check(CLI::IsMember({"M", "B", "both"}));
  bench_cmd->add_flag("--mixed", mixed, "Draw 2- and 3-edges instead of 3-edges only");
  bench_cmd->add_option("--csv", csv, "Write records here instead of stdout");
  bench_cmd->callback([&] { status = run_bench(sizes, trials, seed, bench_player, mixed, csv); });

  int port = 8080;
  std::string host = "127.0.0.1", static_dir;
  auto* serve_cmd = app.add_subcommand("serve", "JSON game service over HTTP");
  serve_cmd->add_option("--port", port, "Port")->capture_default_str();
  serve_cmd->add_option("--host", host, "Bind address")->capture_default_str();
  serve_cmd->add_option("--static", static_dir, "Serve files from this directory");
  serve_cmd->callback([&] {
    GameService service;
    std::cerr << "listening on " << host << ':' << port << '\n';
    if (!serve_http(service, host, port, static_dir)) {
      std::cerr << "cannot listen on " << host << ':' << port << '\n';
      status = 2;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
