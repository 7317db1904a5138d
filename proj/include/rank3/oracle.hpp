#ifndef RANK3_ORACLE_HPP
#define RANK3_ORACLE_HPP

// Ground truth for small games. Everything here works on vertex bitmasks and
// re-derives the rules from scratch; it deliberately shares no move, hot-path
// or normalization code with the fast path it is used to check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rank3/depth.hpp"
#include "rank3/hotpath.hpp"
#include "rank3/hypergraph.hpp"

namespace rank3::oracle {

using Mask = std::uint32_t;

struct OracleOptions {
  std::size_t max_vertices = 12;
  // When false the full-rules search keeps redundant superset edges.
  bool normalize = true;
};

struct OracleResult {
  Player winner = Player::Breaker;
  Depth dep = Depth::infinite();
  std::size_t transposition_entries = 0;
};

struct Position {
  Mask vertices = 0;
  std::vector<Mask> edges;  // sorted, unique
  Player to_move = Player::Maker;
};

inline Mask bit(Vertex v) { return Mask{1} << v; }

inline std::vector<Vertex> vertices_of(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return out;
}

inline void canonical_edges(std::vector<Mask>& edges, bool normalize) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (!normalize || edges.empty()) return;
  if (edges.front() == 0) {
    edges.assign(1, 0);
    return;
  }
  std::vector<Mask> kept;
  for (Mask e : edges) {
    bool redundant = false;
    for (Mask f : edges) {
      if (f != e && (f & ~e) == 0) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(e);
  }
  edges.swap(kept);
}

inline Position to_position(const Game& g, const OracleOptions& opts) {
  const std::size_t n = g.graph.vertex_count();
  if (n > opts.max_vertices || n > 31) {
    throw ResourceLimit("oracle refuses games with " + std::to_string(n) + " vertices (bound " +
                        std::to_string(opts.max_vertices) + ")");
  }
  Position p;
  p.vertices = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
  for (const Edge& e : g.graph.edges()) {
    Mask m = 0;
    for (Vertex v : e) m |= bit(v);
    p.edges.push_back(m);
  }
  canonical_edges(p.edges, opts.normalize);
  p.to_move = g.to_move;
  return p;
}

inline Position apply(const Position& p, Vertex v, bool normalize) {
  Position c;
  c.vertices = p.vertices & ~bit(v);
  c.to_move = opponent(p.to_move);
  c.edges.reserve(p.edges.size());
  for (Mask e : p.edges) {
    if (p.to_move == Player::Maker) c.edges.push_back(e & ~bit(v));
    else if (!(e & bit(v))) c.edges.push_back(e);
  }
  canonical_edges(c.edges, normalize);
  return c;
}

inline std::string key_of(const Position& p) {
  std::string k;
  k.reserve(5 + 4 * p.edges.size());
  auto put = [&](Mask m) {
    for (int i = 0; i < 4; ++i) k.push_back(static_cast<char>((m >> (8 * i)) & 0xff));
  };
  put(p.vertices);
  k.push_back(p.to_move == Player::Maker ? 'M' : 'B');
  for (Mask e : p.edges) put(e);
  return k;
}

// ---------------------------------------------------------------------------
// Brute-force hot paths: backtracking over every linear edge sequence.

struct MaskEnd {
  Mask pair = 0;
  bool is_virtual = false;
  std::vector<Mask> generators;  // single-bit masks
  std::vector<Mask> choices;     // 0 for proper ends; otherwise unions of two generators
};

struct MaskPath {
  std::size_t start = 0, end = 0;
  Mask start_choice = 0, end_choice = 0;
  std::vector<Mask> intermediates;
};

class PathEnumerator {
 public:
  PathEnumerator(const std::vector<Mask>& edges, std::size_t length_cap) : cap_(length_cap) {
    std::vector<Mask> pairs_of_threes;
    for (Mask e : edges) {
      if (std::popcount(e) == 2) add_end(e, false, {});
      if (std::popcount(e) == 3) {
        threes_.push_back(e);
        for (Vertex v : vertices_of(e)) pairs_of_threes.push_back(e & ~bit(v));
      }
    }
    std::sort(pairs_of_threes.begin(), pairs_of_threes.end());
    pairs_of_threes.erase(std::unique(pairs_of_threes.begin(), pairs_of_threes.end()), pairs_of_threes.end());
    for (Mask p : pairs_of_threes) {
      if (std::find(edges.begin(), edges.end(), p) != edges.end()) continue;
      std::vector<Mask> gens;
      for (Mask t : threes_) {
        if ((t & p) == p) gens.push_back(t & ~p);
      }
      if (gens.size() >= 2) add_end(p, true, std::move(gens));
    }
  }

  // Visits every hot path with `start < end`; stops early when `visit` returns true.
  bool for_each(const std::function<bool(const MaskPath&)>& visit) {
    visit_ = &visit;
    for (std::size_t a = 0; a < ends_.size(); ++a) {
      for (Mask ca : ends_[a].choices) {
        path_.start = a;
        path_.start_choice = ca;
        path_.intermediates.clear();
        if (extend(ends_[a].pair, 0, ca)) return true;
      }
    }
    return false;
  }

  const std::vector<MaskEnd>& ends() const noexcept { return ends_; }

 private:
  void add_end(Mask pair, bool is_virtual, std::vector<Mask> gens) {
    MaskEnd e{pair, is_virtual, std::move(gens), {}};
    if (!is_virtual) {
      e.choices.push_back(0);
    } else {
      for (std::size_t i = 0; i < e.generators.size(); ++i) {
        for (std::size_t j = i + 1; j < e.generators.size(); ++j) {
          e.choices.push_back(e.generators[i] | e.generators[j]);
        }
      }
    }
    ends_.push_back(std::move(e));
  }

  // `last` is the newest edge of the path, `before` the union of all older ones.
  bool extend(Mask last, Mask before, Mask forbidden) {
    const Mask start_pair = ends_[path_.start].pair;
    for (std::size_t b = path_.start + 1; b < ends_.size(); ++b) {
      const Mask bp = ends_[b].pair;
      if (std::popcount(bp & last) != 1 || (bp & before) || (bp & forbidden)) continue;
      const Mask on_path = before | last | bp | start_pair;
      for (Mask cb : ends_[b].choices) {
        if ((cb & on_path) || (cb & path_.start_choice)) continue;
        path_.end = b;
        path_.end_choice = cb;
        if ((*visit_)(path_)) return true;
      }
    }
    if (path_.intermediates.size() >= cap_) return false;
    for (Mask t : threes_) {
      if (std::popcount(t & last) != 1 || (t & before) || (t & forbidden)) continue;
      path_.intermediates.push_back(t);
      const bool done = extend(t, before | last, forbidden);
      path_.intermediates.pop_back();
      if (done) return true;
    }
    return false;
  }

  std::size_t cap_;
  std::vector<Mask> threes_;
  std::vector<MaskEnd> ends_;
  MaskPath path_;
  const std::function<bool(const MaskPath&)>* visit_ = nullptr;
};

inline bool brute_hot_path_exists(const std::vector<Mask>& edges) {
  PathEnumerator en(edges, 32);
  return en.for_each([](const MaskPath&) { return true; });
}

namespace detail {

inline std::vector<Mask> masks_of(const Hypergraph& h) {
  std::vector<Mask> out;
  for (const Edge& e : h.edges()) {
    Mask m = 0;
    for (Vertex v : e) m |= bit(v);
    out.push_back(m);
  }
  return out;
}

inline std::array<Vertex, 2> pair_of(Mask m) {
  const auto vs = vertices_of(m);
  return {vs[0], vs[1]};
}

inline TwoEdgeEnd to_end(const MaskEnd& e) {
  TwoEdgeEnd out;
  out.pair = pair_of(e.pair);
  out.kind = e.is_virtual ? EndKind::Virtual : EndKind::Proper;
  for (Mask g : e.generators) out.generators.push_back(static_cast<Vertex>(std::countr_zero(g)));
  std::sort(out.generators.begin(), out.generators.end());
  return out;
}

}  // namespace detail

// Every hot path with at most `length_cap` intermediate 3-edges (regular or not),
// one direction per path.
inline std::vector<HotPathWitness> enumerate_hot_paths(const Hypergraph& h, std::size_t length_cap,
                                                       std::size_t max_vertices = 10) {
  if (h.vertex_count() > max_vertices) {
    throw ResourceLimit("hot-path enumeration refuses " + std::to_string(h.vertex_count()) + " vertices");
  }
  PathEnumerator en(detail::masks_of(h), length_cap);
  std::vector<HotPathWitness> out;
  en.for_each([&](const MaskPath& p) {
    HotPathWitness w;
    w.start = detail::to_end(en.ends()[p.start]);
    w.end = detail::to_end(en.ends()[p.end]);
    for (Mask t : p.intermediates) {
      const auto vs = vertices_of(t);
      w.intermediates.push_back(Edge{vs[0], vs[1], vs[2]});
    }
    w.start_choice = vertices_of(p.start_choice);
    w.end_choice = vertices_of(p.end_choice);
    out.push_back(std::move(w));
    return false;
  });
  return out;
}

inline bool any_hot_path(const Hypergraph& h, std::size_t max_vertices = 10) {
  if (h.vertex_count() > max_vertices) {
    throw ResourceLimit("hot-path enumeration refuses " + std::to_string(h.vertex_count()) + " vertices");
  }
  return brute_hot_path_exists(detail::masks_of(h));
}

// ---------------------------------------------------------------------------
// Exhaustive minimax.

class FullRules {
 public:
  explicit FullRules(bool normalize) : normalize_(normalize) {}

  Depth dep(const Position& p) {
    if (!p.edges.empty() && p.edges.front() == 0) return Depth(0);
    if (p.edges.empty() || p.vertices == 0) return Depth::infinite();
    const std::string k = key_of(p);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    Depth out;
    if (p.to_move == Player::Maker) {
      Depth best = Depth::infinite();
      for (Vertex x : vertices_of(p.vertices)) best = std::min(best, dep(apply(p, x, normalize_)));
      out = best.next();
    } else {
      Depth worst(0);
      for (Vertex y : vertices_of(p.vertices)) worst = std::max(worst, dep(apply(p, y, normalize_)));
      out = worst.next();
    }
    memo_.emplace(k, out);
    return out;
  }

  std::size_t entries() const noexcept { return memo_.size(); }

 private:
  bool normalize_;
  std::unordered_map<std::string, Depth> memo_;
};

// Shortened depth with no cap; singletons and hot paths come from the
// brute-force enumerator.
class ShortenedRules {
 public:
  Depth sdep(const Position& p) {
    if (!p.edges.empty() && p.edges.front() == 0) return Depth(0);
    if (p.edges.empty() || p.vertices == 0) return Depth::infinite();
    const std::string k = key_of(p);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    Depth out;
    if (p.to_move == Player::Maker) {
      if (fam1(p)) {
        out = Depth(0);
      } else {
        Depth best = Depth::infinite();
        for (Vertex x : vertices_of(p.vertices)) best = std::min(best, sdep(apply(p, x, true)));
        out = best.next();
      }
    } else {
      Depth worst(0);
      for (Vertex y : vertices_of(p.vertices)) worst = std::max(worst, sdep(apply(p, y, true)));
      // all replies Fam1 (value 0): Fam2
      out = worst == Depth(0) ? worst : worst.next();
    }
    memo_.emplace(k, out);
    return out;
  }

  std::size_t entries() const noexcept { return memo_.size(); }

 private:
  static bool fam1(const Position& p) {
    for (Mask e : p.edges) {
      if (std::popcount(e) == 1) return true;
    }
    return brute_hot_path_exists(p.edges);
  }

  std::unordered_map<std::string, Depth> memo_;
};

inline OracleResult full_minimax(const Game& g, const OracleOptions& opts = {}) {
  FullRules rules(opts.normalize);
  const Depth d = rules.dep(to_position(g, opts));
  return {d.finite() ? Player::Maker : Player::Breaker, d, rules.entries()};
}

inline OracleResult shortened_minimax_uncapped(const Game& g, const OracleOptions& opts = {}) {
  OracleOptions o = opts;
  o.normalize = true;
  ShortenedRules rules;
  const Depth d = rules.sdep(to_position(g, o));
  return {d.finite() ? Player::Maker : Player::Breaker, d, rules.entries()};
}

// ---------------------------------------------------------------------------
// Enumeration universe.

// All nonempty vertex subsets of size <= 3 over n vertices, as edges.
inline std::vector<Edge> candidate_edges(std::size_t n) {
  std::vector<Edge> out;
  for (Vertex a = 0; a < n; ++a) {
    out.push_back(Edge{a});
    for (Vertex b = a + 1; b < n; ++b) {
      out.push_back(Edge{a, b});
      for (Vertex c = b + 1; c < n; ++c) out.push_back(Edge{a, b, c});
    }
  }
  return out;
}

// Calls `fn` with every antichain of nonempty edges of size <= 3 on n labelled
// vertices (including the empty edge set).
inline void for_each_antichain(std::size_t n, const std::function<void(const std::vector<Edge>&)>& fn) {
  const std::vector<Edge> cand = candidate_edges(n);
  std::vector<Edge> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cand.size()) {
      fn(chosen);
      return;
    }
    rec(i + 1);
    for (const Edge& e : chosen) {
      if (e.is_subset_of(cand[i]) || cand[i].is_subset_of(e)) return;
    }
    chosen.push_back(cand[i]);
    rec(i + 1);
    chosen.pop_back();
  };
  rec(0);
}

// Smallest sorted mask list over all vertex permutations; equal for isomorphic
// edge sets. Cost n!, so only for small n.
inline std::vector<Mask> canonical_form(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> best;
  bool first = true;
  do {
    std::vector<Mask> cur;
    for (const Edge& e : edges) {
      Mask m = 0;
      for (Vertex v : e) m |= bit(perm[v]);
      cur.push_back(m);
    }
    std::sort(cur.begin(), cur.end());
    if (first || cur < best) best = std::move(cur);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace rank3::oracle

#endif  // RANK3_ORACLE_HPP
