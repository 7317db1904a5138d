#ifndef RANK3_HYPERGRAPH_HPP
#define RANK3_HYPERGRAPH_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rank3/errors.hpp"

namespace rank3 {

using Vertex = std::uint32_t;

enum class Player : std::uint8_t { Maker, Breaker };

inline Player opponent(Player p) noexcept {
  return p == Player::Maker ? Player::Breaker : Player::Maker;
}

inline const char* player_name(Player p) noexcept {
  return p == Player::Maker ? "Maker" : "Breaker";
}

// A sorted set of at most three vertices.
class Edge {
 public:
  static constexpr std::size_t kMaxSize = 3;

  Edge() = default;

  Edge(std::initializer_list<Vertex> vs) : Edge(std::span<const Vertex>(vs.begin(), vs.size())) {}

  explicit Edge(std::span<const Vertex> vs) {
    if (vs.size() > kMaxSize) {
      throw RankError("edge of cardinality " + std::to_string(vs.size()) + " exceeds rank 3");
    }
    for (Vertex v : vs) v_[size_++] = v;
    std::sort(v_.begin(), v_.begin() + size_);
    if (std::adjacent_find(v_.begin(), v_.begin() + size_) != v_.begin() + size_) {
      throw MalformedInput("edge lists a vertex twice");
    }
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  const Vertex* begin() const noexcept { return v_.data(); }
  const Vertex* end() const noexcept { return v_.data() + size_; }
  Vertex operator[](std::size_t i) const noexcept { return v_[i]; }

  bool contains(Vertex x) const noexcept {
    for (std::size_t i = 0; i < size_; ++i) {
      if (v_[i] == x) return true;
    }
    return false;
  }

  Edge without(Vertex x) const noexcept {
    Edge out;
    for (std::size_t i = 0; i < size_; ++i) {
      if (v_[i] != x) out.v_[out.size_++] = v_[i];
    }
    return out;
  }

  // Intersection size with another edge.
  std::size_t shared(const Edge& o) const noexcept {
    std::size_t c = 0;
    for (Vertex v : *this) c += o.contains(v) ? 1 : 0;
    return c;
  }

  bool is_subset_of(const Edge& o) const noexcept { return shared(o) == size_; }

  // Applies `f` to every vertex id; the result is re-sorted.
  template <class F>
  Edge mapped(F&& f) const {
    std::array<Vertex, kMaxSize> tmp{};
    for (std::size_t i = 0; i < size_; ++i) tmp[i] = f(v_[i]);
    return Edge(std::span<const Vertex>(tmp.data(), size_));
  }

  friend bool operator==(const Edge& a, const Edge& b) noexcept {
    return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
  }

  friend std::strong_ordering operator<=>(const Edge& a, const Edge& b) noexcept {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  std::array<Vertex, kMaxSize> v_{};
  std::uint8_t size_ = 0;
};

enum class IsolatedVertices { Prune, Keep };

// Rank-3 hypergraph over vertices 0..vertex_count()-1.
//
// Every vertex remembers the id it had in the hypergraph it was first built
// from ("origin"); moves recompact ids but keep origins, so lines of play can be
// reported in the original labels.
class Hypergraph {
 public:
  using LabelTable = std::vector<std::string>;

  Hypergraph() : labels_(std::make_shared<LabelTable>()) {}

  // Validates ranges and removes duplicate edges. Does not normalize.
  static Hypergraph build(std::size_t vertex_count, std::vector<Edge> edges,
                          LabelTable labels = {}) {
    if (labels.empty()) {
      labels.reserve(vertex_count);
      for (std::size_t i = 0; i < vertex_count; ++i) labels.push_back("v" + std::to_string(i));
    }
    if (labels.size() != vertex_count) {
      throw MalformedInput("label count does not match vertex count");
    }
    {
      LabelTable sorted = labels;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw MalformedInput("duplicate vertex label");
      }
    }
    for (const Edge& e : edges) {
      for (Vertex v : e) {
        if (v >= vertex_count) throw MalformedInput("edge references vertex out of range");
      }
    }
    Hypergraph h;
    h.n_ = vertex_count;
    h.edges_ = std::move(edges);
    sort_unique(h.edges_);
    h.origin_.resize(vertex_count);
    for (std::size_t i = 0; i < vertex_count; ++i) h.origin_[i] = static_cast<Vertex>(i);
    h.labels_ = std::make_shared<const LabelTable>(std::move(labels));
    return h;
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  Vertex origin(Vertex v) const { return origin_.at(v); }
  const std::vector<Vertex>& origins() const noexcept { return origin_; }
  const std::string& label(Vertex v) const { return (*labels_)[origin_.at(v)]; }
  const std::string& origin_label(Vertex original) const { return labels_->at(original); }
  const std::shared_ptr<const LabelTable>& label_table() const noexcept { return labels_; }

  // Current id of the vertex labelled `name`, if it is still present.
  std::optional<Vertex> find_label(std::string_view name) const {
    for (Vertex v = 0; v < n_; ++v) {
      if ((*labels_)[origin_[v]] == name) return v;
    }
    return std::nullopt;
  }

  bool has_empty_edge() const noexcept { return !edges_.empty() && edges_.front().empty(); }

  bool has_edge(const Edge& e) const noexcept {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  bool is_antichain() const {
    for (const Edge& e : edges_) {
      for (const Edge& f : edges_) {
        if (!(e == f) && e.is_subset_of(f)) return false;
      }
    }
    return true;
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    if (a.n_ != b.n_ || a.edges_ != b.edges_) return false;
    for (Vertex v = 0; v < a.n_; ++v) {
      if (a.label(v) != b.label(v)) return false;
    }
    return true;
  }

  // Low-level constructor used by the move operators: ids already compacted,
  // labels shared with the parent.
  static Hypergraph derived(const Hypergraph& parent, std::size_t vertex_count, std::vector<Edge> edges,
                            std::vector<Vertex> origin) {
    Hypergraph h;
    h.n_ = vertex_count;
    h.edges_ = std::move(edges);
    sort_unique(h.edges_);
    h.origin_ = std::move(origin);
    h.labels_ = parent.labels_;
    return h;
  }

  static void sort_unique(std::vector<Edge>& edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Vertex> origin_;
  std::shared_ptr<const LabelTable> labels_;
};

struct Game {
  Hypergraph graph;
  Player to_move = Player::Maker;

  friend bool operator==(const Game&, const Game&) = default;
};

namespace detail {

// Drops every edge that has a proper subset in the (sorted, unique) list.
inline void remove_supersets(std::vector<Edge>& edges) {
  if (edges.empty()) return;
  if (edges.front().empty()) {
    edges.assign(1, Edge{});
    return;
  }
  auto present = [&](const Edge& e) { return std::binary_search(edges.begin(), edges.end(), e); };
  std::vector<char> drop(edges.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.size() < 2) continue;
    bool redundant = false;
    for (Vertex v : e) {
      const Edge sub = e.without(v);
      if (present(sub)) {
        redundant = true;
        break;
      }
      if (sub.size() == 2) {
        for (Vertex w : sub) {
          if (present(sub.without(w))) {
            redundant = true;
            break;
          }
        }
        if (redundant) break;
      }
    }
    drop[i] = redundant;
    any = any || redundant;
  }
  if (!any) return;
  std::size_t out = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!drop[i]) edges[out++] = edges[i];
  }
  edges.resize(out);
}

}  // namespace detail

// Antichain form: duplicates merged, every edge with a proper sub-edge removed,
// {∅} if the empty edge is present. Vertices are kept.
inline Hypergraph normalize(const Hypergraph& h) {
  std::vector<Edge> edges = h.edges();
  detail::remove_supersets(edges);
  return Hypergraph::derived(h, h.vertex_count(), std::move(edges), h.origins());
}

// Removes vertices that belong to no edge.
inline Hypergraph prune_isolated(const Hypergraph& h) {
  std::vector<char> used(h.vertex_count(), 0);
  for (const Edge& e : h.edges()) {
    for (Vertex v : e) used[v] = 1;
  }
  std::vector<Vertex> remap(h.vertex_count());
  std::vector<Vertex> origin;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (used[v]) {
      remap[v] = static_cast<Vertex>(origin.size());
      origin.push_back(h.origin(v));
    }
  }
  if (origin.size() == h.vertex_count()) return h;
  std::vector<Edge> edges;
  edges.reserve(h.edge_count());
  for (const Edge& e : h.edges()) edges.push_back(e.mapped([&](Vertex v) { return remap[v]; }));
  const std::size_t n = origin.size();
  return Hypergraph::derived(h, n, std::move(edges), std::move(origin));
}

// Builds a normalized game; isolated vertices are pruned unless asked otherwise.
inline Game make_game(std::size_t vertex_count, std::vector<Edge> edges, Player to_move,
                      Hypergraph::LabelTable labels = {},
                      IsolatedVertices policy = IsolatedVertices::Prune) {
  Hypergraph h = normalize(Hypergraph::build(vertex_count, std::move(edges), std::move(labels)));
  if (policy == IsolatedVertices::Prune) h = prune_isolated(h);
  return Game{std::move(h), to_move};
}

// H^X_Y: drop edges meeting Y, withdraw X from the rest, remove X ∪ Y from the
// vertex list. The result is deduplicated but not normalized.
inline Hypergraph restrict(const Hypergraph& h, std::span<const Vertex> withdrawn,
                           std::span<const Vertex> deleted) {
  const std::size_t n = h.vertex_count();
  std::vector<std::uint8_t> role(n, 0);  // 1 = withdrawn, 2 = deleted
  for (Vertex x : withdrawn) {
    if (x >= n) throw InvalidRestriction("withdrawn vertex out of range");
    role[x] = 1;
  }
  for (Vertex y : deleted) {
    if (y >= n) throw InvalidRestriction("deleted vertex out of range");
    if (role[y] == 1) throw InvalidRestriction("withdrawn and deleted sets intersect");
    role[y] = 2;
  }
  std::vector<Vertex> remap(n);
  std::vector<Vertex> origin;
  origin.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    if (role[v] == 0) {
      remap[v] = static_cast<Vertex>(origin.size());
      origin.push_back(h.origin(v));
    }
  }
  std::vector<Edge> edges;
  edges.reserve(h.edge_count());
  for (const Edge& e : h.edges()) {
    std::array<Vertex, Edge::kMaxSize> kept{};
    std::size_t k = 0;
    bool dead = false;
    for (Vertex v : e) {
      if (role[v] == 2) {
        dead = true;
        break;
      }
      if (role[v] == 0) kept[k++] = remap[v];
    }
    if (!dead) edges.emplace_back(std::span<const Vertex>(kept.data(), k));
  }
  const std::size_t m = origin.size();
  return Hypergraph::derived(h, m, std::move(edges), std::move(origin));
}

inline Game maker_move(const Game& g, Vertex x) {
  if (g.to_move != Player::Maker) throw WrongPlayer("Maker move requested with Breaker to move");
  if (x >= g.graph.vertex_count()) throw IllegalMove("vertex " + std::to_string(x) + " is not in the game");
  const Vertex none[1] = {};
  const Vertex xs[1] = {x};
  return Game{normalize(restrict(g.graph, xs, std::span<const Vertex>(none, 0))), Player::Breaker};
}

inline Game breaker_move(const Game& g, Vertex y) {
  if (g.to_move != Player::Breaker) throw WrongPlayer("Breaker move requested with Maker to move");
  if (y >= g.graph.vertex_count()) throw IllegalMove("vertex " + std::to_string(y) + " is not in the game");
  const Vertex none[1] = {};
  const Vertex ys[1] = {y};
  return Game{normalize(restrict(g.graph, std::span<const Vertex>(none, 0), ys)), Player::Maker};
}

inline Game play(const Game& g, Vertex v) {
  return g.to_move == Player::Maker ? maker_move(g, v) : breaker_move(g, v);
}

// Renames vertex v to perm[v]; labels travel with their vertices.
inline Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> perm) {
  const std::size_t n = h.vertex_count();
  if (perm.size() != n) throw MalformedInput("permutation size mismatch");
  std::vector<Vertex> origin(n);
  std::vector<char> seen(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (perm[v] >= n || seen[perm[v]]) throw MalformedInput("not a permutation");
    seen[perm[v]] = 1;
    origin[perm[v]] = h.origin(v);
  }
  std::vector<Edge> edges;
  edges.reserve(h.edge_count());
  for (const Edge& e : h.edges()) edges.push_back(e.mapped([&](Vertex v) { return perm[v]; }));
  return Hypergraph::derived(h, n, std::move(edges), std::move(origin));
}

struct VirtualEdge {
  std::array<Vertex, 2> pair{};
  std::vector<Vertex> generators;  // sorted, at least two

  friend bool operator==(const VirtualEdge&, const VirtualEdge&) = default;
};

namespace detail {

struct PairThird {
  Vertex a, b, third;
  auto operator<=>(const PairThird&) const = default;
};

// All (pair, third vertex) incidences of the 3-edges, sorted by pair.
inline std::vector<PairThird> pair_incidences(const Hypergraph& h) {
  std::vector<PairThird> out;
  for (const Edge& e : h.edges()) {
    if (e.size() != 3) continue;
    out.push_back({e[0], e[1], e[2]});
    out.push_back({e[0], e[2], e[1]});
    out.push_back({e[1], e[2], e[0]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Pairs shared by two or more 3-edges, with every generating third vertex.
inline std::vector<VirtualEdge> virtual_edges(const Hypergraph& h) {
  const auto inc = detail::pair_incidences(h);
  std::vector<VirtualEdge> out;
  for (std::size_t i = 0; i < inc.size();) {
    std::size_t j = i;
    while (j < inc.size() && inc[j].a == inc[i].a && inc[j].b == inc[i].b) ++j;
    if (j - i >= 2 && !h.has_edge(Edge{inc[i].a, inc[i].b})) {
      VirtualEdge ve;
      ve.pair = {inc[i].a, inc[i].b};
      for (std::size_t k = i; k < j; ++k) ve.generators.push_back(inc[k].third);
      out.push_back(std::move(ve));
    }
    i = j;
  }
  return out;
}

struct RegularSets {
  std::vector<Edge> edges;       // regular 3-edges, sorted
  std::vector<Vertex> vertices;  // regular vertices, sorted
};

inline RegularSets classify_regular(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  RegularSets out;
  for (const Edge& e : h.edges()) {
    if (e.size() != 3) continue;
    bool regular = true;
    for (const Edge& f : h.edges()) {
      if (!(f == e) && e.shared(f) >= 2) {
        regular = false;
        break;
      }
    }
    if (regular) out.edges.push_back(e);
  }
  std::vector<char> in_three(n, 0), disqualified(n, 0);
  for (const Edge& e : h.edges()) {
    for (Vertex v : e) {
      if (e.size() == 3) in_three[v] = 1;
      else disqualified[v] = 1;
    }
  }
  for (const VirtualEdge& ve : virtual_edges(h)) {
    disqualified[ve.pair[0]] = 1;
    disqualified[ve.pair[1]] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in_three[v] && !disqualified[v]) out.vertices.push_back(v);
  }
  return out;
}

}  // namespace rank3

#endif  // RANK3_HYPERGRAPH_HPP
