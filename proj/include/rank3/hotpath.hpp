#ifndef RANK3_HOTPATH_HPP
#define RANK3_HOTPATH_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "rank3/hypergraph.hpp"

namespace rank3 {

enum class EndKind : std::uint8_t { Proper, Virtual };

// A proper 2-edge, or a virtual one together with all of its generators.
struct TwoEdgeEnd {
  std::array<Vertex, 2> pair{};
  EndKind kind = EndKind::Proper;
  std::vector<Vertex> generators;  // empty when Proper

  Edge edge() const { return Edge{pair[0], pair[1]}; }
  bool touches(Vertex v) const noexcept { return pair[0] == v || pair[1] == v; }

  friend bool operator==(const TwoEdgeEnd&, const TwoEdgeEnd&) = default;
};

// A linear path joining two distinct 2-edges through 3-edges. For a virtual end
// the two generators kept off the path are recorded in the matching *_choice.
struct HotPathWitness {
  TwoEdgeEnd start;
  TwoEdgeEnd end;
  std::vector<Edge> intermediates;
  std::vector<Vertex> start_choice;
  std::vector<Vertex> end_choice;

  // start.pair, intermediates..., end.pair
  std::vector<Edge> sequence() const {
    std::vector<Edge> out;
    out.reserve(intermediates.size() + 2);
    out.push_back(start.edge());
    out.insert(out.end(), intermediates.begin(), intermediates.end());
    out.push_back(end.edge());
    return out;
  }

  // Maker's first move along the path: the start vertex the path leaves through.
  Vertex opening_move() const {
    const Edge next = intermediates.empty() ? end.edge() : intermediates.front();
    return next.contains(start.pair[0]) ? start.pair[0] : start.pair[1];
  }

  friend bool operator==(const HotPathWitness&, const HotPathWitness&) = default;
};

inline std::vector<TwoEdgeEnd> two_edge_ends(const Hypergraph& h) {
  std::vector<TwoEdgeEnd> out;
  for (const Edge& e : h.edges()) {
    if (e.size() == 2) out.push_back({{e[0], e[1]}, EndKind::Proper, {}});
  }
  for (VirtualEdge& ve : virtual_edges(h)) {
    out.push_back({ve.pair, EndKind::Virtual, std::move(ve.generators)});
  }
  std::sort(out.begin(), out.end(), [](const TwoEdgeEnd& a, const TwoEdgeEnd& b) { return a.pair < b.pair; });
  return out;
}

inline std::optional<Vertex> has_singleton(const Hypergraph& h) {
  for (const Edge& e : h.edges()) {
    if (e.size() == 1) return e[0];
  }
  return std::nullopt;
}

struct ComponentMap {
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<Edge> regular_edges;
  std::vector<std::size_t> edge_component;    // parallel to regular_edges
  std::vector<std::size_t> vertex_component;  // kNone when the vertex is in no regular edge
  std::size_t component_count = 0;
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

// Connected components of the regular 3-edges (edges adjacent when they share a
// vertex). Components are vertex-disjoint, so each vertex touches at most one.
inline ComponentMap component_map(const Hypergraph& h) {
  ComponentMap cm;
  cm.regular_edges = classify_regular(h).edges;
  const std::size_t n = h.vertex_count();
  detail::DisjointSets ds(n);
  std::vector<char> covered(n, 0);
  for (const Edge& e : cm.regular_edges) {
    ds.unite(e[0], e[1]);
    ds.unite(e[0], e[2]);
    for (Vertex v : e) covered[v] = 1;
  }
  std::vector<std::size_t> root_id(n, ComponentMap::kNone);
  cm.vertex_component.assign(n, ComponentMap::kNone);
  for (Vertex v = 0; v < n; ++v) {
    if (!covered[v]) continue;
    std::size_t r = ds.find(v);
    if (root_id[r] == ComponentMap::kNone) root_id[r] = cm.component_count++;
    cm.vertex_component[v] = root_id[r];
  }
  for (const Edge& e : cm.regular_edges) cm.edge_component.push_back(cm.vertex_component[e[0]]);
  return cm;
}

namespace detail {

inline bool disjoint(std::span<const Vertex> a, std::span<const Vertex> b) {
  for (Vertex x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  }
  return true;
}

inline std::vector<std::array<Vertex, 2>> generator_choices(const TwoEdgeEnd& end) {
  std::vector<std::array<Vertex, 2>> out;
  for (std::size_t i = 0; i < end.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < end.generators.size(); ++j) {
      out.push_back({end.generators[i], end.generators[j]});
    }
  }
  return out;
}

}  // namespace detail

// Checks every hot-path condition against `h`. With `require_regular` the
// intermediates must additionally be regular 3-edges.
inline bool verify_witness(const Hypergraph& h, const HotPathWitness& w, bool require_regular = true,
                           std::string* why = nullptr) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  auto end_ok = [&](const TwoEdgeEnd& end, const std::vector<Vertex>& choice) {
    if (end.pair[0] == end.pair[1]) return false;
    const Edge pair = end.edge();
    if (end.kind == EndKind::Proper) return h.has_edge(pair) && choice.empty();
    if (h.has_edge(pair) || end.generators.size() < 2 || choice.size() != 2) return false;
    for (Vertex g : end.generators) {
      if (end.touches(g) || !h.has_edge(Edge{pair[0], pair[1], g})) return false;
    }
    if (choice[0] == choice[1]) return false;
    for (Vertex g : choice) {
      if (std::find(end.generators.begin(), end.generators.end(), g) == end.generators.end()) return false;
    }
    return true;
  };
  if (!end_ok(w.start, w.start_choice)) return fail("malformed start end");
  if (!end_ok(w.end, w.end_choice)) return fail("malformed end end");
  if (w.start.pair == w.end.pair) return fail("ends coincide");

  const std::vector<Edge> seq = w.sequence();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      const std::size_t s = seq[i].shared(seq[j]);
      if (j == i + 1 ? s != 1 : s != 0) return fail("sequence is not a linear path");
    }
  }
  RegularSets reg;
  if (require_regular) reg = classify_regular(h);
  for (const Edge& t : w.intermediates) {
    if (t.size() != 3 || !h.has_edge(t)) return fail("intermediate is not a 3-edge of the hypergraph");
    if (require_regular && !std::binary_search(reg.edges.begin(), reg.edges.end(), t)) {
      return fail("intermediate is not regular");
    }
  }
  for (const auto* choice : {&w.start_choice, &w.end_choice}) {
    for (Vertex g : *choice) {
      for (const Edge& e : seq) {
        if (e.contains(g)) return fail("chosen generator lies on the path");
      }
    }
  }
  if (!detail::disjoint(w.start_choice, w.end_choice)) return fail("generator choices intersect");
  return true;
}

namespace detail {

// Indexes built once per hypergraph and shared by every end-pair query.
class HotPathSearch {
 public:
  explicit HotPathSearch(const Hypergraph& h)
      : h_(h), n_(h.vertex_count()), ends_(two_edge_ends(h)), components_(component_map(h)) {
    ends_at_.resize(n_);
    for (std::size_t i = 0; i < ends_.size(); ++i) {
      for (Vertex v : ends_[i].pair) ends_at_[v].push_back(i);
    }
    pools_[kRegular].edges = components_.regular_edges;
    for (const Edge& e : h.edges()) {
      if (e.size() == 3) pools_[kAll].edges.push_back(e);
    }
    for (Pool& p : pools_) {
      p.at.resize(n_);
      for (std::size_t i = 0; i < p.edges.size(); ++i) {
        for (Vertex v : p.edges[i]) p.at[v].push_back(i);
      }
    }
    for (const TwoEdgeEnd& e : ends_) choices_.push_back(choices_for(e));
  }

  // Calls `accept(witness)` on candidates in canonical order until it returns true.
  template <class Accept>
  std::optional<HotPathWitness> search(Accept&& accept) const {
    // Zero intermediates: two ends meeting in one vertex.
    for (Vertex v = 0; v < n_; ++v) {
      const auto& here = ends_at_[v];
      for (std::size_t i = 0; i < here.size(); ++i) {
        for (std::size_t j = i + 1; j < here.size(); ++j) {
          for (const auto& ca : choices_[here[i]]) {
            for (const auto& cb : choices_[here[j]]) {
              if (!admissible(here[i], ca, here[j], cb)) continue;
              HotPathWitness w = make(here[i], ca, here[j], cb, {});
              if (accept(w)) return w;
            }
          }
        }
      }
    }
    // Two disjoint proper ends touching one component: nothing is masked, so the
    // component itself is the certificate.
    {
      const std::size_t none = ComponentMap::kNone;
      std::vector<std::vector<std::size_t>> by_component(components_.component_count);
      for (std::size_t a = 0; a < ends_.size(); ++a) {
        if (ends_[a].kind != EndKind::Proper) continue;
        std::size_t c0 = components_.vertex_component[ends_[a].pair[0]];
        std::size_t c1 = components_.vertex_component[ends_[a].pair[1]];
        if (c0 != none) by_component[c0].push_back(a);
        if (c1 != none && c1 != c0) by_component[c1].push_back(a);
      }
      for (const auto& touching : by_component) {
        for (std::size_t i = 0; i < touching.size(); ++i) {
          for (std::size_t j = i + 1; j < touching.size(); ++j) {
            const std::size_t a = touching[i], b = touching[j];
            if (!detail::disjoint(ends_[a].pair, ends_[b].pair)) continue;
            auto path = bfs(kRegular, a, {}, {}, b, nullptr);
            if (!path) continue;
            HotPathWitness w = make(a, {}, b, {}, std::move(*path));
            if (accept(w)) return w;
          }
        }
      }
    }
    // A virtual end with a chosen generator pair masked out of the regular
    // sub-hypergraph; a virtual partner masks its own pair as well.
    for (std::size_t a = 0; a < ends_.size(); ++a) {
      if (ends_[a].kind != EndKind::Virtual || !touches_regular(ends_[a])) continue;
      for (const auto& ca : choices_[a]) {
        std::vector<char> reached;
        bfs(kRegular, a, ca, {}, std::nullopt, &reached);
        for (std::size_t b = 0; b < ends_.size(); ++b) {
          const TwoEdgeEnd& eb = ends_[b];
          if (b == a || (eb.kind == EndKind::Virtual && b < a)) continue;
          if (!reached[eb.pair[0]] && !reached[eb.pair[1]]) continue;
          if (!detail::disjoint(ends_[a].pair, eb.pair)) continue;
          for (const auto& cb : choices_[b]) {
            if (!admissible(a, ca, b, cb)) continue;
            auto path = bfs(kRegular, a, ca, cb, b, nullptr);
            if (!path) continue;
            HotPathWitness w = make(a, ca, b, cb, std::move(*path));
            if (accept(w)) return w;
          }
        }
      }
    }
    return fallback(accept);
  }

  const std::vector<TwoEdgeEnd>& ends() const noexcept { return ends_; }

 private:
  using Choice = std::vector<Vertex>;

  static std::vector<Choice> choices_for(const TwoEdgeEnd& e) {
    if (e.kind == EndKind::Proper) return {Choice{}};
    std::vector<Choice> out;
    for (const auto& c : generator_choices(e)) out.push_back({c[0], c[1]});
    return out;
  }

  struct Pool {
    std::vector<Edge> edges;
    std::vector<std::vector<std::size_t>> at;  // edge indices per vertex
  };
  static constexpr std::size_t kRegular = 0, kAll = 1;
  static constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

  bool touches_regular(const TwoEdgeEnd& e) const {
    const auto& at = pools_[kRegular].at;
    return !at[e.pair[0]].empty() || !at[e.pair[1]].empty();
  }

  // Hot paths whose intermediates are not all regular. Shortest paths over all
  // 3-edges need not be linear, so each candidate is verified, and a failed
  // candidate is retried once with each of its intermediates banned.
  template <class Accept>
  std::optional<HotPathWitness> fallback(Accept& accept) const {
    if (pools_[kAll].edges.size() == pools_[kRegular].edges.size()) return std::nullopt;
    for (std::size_t a = 0; a < ends_.size(); ++a) {
      for (const auto& ca : choices_[a]) {
        std::vector<char> reached;
        bfs(kAll, a, ca, {}, std::nullopt, &reached);
        for (std::size_t b = a + 1; b < ends_.size(); ++b) {
          const TwoEdgeEnd& eb = ends_[b];
          if (!reached[eb.pair[0]] && !reached[eb.pair[1]]) continue;
          if (!detail::disjoint(ends_[a].pair, eb.pair)) continue;
          for (const auto& cb : choices_[b]) {
            if (!admissible(a, ca, b, cb)) continue;
            auto path = bfs(kAll, a, ca, cb, b, nullptr);
            if (!path) continue;
            std::vector<std::vector<Edge>> candidates{*path};
            for (const Edge& banned : *path) {
              auto alt = bfs(kAll, a, ca, cb, b, nullptr, &banned);
              if (alt) candidates.push_back(std::move(*alt));
            }
            for (auto& c : candidates) {
              HotPathWitness w = make(a, ca, b, cb, std::move(c));
              if (verify_witness(h_, w, false) && accept(w)) return w;
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  bool admissible(std::size_t a, const Choice& ca, std::size_t b, const Choice& cb) const {
    return disjoint(ca, ends_[b].pair) && disjoint(cb, ends_[a].pair) && disjoint(ca, cb);
  }

  HotPathWitness make(std::size_t a, const Choice& ca, std::size_t b, const Choice& cb,
                      std::vector<Edge> path) const {
    return HotPathWitness{ends_[a], ends_[b], std::move(path), ca, cb};
  }

  // Shortest path over the pool's 3-edges avoiding every masked vertex, from the
  // vertices of end `a` to the vertices of end `target`. Without a target it
  // only records which vertices are reachable.
  std::optional<std::vector<Edge>> bfs(std::size_t pool, std::size_t a, const Choice& ca, const Choice& cb,
                                       std::optional<std::size_t> target, std::vector<char>* reached_out,
                                       const Edge* banned = nullptr) const {
    const auto& reg = pools_[pool].edges;
    const auto& incident = pools_[pool].at;
    std::vector<char> masked(n_, 0);
    for (Vertex g : ca) masked[g] = 1;
    for (Vertex g : cb) masked[g] = 1;
    std::vector<char> seen(n_, 0);
    std::vector<char> edge_used(reg.size(), 0);
    std::vector<std::size_t> via(n_, kNoEdge);  // pool edge that reached v
    std::vector<Vertex> from(n_, 0);            // vertex that edge was entered from
    std::deque<Vertex> queue;
    for (Vertex s : ends_[a].pair) {
      seen[s] = 1;
      queue.push_back(s);
    }
    auto is_target = [&](Vertex v) { return target && ends_[*target].touches(v); };
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      if (is_target(u) && via[u] != kNoEdge) {
        std::vector<Edge> path;
        for (Vertex v = u; via[v] != kNoEdge; v = from[v]) path.push_back(reg[via[v]]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      for (std::size_t ei : incident[u]) {
        if (edge_used[ei]) continue;
        const Edge& t = reg[ei];
        if (banned && t == *banned) continue;
        if (masked[t[0]] || masked[t[1]] || masked[t[2]]) continue;
        edge_used[ei] = 1;
        for (Vertex w : t) {
          if (seen[w]) continue;
          seen[w] = 1;
          via[w] = ei;
          from[w] = u;
          queue.push_back(w);
        }
      }
    }
    if (reached_out) *reached_out = std::move(seen);
    return std::nullopt;
  }

  const Hypergraph& h_;
  std::size_t n_;
  std::vector<TwoEdgeEnd> ends_;
  ComponentMap components_;
  std::vector<std::vector<std::size_t>> ends_at_;
  std::array<Pool, 2> pools_;
  std::vector<std::vector<Choice>> choices_;
};

}  // namespace detail

// Some hot path of `h`, or nothing. Regular witnesses are preferred; the returned
// witness always passes verify_witness.
inline std::optional<HotPathWitness> find_hot_path(const Hypergraph& h) {
  detail::HotPathSearch search(h);
  return search.search([&](const HotPathWitness& w) { return verify_witness(h, w, false); });
}

// Existence only; skips verification of regular candidates.
inline bool has_hot_path(const Hypergraph& h) {
  detail::HotPathSearch search(h);
  return search.search([](const HotPathWitness&) { return true; }).has_value();
}

}  // namespace rank3

#endif  // RANK3_HOTPATH_HPP
