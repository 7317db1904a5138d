#ifndef RANK3_CLASSIFIER_HPP
#define RANK3_CLASSIFIER_HPP

#include <string>
#include <variant>
#include <vector>

#include "rank3/hotpath.hpp"
#include "rank3/hypergraph.hpp"

namespace rank3 {

// Shortened winning endgames:
//   Fam0: the empty edge is present (Maker has completed an edge),
//   Fam1: Maker to move with a singleton or a hot path,
//   Fam2: Breaker to move and every Breaker move leaves a Fam1 game.
enum class EndgameTag { Fam0, Fam1, Fam2, NotEndgame };

inline const char* tag_name(EndgameTag t) noexcept {
  switch (t) {
    case EndgameTag::Fam0: return "Fam0";
    case EndgameTag::Fam1: return "Fam1";
    case EndgameTag::Fam2: return "Fam2";
    case EndgameTag::NotEndgame: return "NotEndgame";
  }
  return "?";
}

struct EmptyEdgeMarker {
  friend bool operator==(const EmptyEdgeMarker&, const EmptyEdgeMarker&) = default;
};

struct SingletonCertificate {
  Vertex vertex = 0;
  friend bool operator==(const SingletonCertificate&, const SingletonCertificate&) = default;
};

using Fam1Certificate = std::variant<SingletonCertificate, HotPathWitness>;

// One entry per Breaker move, in vertex order of the Fam2 game.
struct ReplyCertificate {
  Vertex reply = 0;
  Fam1Certificate certificate;
};

struct EndgameClass {
  EndgameTag tag = EndgameTag::NotEndgame;
  std::variant<std::monostate, EmptyEdgeMarker, SingletonCertificate, HotPathWitness,
               std::vector<ReplyCertificate>>
      certificate;
};

// Singleton first (cheaper), then hot paths.
inline std::optional<Fam1Certificate> fam1_certificate(const Hypergraph& h) {
  if (auto s = has_singleton(h)) return Fam1Certificate{SingletonCertificate{*s}};
  if (auto w = find_hot_path(h)) return Fam1Certificate{std::move(*w)};
  return std::nullopt;
}

// The Fam1 predicate without certificate construction; this is the solver's hot loop.
inline bool is_fam1(const Hypergraph& h) {
  return has_singleton(h).has_value() || has_hot_path(h);
}

inline EndgameClass classify(const Game& g) {
  const Hypergraph& h = g.graph;
  if (h.has_empty_edge()) return {EndgameTag::Fam0, EmptyEdgeMarker{}};
  if (g.to_move == Player::Maker) {
    if (auto s = has_singleton(h)) return {EndgameTag::Fam1, SingletonCertificate{*s}};
    if (auto w = find_hot_path(h)) return {EndgameTag::Fam1, std::move(*w)};
    return {};
  }
  // Without edges Breaker has already won; without vertices Fam2 would hold vacuously.
  if (h.edge_count() == 0 || h.vertex_count() == 0) return {};
  std::vector<ReplyCertificate> replies;
  for (Vertex y = 0; y < h.vertex_count(); ++y) {
    auto cert = fam1_certificate(breaker_move(g, y).graph);
    if (!cert) return {};
    replies.push_back({y, std::move(*cert)});
  }
  return {EndgameTag::Fam2, std::move(replies)};
}

namespace detail {

inline bool check_fam1(const Hypergraph& h, const Fam1Certificate& c) {
  if (const auto* s = std::get_if<SingletonCertificate>(&c)) {
    return s->vertex < h.vertex_count() && h.has_edge(Edge{s->vertex});
  }
  return verify_witness(h, std::get<HotPathWitness>(c), false);
}

}  // namespace detail

// Re-checks a classification against the game from scratch.
inline bool verify_classification(const Game& g, const EndgameClass& c) {
  const Hypergraph& h = g.graph;
  switch (c.tag) {
    case EndgameTag::Fam0:
      return h.has_empty_edge() && std::holds_alternative<EmptyEdgeMarker>(c.certificate);
    case EndgameTag::Fam1:
      if (g.to_move != Player::Maker || h.has_empty_edge()) return false;
      if (const auto* s = std::get_if<SingletonCertificate>(&c.certificate)) {
        return detail::check_fam1(h, *s);
      }
      if (const auto* w = std::get_if<HotPathWitness>(&c.certificate)) return detail::check_fam1(h, *w);
      return false;
    case EndgameTag::Fam2: {
      if (g.to_move != Player::Breaker || h.has_empty_edge() || h.vertex_count() == 0) return false;
      const auto* replies = std::get_if<std::vector<ReplyCertificate>>(&c.certificate);
      if (!replies || replies->size() != h.vertex_count()) return false;
      for (Vertex y = 0; y < h.vertex_count(); ++y) {
        const ReplyCertificate& r = (*replies)[y];
        if (r.reply != y || !detail::check_fam1(breaker_move(g, y).graph, r.certificate)) return false;
      }
      return true;
    }
    case EndgameTag::NotEndgame:
      return std::holds_alternative<std::monostate>(c.certificate);
  }
  return false;
}

}  // namespace rank3

#endif  // RANK3_CLASSIFIER_HPP
