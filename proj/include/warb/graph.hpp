// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "warb/error.hpp"

namespace warb {

using Vertex = std::uint32_t;

/// Undirected edge with its conductance (reciprocal resistance). After
/// normalization u < v always holds.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double c = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Dynamic bitset over [0, universe). Iteration is in increasing vertex order.
///
/// Ordering: subsets compare by cardinality first, then by the value of the
/// membership bitmask (the highest differing vertex decides). This is the
/// argmax tie-break order; within one cardinality it agrees with the
/// increasing-mask order in which connected subsets are enumerated.
class VertexSubset {
 public:
  VertexSubset() = default;
  explicit VertexSubset(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSubset(std::size_t universe, std::initializer_list<Vertex> members) : VertexSubset(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSubset from_members(std::size_t universe, std::span<const Vertex> members) {
    VertexSubset s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }

  static VertexSubset from_mask(std::uint64_t mask, std::size_t universe) {
    if (universe < 64 && (mask >> universe) != 0) {
      throw Error(Errc::VertexOutOfRange, "mask has bits beyond the universe");
    }
    VertexSubset s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
  }

  static VertexSubset full(std::size_t universe) {
    VertexSubset s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.words_[i / 64] |= std::uint64_t{1} << (i % 64);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  std::size_t size() const noexcept {
    std::size_t count = 0;
    for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
    return count;
  }

  bool empty() const noexcept { return size() == 0; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0;
  }

  void insert(Vertex v) {
    if (v >= universe_) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " outside subset universe");
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
  }

  void erase(Vertex v) noexcept {
    if (v < universe_) words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
        out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      }
    }
    return out;
  }

  /// Bitmask form; only meaningful for universes of at most 64 vertices.
  std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

  VertexSubset& operator|=(const VertexSubset& other) {
    if (other.universe_ > universe_) {
      universe_ = other.universe_;
      words_.resize(other.words_.size(), 0);
    }
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  friend bool operator==(const VertexSubset& a, const VertexSubset& b) noexcept {
    const std::size_t n = std::max(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.word(i) != b.word(i)) return false;
    }
    return true;
  }

  friend std::strong_ordering operator<=>(const VertexSubset& a, const VertexSubset& b) noexcept {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    const std::size_t n = std::max(a.words_.size(), b.words_.size());
    for (std::size_t i = n; i-- > 0;) {
      if (auto c = a.word(i) <=> b.word(i); c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (Vertex v : members()) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    return out + "}";
  }

  friend std::ostream& operator<<(std::ostream& os, const VertexSubset& s) { return os << s.to_string(); }

 private:
  std::uint64_t word(std::size_t i) const noexcept { return i < words_.size() ? words_[i] : 0; }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

enum class FamilyKind { path, star, cycle, complete, complete_bipartite, hypercube };

constexpr std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::path: return "path";
    case FamilyKind::star: return "star";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::complete: return "complete";
    case FamilyKind::complete_bipartite: return "complete_bipartite";
    case FamilyKind::hypercube: return "hypercube";
  }
  return "unknown";
}

/// Named graph family. Parameters:
///   path n (P_n, n vertices), star k (K_{1,k}, hub 0), cycle n (n >= 3),
///   complete n, complete_bipartite a b, hypercube d (Q_d, d >= 1).
struct GraphFamily {
  FamilyKind kind = FamilyKind::path;
  std::vector<std::size_t> params;

  static GraphFamily path(std::size_t n) { return {FamilyKind::path, {n}}; }
  static GraphFamily star(std::size_t leaves) { return {FamilyKind::star, {leaves}}; }
  static GraphFamily cycle(std::size_t n) { return {FamilyKind::cycle, {n}}; }
  static GraphFamily complete(std::size_t n) { return {FamilyKind::complete, {n}}; }
  static GraphFamily complete_bipartite(std::size_t a, std::size_t b) { return {FamilyKind::complete_bipartite, {a, b}}; }
  static GraphFamily hypercube(std::size_t d) { return {FamilyKind::hypercube, {d}}; }

  bool is_tree() const noexcept { return kind == FamilyKind::path || kind == FamilyKind::star; }

  friend bool operator==(const GraphFamily&, const GraphFamily&) = default;
};

inline constexpr std::size_t kMaxHypercubeDimension = 24;

namespace detail {

inline void require_params(const GraphFamily& f, std::size_t count) {
  if (f.params.size() != count) {
    throw Error(Errc::InvalidFamilyParameter, std::string(to_string(f.kind)) + " expects " + std::to_string(count) +
                                                  " parameter(s), got " + std::to_string(f.params.size()));
  }
}

}  // namespace detail

/// Validates parameters and returns (vertex count, edge count) without
/// materializing the graph.
inline std::pair<std::size_t, std::size_t> family_size(const GraphFamily& f) {
  auto bad = [&](const std::string& why) { return Error(Errc::InvalidFamilyParameter, std::string(to_string(f.kind)) + ": " + why); };
  switch (f.kind) {
    case FamilyKind::path: {
      detail::require_params(f, 1);
      const auto n = f.params[0];
      if (n < 1) throw bad("needs n >= 1");
      return {n, n - 1};
    }
    case FamilyKind::star: {
      detail::require_params(f, 1);
      const auto k = f.params[0];
      if (k < 1) throw bad("needs at least one leaf");
      return {k + 1, k};
    }
    case FamilyKind::cycle: {
      detail::require_params(f, 1);
      const auto n = f.params[0];
      if (n < 3) throw bad("cycle requires n >= 3");
      return {n, n};
    }
    case FamilyKind::complete: {
      detail::require_params(f, 1);
      const auto n = f.params[0];
      if (n < 1) throw bad("needs n >= 1");
      return {n, n * (n - 1) / 2};
    }
    case FamilyKind::complete_bipartite: {
      detail::require_params(f, 2);
      const auto a = f.params[0];
      const auto b = f.params[1];
      if (a < 1 || b < 1) throw bad("both sides need at least one vertex");
      return {a + b, a * b};
    }
    case FamilyKind::hypercube: {
      detail::require_params(f, 1);
      const auto d = f.params[0];
      if (d < 1) throw bad("hypercube requires d >= 1");
      if (d > kMaxHypercubeDimension) throw bad("dimension above " + std::to_string(kMaxHypercubeDimension));
      return {std::size_t{1} << d, d << (d - 1)};
    }
  }
  throw bad("unknown family");
}

class WeightedGraph;
WeightedGraph build_graph(std::size_t n, std::vector<Edge> edges);
WeightedGraph generate_family(const GraphFamily& family, bool unit_weights = true);

/// The object (G, c): a simple undirected graph with strictly positive edge
/// conductances. Immutable after construction; edges are stored sorted by
/// (u, v) with u < v, and edge indices refer to that order.
class WeightedGraph {
 public:
  struct Incidence {
    Vertex to;
    std::size_t edge;
  };

  WeightedGraph() = default;

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  std::span<const Incidence> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  std::optional<std::size_t> find_edge(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return std::nullopt;
    for (const auto& inc : adjacency_[u]) {
      if (inc.to == v) return inc.edge;
    }
    return std::nullopt;
  }

  std::vector<double> conductances() const {
    std::vector<double> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back(e.c);
    return out;
  }

  /// Set only for graphs produced by generate_family with unit weights; any
  /// re-weighting drops it.
  const std::optional<GraphFamily>& family() const noexcept { return family_; }

  /// Same topology, new conductances (indexed in normalized edge order).
  WeightedGraph with_conductances(std::span<const double> c) const {
    if (c.size() != edges_.size()) {
      throw Error(Errc::InvalidConfig, "conductance vector length does not match edge count");
    }
    std::vector<Edge> next(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < next.size(); ++i) next[i].c = c[i];
    return build_graph(n_, std::move(next));
  }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) noexcept {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend WeightedGraph build_graph(std::size_t n, std::vector<Edge> edges);
  friend WeightedGraph generate_family(const GraphFamily& family, bool unit_weights);

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::optional<GraphFamily> family_;
};

/// Validates and normalizes: u < v per edge, edges sorted lexicographically.
inline WeightedGraph build_graph(std::size_t n, std::vector<Edge> edges) {
  if (n < 1) throw Error(Errc::VertexOutOfRange, "graph needs at least one vertex");
  for (auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(Errc::VertexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") with n=" + std::to_string(n));
    }
    if (e.u == e.v) throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    if (!(e.c > 0.0) || !std::isfinite(e.c)) {
      throw Error(Errc::NonPositiveConductance,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") has conductance " + std::to_string(e.c));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw Error(Errc::DuplicateEdge, "edge (" + std::to_string(edges[i].u) + "," + std::to_string(edges[i].v) + ") appears twice");
    }
  }
  WeightedGraph g;
  g.n_ = n;
  g.adjacency_.assign(n, {});
  for (std::size_t i = 0; i < edges.size(); ++i) {
    g.adjacency_[edges[i].u].push_back({edges[i].v, i});
    g.adjacency_[edges[i].v].push_back({edges[i].u, i});
  }
  g.edges_ = std::move(edges);
  return g;
}

inline WeightedGraph generate_family(const GraphFamily& family, bool unit_weights) {
  const auto [n, m] = family_size(family);
  std::vector<Edge> edges;
  edges.reserve(m);
  auto add = [&](std::size_t u, std::size_t v) { edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), 1.0}); };
  switch (family.kind) {
    case FamilyKind::path:
      for (std::size_t i = 0; i + 1 < n; ++i) add(i, i + 1);
      break;
    case FamilyKind::star:
      for (std::size_t i = 1; i < n; ++i) add(0, i);
      break;
    case FamilyKind::cycle:
      for (std::size_t i = 0; i < n; ++i) add(i, (i + 1) % n);
      break;
    case FamilyKind::complete:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) add(i, j);
      break;
    case FamilyKind::complete_bipartite: {
      const auto a = family.params[0];
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = a; j < n; ++j) add(i, j);
      break;
    }
    case FamilyKind::hypercube: {
      const auto d = family.params[0];
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t bit = 0; bit < d; ++bit) {
          const std::size_t w = v ^ (std::size_t{1} << bit);
          if (v < w) add(v, w);
        }
      break;
    }
  }
  WeightedGraph g = build_graph(n, std::move(edges));
  if (unit_weights) g.family_ = family;
  return g;
}

inline void check_subset_range(const WeightedGraph& g, const VertexSubset& s) {
  const auto members = s.members();
  if (!members.empty() && members.back() >= g.vertex_count()) {
    throw Error(Errc::VertexOutOfRange, "subset member " + std::to_string(members.back()) + " outside graph with n=" +
                                            std::to_string(g.vertex_count()));
  }
}

/// G[s]: vertices of s relabeled 0..|s|-1 in increasing order, every edge of g
/// with both endpoints in s, conductances copied unchanged.
inline WeightedGraph induced_subgraph(const WeightedGraph& g, const VertexSubset& s) {
  check_subset_range(g, s);
  const auto members = s.members();
  if (members.empty()) throw Error(Errc::SubsetTooSmall, "induced subgraph of an empty subset");
  std::vector<Vertex> relabel(g.vertex_count(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) relabel[members[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (s.contains(e.u) && s.contains(e.v)) edges.push_back({relabel[e.u], relabel[e.v], e.c});
  }
  return build_graph(members.size(), std::move(edges));
}

/// True iff g[s] has exactly one connected component (a single vertex counts).
inline bool is_connected(const WeightedGraph& g, const VertexSubset& s) {
  check_subset_range(g, s);
  const auto members = s.members();
  if (members.empty()) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{members.front()};
  seen[members.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const auto& inc : g.neighbors(v)) {
      if (!seen[inc.to] && s.contains(inc.to)) {
        seen[inc.to] = 1;
        ++reached;
        stack.push_back(inc.to);
      }
    }
  }
  return reached == members.size();
}

inline bool is_connected(const WeightedGraph& g) { return is_connected(g, VertexSubset::full(g.vertex_count())); }

inline bool is_tree(const WeightedGraph& g) {
  return g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

}  // namespace warb
