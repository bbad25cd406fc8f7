// SPDX-License-Identifier: Apache-2.0
//
// Test-only reference implementations. Nothing here calls into the library's
// enumeration, density or solver code; they exist to check those paths.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "warb/graph.hpp"

namespace oracle {

using warb::Edge;
using warb::Vertex;
using warb::WeightedGraph;

/// BFS connectivity of the subgraph induced by `in` (adjacency from the raw edge list).
inline bool induced_connected(const WeightedGraph& g, const std::vector<bool>& in) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::size_t total = 0;
  Vertex start = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (in[v]) {
      if (total == 0) start = v;
      ++total;
    }
  }
  if (total == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> queue{start};
  seen[start] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex w : adj[queue[head]]) {
      if (in[w] && !seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return queue.size() == total;
}

inline std::vector<bool> bits_of(std::uint64_t mask, std::size_t n) {
  std::vector<bool> in(n);
  for (std::size_t i = 0; i < n; ++i) in[i] = ((mask >> i) & 1U) != 0;
  return in;
}

/// All connected induced subsets with at least min_size vertices, by plain BFS.
inline std::vector<std::uint64_t> connected_subsets(const WeightedGraph& g, std::size_t min_size) {
  std::vector<std::uint64_t> out;
  const std::size_t n = g.vertex_count();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) < min_size) continue;
    if (induced_connected(g, bits_of(mask, n))) out.push_back(mask);
  }
  return out;
}

inline double induced_sum(const WeightedGraph& g, std::uint64_t mask) {
  double s = 0.0;
  for (const auto& e : g.edges()) {
    if (((mask >> e.u) & 1U) && ((mask >> e.v) & 1U)) s += e.c;
  }
  return s;
}

/// max over connected induced subsets of sum / (k - 1), naive summation.
inline double arboricity(const WeightedGraph& g) {
  double best = 0.0;
  for (auto mask : connected_subsets(g, 2)) {
    best = std::max(best, induced_sum(g, mask) / static_cast<double>(__builtin_popcountll(mask) - 1));
  }
  return best;
}

/// Maximum over every non-empty edge subset F of c(F) / (|V(F)| - components(F)).
/// Covers non-induced and disconnected subgraphs; isolated vertices never help.
inline double all_subgraph_max(const WeightedGraph& g) {
  const std::size_t m = g.edge_count();
  const std::size_t n = g.vertex_count();
  double best = 0.0;
  for (std::uint64_t f = 1; f < (std::uint64_t{1} << m); ++f) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<bool> touched(n, false);
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!((f >> i) & 1U)) continue;
      const auto& e = g.edge(i);
      sum += e.c;
      touched[e.u] = touched[e.v] = true;
      parent[find(e.u)] = find(e.v);
    }
    std::size_t verts = 0;
    std::size_t comps = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (!touched[v]) continue;
      ++verts;
      if (find(v) == v) ++comps;
    }
    best = std::max(best, sum / static_cast<double>(verts - comps));
  }
  return best;
}

/// Maximum over edge subsets F whose edges form a connected subgraph of
/// c(F) / (|V(F)| - 1): the definition over arbitrary connected subgraphs.
inline double connected_subgraph_max(const WeightedGraph& g) {
  const std::size_t m = g.edge_count();
  const std::size_t n = g.vertex_count();
  double best = 0.0;
  for (std::uint64_t f = 1; f < (std::uint64_t{1} << m); ++f) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<bool> touched(n, false);
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!((f >> i) & 1U)) continue;
      const auto& e = g.edge(i);
      sum += e.c;
      touched[e.u] = touched[e.v] = true;
      parent[find(e.u)] = find(e.v);
    }
    std::size_t verts = 0;
    std::size_t comps = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (!touched[v]) continue;
      ++verts;
      if (find(v) == v) ++comps;
    }
    if (comps == 1) best = std::max(best, sum / static_cast<double>(verts - 1));
  }
  return best;
}

/// Effective resistance by Gaussian elimination with partial pivoting on the
/// Laplacian grounded at `ground`; independent of the Cholesky path.
inline double effective_resistance(const WeightedGraph& g, Vertex u, Vertex v, Vertex ground = 0) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<double>> L(n, std::vector<double>(n, 0.0));
  for (const auto& e : g.edges()) {
    L[e.u][e.u] += e.c;
    L[e.v][e.v] += e.c;
    L[e.u][e.v] -= e.c;
    L[e.v][e.u] -= e.c;
  }
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (i != ground) idx.push_back(i);
  const std::size_t k = idx.size();
  std::vector<std::vector<double>> A(k, std::vector<double>(k + 1, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) A[i][j] = L[idx[i]][idx[j]];
    A[i][k] = (idx[i] == u ? 1.0 : 0.0) - (idx[i] == v ? 1.0 : 0.0);
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
    std::swap(A[col], A[piv]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col) continue;
      const double f = A[r][col] / A[col][col];
      for (std::size_t c = col; c <= k; ++c) A[r][c] -= f * A[col][c];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t i = 0; i < k; ++i) x[idx[i]] = A[i][k] / A[i][i];
  return std::fabs(x[u] - x[v]);
}

// ---------------------------------------------------------------------------
// Random instance generators (fixed-seed, test-only).

inline double random_conductance(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.1, 5.0)(rng);
}

inline WeightedGraph random_tree(std::mt19937_64& rng, std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    const auto parent = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
    edges.push_back({static_cast<Vertex>(parent), static_cast<Vertex>(v), random_conductance(rng)});
  }
  return warb::build_graph(n, std::move(edges));
}

/// Random spanning tree plus each remaining pair independently with prob `extra`.
inline WeightedGraph random_connected(std::mt19937_64& rng, std::size_t n, double extra) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    const auto j = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
    const Vertex a = perm[i];
    const Vertex b = perm[j];
    has[a][b] = has[b][a] = true;
    edges.push_back({a, b, random_conductance(rng)});
  }
  std::bernoulli_distribution coin(extra);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (!has[a][b] && coin(rng)) edges.push_back({a, b, random_conductance(rng)});
  return warb::build_graph(n, std::move(edges));
}

/// Erdos-Renyi style graph, possibly disconnected.
inline WeightedGraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) edges.push_back({a, b, random_conductance(rng)});
  return warb::build_graph(n, std::move(edges));
}

inline WeightedGraph permute(const WeightedGraph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.c});
  return warb::build_graph(g.vertex_count(), std::move(edges));
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace oracle
