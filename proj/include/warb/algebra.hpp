// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "warb/density.hpp"
#include "warb/graph.hpp"

namespace warb {

/// Bookkeeping for G_1 ⊔ ... ⊔ G_k: part i occupies vertices
/// [offsets[i], offsets[i] + components[i].vertex_count()) of the combined graph.
struct DisjointUnion {
  std::vector<WeightedGraph> components;
  std::vector<Vertex> offsets;
};

inline std::pair<WeightedGraph, DisjointUnion> disjoint_union(std::span<const WeightedGraph> parts) {
  if (parts.empty()) throw Error(Errc::InvalidConfig, "disjoint union needs at least one part");
  DisjointUnion record;
  std::vector<Edge> edges;
  std::size_t offset = 0;
  for (const auto& part : parts) {
    record.components.push_back(part);
    record.offsets.push_back(static_cast<Vertex>(offset));
    for (const auto& e : part.edges()) {
      edges.push_back({static_cast<Vertex>(e.u + offset), static_cast<Vertex>(e.v + offset), e.c});
    }
    offset += part.vertex_count();
  }
  return {build_graph(offset, std::move(edges)), std::move(record)};
}

/// Maximal connected pieces, ordered by smallest member.
inline std::vector<VertexSubset> connected_components(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexSubset> out;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    VertexSubset comp(n);
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (const auto& inc : g.neighbors(v)) {
        if (!seen[inc.to]) {
          seen[inc.to] = 1;
          stack.push_back(inc.to);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

/// A_c of a disjoint union is the max over its parts; edgeless parts are the
/// identity and contribute nothing.
inline DensityValue arboricity_of_union(std::span<const WeightedGraph> parts, const ArboricityOptions& opts = {}) {
  bool any = false;
  DensityValue best;
  for (const auto& part : parts) {
    if (part.edge_count() == 0) continue;
    const auto a = arboricity(part, opts).density;
    if (!any || compare_density(a, best) > 0) best = a;
    any = true;
  }
  if (!any) throw Error(Errc::NoFeasibleSubgraph, "no part of the union has an edge");
  return best;
}

}  // namespace warb
