// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "warb/graph.hpp"

namespace warb {

/// Enumerating 2^n subsets is the brute-force route; beyond this many
/// vertices callers must raise the cap explicitly.
inline constexpr std::size_t kDefaultEnumerationCap = 22;
inline constexpr std::size_t kHardEnumerationLimit = 62;

inline void check_enumeration_cap(std::size_t n, std::size_t cap) {
  if (cap > kHardEnumerationLimit) {
    throw Error(Errc::InvalidConfig, "enumeration cap " + std::to_string(cap) + " exceeds hard limit " +
                                         std::to_string(kHardEnumerationLimit));
  }
  if (n > cap) {
    throw Error(Errc::GraphTooLargeForEnumeration,
                "graph has " + std::to_string(n) + " vertices, enumeration cap is " + std::to_string(cap));
  }
}

/// Bitmask view of a graph with at most 62 vertices: per-vertex neighbor
/// masks and per-edge endpoint masks for fast connectivity and edge sums.
class MaskGraph {
 public:
  explicit MaskGraph(const WeightedGraph& g) : n_(g.vertex_count()), adjacency_(g.vertex_count(), 0) {
    check_enumeration_cap(n_, kHardEnumerationLimit);
    edge_masks_.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
      const std::uint64_t bu = std::uint64_t{1} << e.u;
      const std::uint64_t bv = std::uint64_t{1} << e.v;
      adjacency_[e.u] |= bv;
      adjacency_[e.v] |= bu;
      edge_masks_.push_back(bu | bv);
    }
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::uint64_t universe_mask() const noexcept { return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1; }
  std::uint64_t edge_mask(std::size_t i) const noexcept { return edge_masks_[i]; }
  std::size_t edge_count() const noexcept { return edge_masks_.size(); }

  /// Bit-parallel flood fill from the lowest member.
  bool connected(std::uint64_t mask) const noexcept {
    if (mask == 0) return false;
    std::uint64_t seen = mask & (~mask + 1);
    std::uint64_t frontier = seen;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t bits = frontier; bits != 0; bits &= bits - 1) {
        next |= adjacency_[static_cast<std::size_t>(std::countr_zero(bits))];
      }
      next &= mask & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == mask;
  }

  /// Visits every connected mask with popcount >= min_size in [begin, end),
  /// in increasing mask value.
  template <class Visitor>
  void for_each_connected(std::size_t min_size, std::uint64_t begin, std::uint64_t end, Visitor&& visit) const {
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) < min_size) continue;
      if (connected(mask)) visit(mask);
    }
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> adjacency_;
  std::vector<std::uint64_t> edge_masks_;
};

/// Calls visit(mask) for every S with |S| >= min_size and G[S] connected,
/// in increasing bitmask order.
template <class Visitor>
void for_each_connected_subset(const WeightedGraph& g, std::size_t min_size, Visitor&& visit,
                               std::size_t cap = kDefaultEnumerationCap) {
  if (min_size < 2) throw Error(Errc::InvalidConfig, "min_size must be at least 2");
  check_enumeration_cap(g.vertex_count(), cap);
  const MaskGraph mg(g);
  mg.for_each_connected(min_size, 1, std::uint64_t{1} << g.vertex_count(), visit);
}

inline std::vector<VertexSubset> enumerate_connected_subsets(const WeightedGraph& g, std::size_t min_size,
                                                             std::size_t cap = kDefaultEnumerationCap) {
  std::vector<VertexSubset> out;
  for_each_connected_subset(
      g, min_size, [&](std::uint64_t mask) { out.push_back(VertexSubset::from_mask(mask, g.vertex_count())); }, cap);
  return out;
}

}  // namespace warb
