// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "warb/algebra.hpp"

using namespace warb;

namespace {

const ArboricityOptions kBrute{.allow_closed_form = false};

double union_value(std::vector<WeightedGraph> parts) { return arboricity_of_union(parts, kBrute).value(); }

double direct_value(std::vector<WeightedGraph> parts) {
  return arboricity(disjoint_union(parts).first, kBrute).value();
}

WeightedGraph random_part(std::mt19937_64& rng) {
  const std::size_t n = 1 + rng() % 5;
  if (rng() % 6 == 0) return build_graph(n, {});
  return oracle::random_connected(rng, n, 0.4);
}

}  // namespace

TEST(DisjointUnion, Examples) {
  const std::vector<WeightedGraph> parts{fixtures::heavy_triangle(), fixtures::light_path()};
  const auto [g, rec] = disjoint_union(parts);
  EXPECT_EQ(g.vertex_count(), 6u);
  EXPECT_EQ(g.edge_count(), 5u);
  EXPECT_EQ(rec.offsets, (std::vector<Vertex>{0, 3}));
  EXPECT_TRUE(g.find_edge(3, 4).has_value());
  EXPECT_FALSE(is_connected(g));
  EXPECT_EQ(arboricity(g, kBrute).value(), 3.0);
  EXPECT_EQ(union_value(parts), 3.0);

  const std::vector<WeightedGraph> k3k4{generate_family(GraphFamily::complete(3)),
                                        generate_family(GraphFamily::complete(4))};
  EXPECT_EQ(union_value(k3k4), 2.0);
  EXPECT_EQ(direct_value(k3k4), 2.0);

  const std::vector<WeightedGraph> triangles(3, generate_family(GraphFamily::complete(3)));
  const auto [t, trec] = disjoint_union(triangles);
  EXPECT_EQ(connected_components(t).size(), 3u);
  EXPECT_EQ(arboricity(t, kBrute).value(), 1.5);
}

TEST(DisjointUnion, Errors) {
  EXPECT_THROW(disjoint_union({}), Error);
  const std::vector<WeightedGraph> empty{build_graph(3, {}), build_graph(1, {})};
  try {
    arboricity_of_union(empty);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoFeasibleSubgraph);
  }
}

TEST(ConnectedComponents, OrderedBySmallestMember) {
  const auto g = build_graph(6, {{0, 4, 1.0}, {1, 2, 1.0}, {2, 5, 1.0}});
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], VertexSubset(6, {0, 4}));
  EXPECT_EQ(comps[1], VertexSubset(6, {1, 2, 5}));
  EXPECT_EQ(comps[2], VertexSubset(6, {3}));
}

TEST(AlgebraProperties, MaxLawMatchesDirectComputation) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<WeightedGraph> parts;
    const std::size_t k = 1 + rng() % 4;
    for (std::size_t i = 0; i < k; ++i) parts.push_back(random_part(rng));
    parts.push_back(oracle::random_connected(rng, 2 + rng() % 3, 0.5));
    EXPECT_EQ(union_value(parts), direct_value(parts)) << "trial " << trial;
  }
}

TEST(AlgebraProperties, CommutativeAssociativeIdempotent) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = oracle::random_connected(rng, 2 + rng() % 4, 0.5);
    const auto b = oracle::random_connected(rng, 2 + rng() % 4, 0.5);
    const auto c = oracle::random_connected(rng, 2 + rng() % 4, 0.5);
    EXPECT_EQ(direct_value({a, b}), direct_value({b, a}));
    const auto ab = disjoint_union(std::vector<WeightedGraph>{a, b}).first;
    const auto bc = disjoint_union(std::vector<WeightedGraph>{b, c}).first;
    EXPECT_EQ(direct_value({ab, c}), direct_value({a, bc}));
    EXPECT_EQ(direct_value({a, a}), arboricity(a, kBrute).value());
  }
}

TEST(AlgebraProperties, EdgelessGraphIsIdentity) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = oracle::random_connected(rng, 2 + rng() % 5, 0.5);
    const auto e = build_graph(1 + rng() % 3, {});
    EXPECT_EQ(direct_value({a, e}), arboricity(a, kBrute).value());
    EXPECT_EQ(union_value({e, a}), arboricity(a, kBrute).value());
  }
}

TEST(AlgebraProperties, ComponentsRecoverTheValue) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_graph(rng, 3 + rng() % 8, 0.25);
    if (g.edge_count() == 0) continue;
    std::vector<WeightedGraph> pieces;
    for (const auto& comp : connected_components(g)) pieces.push_back(induced_subgraph(g, comp));
    EXPECT_EQ(union_value(pieces), arboricity(g, kBrute).value());
  }
}
