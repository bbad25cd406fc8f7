// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <thread>
#include <vector>

#include "warb/enumerate.hpp"
#include "warb/graph.hpp"
#include "warb/numeric.hpp"

namespace warb {

/// D_c(H) kept as the pair (sum of conductances, |V(H)| - 1) so that
/// comparisons between candidates are exact.
struct DensityValue {
  double numerator = 0.0;
  std::size_t denominator = 1;

  double value() const noexcept { return numerator / static_cast<double>(denominator); }
};

inline std::strong_ordering compare_density(const DensityValue& a, const DensityValue& b) noexcept {
  return compare_ratio(a.numerator, static_cast<double>(a.denominator), b.numerator, static_cast<double>(b.denominator));
}

enum class ArboricityMethod { brute_force, closed_form_tree, closed_form_family };

constexpr std::string_view to_string(ArboricityMethod m) noexcept {
  switch (m) {
    case ArboricityMethod::brute_force: return "brute_force";
    case ArboricityMethod::closed_form_tree: return "closed_form_tree";
    case ArboricityMethod::closed_form_family: return "closed_form_family";
  }
  return "unknown";
}

struct ArboricityResult {
  DensityValue density;
  VertexSubset argmax;
  ArboricityMethod method = ArboricityMethod::brute_force;

  double value() const noexcept { return density.value(); }
};

struct ArboricityOptions {
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  /// Use closed forms for unit-weight generated families and for trees.
  bool allow_closed_form = true;
  /// Worker threads for the brute-force scan; the result is independent of it.
  unsigned threads = 1;
};

inline DensityValue weighted_density(const WeightedGraph& g, const VertexSubset& s) {
  check_subset_range(g, s);
  const std::size_t k = s.size();
  if (k < 2) throw Error(Errc::SubsetTooSmall, "density needs at least two vertices, got " + std::to_string(k));
  if (!is_connected(g, s)) throw Error(Errc::SubsetDisconnected, "subset " + s.to_string() + " is not connected");
  ExactSum sum;
  for (const auto& e : g.edges()) {
    if (s.contains(e.u) && s.contains(e.v)) sum.add(e.c);
  }
  return {sum.value(), k - 1};
}

struct GlobalBounds {
  double max_conductance = 0.0;    // c_max, a lower bound on A_c
  double total_conductance = 0.0;  // C(G), an upper bound on A_c
};

inline GlobalBounds global_bounds(const WeightedGraph& g) {
  if (g.edge_count() == 0) throw Error(Errc::NoEdges, "global bounds need at least one edge");
  GlobalBounds b;
  ExactSum sum;
  for (const auto& e : g.edges()) {
    b.max_conductance = std::max(b.max_conductance, e.c);
    sum.add(e.c);
  }
  b.total_conductance = sum.value();
  return b;
}

namespace detail {

struct Candidate {
  DensityValue density;
  std::uint64_t mask = 0;
  std::size_t size = 0;
  bool valid = false;
};

/// Strict preference: higher density, then fewer vertices, then smaller mask.
inline bool preferred(const Candidate& a, const Candidate& b) noexcept {
  if (!a.valid) return false;
  if (!b.valid) return true;
  if (auto c = compare_density(a.density, b.density); c != 0) return c > 0;
  if (a.size != b.size) return a.size < b.size;
  return a.mask < b.mask;
}

/// Brute-force maximization of D_c over connected masks accepted by `keep`.
/// The search range is split into contiguous chunks, one per worker; since
/// `preferred` is a total order the reduction does not depend on the split.
template <class Keep>
Candidate best_connected_density(const WeightedGraph& g, std::size_t cap, unsigned threads, Keep keep) {
  check_enumeration_cap(g.vertex_count(), cap);
  const MaskGraph mg(g);
  const auto cs = g.conductances();
  const std::uint64_t end = std::uint64_t{1} << g.vertex_count();

  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    Candidate best;
    ExactSum sum;
    mg.for_each_connected(2, lo, hi, [&](std::uint64_t mask) {
      if (!keep(mask)) return;
      sum.clear();
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if ((mask & mg.edge_mask(i)) == mg.edge_mask(i)) sum.add(cs[i]);
      }
      const std::size_t k = static_cast<std::size_t>(std::popcount(mask));
      Candidate cand{{sum.value(), k - 1}, mask, k, true};
      if (preferred(cand, best)) best = cand;
    });
    return best;
  };

  const std::uint64_t workers = std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(1, end / 4096));
  if (workers <= 1) return scan(1, end);

  std::vector<Candidate> partial(workers);
  {
    std::vector<std::jthread> pool;
    const std::uint64_t step = end / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t lo = w == 0 ? 1 : w * step;
      const std::uint64_t hi = w + 1 == workers ? end : (w + 1) * step;
      pool.emplace_back([&, w, lo, hi] { partial[w] = scan(lo, hi); });
    }
  }
  Candidate best;
  for (const auto& c : partial) {
    if (preferred(c, best)) best = c;
  }
  return best;
}

}  // namespace detail

/// Exact A_c for unit-weight named families and for weighted trees.
///
/// Trees: every subtree has D_c equal to the mean of its edge conductances,
/// so the maximum is the largest single edge. Unit non-tree families attain
/// the maximum on the whole graph, giving |E| / (|V| - 1): n/(n-1) for C_n,
/// n/2 for K_n, ab/(a+b-1) for K_{a,b}, d 2^{d-1} / (2^d - 1) for Q_d.
/// `conductances` (normalized edge order) may be empty for unit weights;
/// non-unit weights are only accepted for trees.
inline DensityValue arboricity_closed_form(const GraphFamily& family, std::span<const double> conductances = {}) {
  const auto [n, m] = family_size(family);
  if (m == 0) throw Error(Errc::NoFeasibleSubgraph, "family instance has no edges");
  bool unit = true;
  double c_max = 1.0;
  if (!conductances.empty()) {
    if (conductances.size() != m) {
      throw Error(Errc::InvalidConfig, "expected " + std::to_string(m) + " conductances, got " + std::to_string(conductances.size()));
    }
    c_max = 0.0;
    for (double c : conductances) {
      if (!(c > 0.0) || !std::isfinite(c)) throw Error(Errc::NonPositiveConductance, "closed form needs positive conductances");
      unit = unit && c == 1.0;
      c_max = std::max(c_max, c);
    }
  }
  if (family.is_tree()) return {c_max, 1};
  if (!unit) {
    throw Error(Errc::UnsupportedClosedForm,
                "no closed form for weighted " + std::string(to_string(family.kind)) + " graphs");
  }
  return {static_cast<double>(m), n - 1};
}

namespace detail {

/// Heaviest edge as a two-vertex subset, ties by subset order.
inline ArboricityResult heaviest_edge(const WeightedGraph& g, ArboricityMethod method) {
  const Edge* best = nullptr;
  VertexSubset best_set;
  for (const auto& e : g.edges()) {
    VertexSubset s(g.vertex_count(), {e.u, e.v});
    if (best == nullptr || e.c > best->c || (e.c == best->c && s < best_set)) {
      best = &e;
      best_set = std::move(s);
    }
  }
  return {{best->c, 1}, std::move(best_set), method};
}

}  // namespace detail

/// A_c(G): the maximum of D_c(H) over connected subgraphs H with >= 2 vertices.
///
/// Only connected *induced* subgraphs are enumerated. This loses nothing:
/// for a fixed vertex set every conductance is positive, so adding any
/// available internal edge raises the numerator without changing |V(H)| - 1,
/// and the induced subgraph dominates every spanning subgraph of it.
///
/// Dispatch (when allowed): unit-weight generated families and trees use the
/// closed forms; everything else is brute force over connected subsets.
inline ArboricityResult arboricity(const WeightedGraph& g, const ArboricityOptions& opts = {}) {
  if (g.edge_count() == 0) throw Error(Errc::NoFeasibleSubgraph, "graph has no edges");
  if (opts.allow_closed_form) {
    if (const auto& fam = g.family(); fam.has_value()) {
      if (fam->is_tree()) return detail::heaviest_edge(g, ArboricityMethod::closed_form_tree);
      return {arboricity_closed_form(*fam), VertexSubset::full(g.vertex_count()), ArboricityMethod::closed_form_family};
    }
    if (is_tree(g)) return detail::heaviest_edge(g, ArboricityMethod::closed_form_tree);
  }
  const auto best = detail::best_connected_density(g, opts.enumeration_cap, opts.threads, [](std::uint64_t) { return true; });
  return {best.density, VertexSubset::from_mask(best.mask, g.vertex_count()), ArboricityMethod::brute_force};
}

/// Local arboricity at v with its maximizing subset (same tie-break as arboricity).
inline ArboricityResult local_arboricity_result(const WeightedGraph& g, Vertex v, const ArboricityOptions& opts = {}) {
  if (v >= g.vertex_count()) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
  if (g.degree(v) == 0) throw Error(Errc::IsolatedVertex, "vertex " + std::to_string(v) + " has no incident edge");
  check_enumeration_cap(g.vertex_count(), opts.enumeration_cap);
  const std::uint64_t bit = std::uint64_t{1} << v;
  const auto best = detail::best_connected_density(g, opts.enumeration_cap, opts.threads,
                                                   [bit](std::uint64_t mask) { return (mask & bit) != 0; });
  return {best.density, VertexSubset::from_mask(best.mask, g.vertex_count()), ArboricityMethod::brute_force};
}

inline DensityValue local_arboricity(const WeightedGraph& g, Vertex v, const ArboricityOptions& opts = {}) {
  return local_arboricity_result(g, v, opts).density;
}

/// Nash-Williams integer arboricity for unit weights is the ceiling of A_1.
inline long long arboricity_ceiling(const DensityValue& d) {
  const double q = d.value();
  auto c = static_cast<long long>(std::ceil(q));
  // Guard against q landing just above an integer that the exact ratio equals.
  if (compare_ratio(d.numerator, static_cast<double>(d.denominator), static_cast<double>(c - 1), 1.0) <= 0) --c;
  return c;
}

}  // namespace warb
