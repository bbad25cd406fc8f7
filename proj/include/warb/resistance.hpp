// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "warb/density.hpp"
#include "warb/enumerate.hpp"
#include "warb/graph.hpp"
#include "warb/numeric.hpp"

namespace warb {

inline constexpr double kResistanceTolerance = 1e-9;
inline constexpr double kResidualTolerance = 1e-8;

/// L = U^T W U assembled directly from the edge list: L[u][u] is the total
/// conductance at u and L[u][v] = -c(uv). The orientation of U cancels, so
/// no incidence matrix is formed.
struct LaplacianSystem {
  Eigen::MatrixXd matrix;
  Vertex ground = 0;

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(matrix.rows()); }

  /// The Laplacian with the ground row and column removed.
  Eigen::MatrixXd reduced() const {
    const Eigen::Index n = matrix.rows();
    const Eigen::Index gnd = static_cast<Eigen::Index>(ground);
    Eigen::MatrixXd out(n - 1, n - 1);
    for (Eigen::Index i = 0, ri = 0; i < n; ++i) {
      if (i == gnd) continue;
      for (Eigen::Index j = 0, rj = 0; j < n; ++j) {
        if (j == gnd) continue;
        out(ri, rj++) = matrix(i, j);
      }
      ++ri;
    }
    return out;
  }
};

inline LaplacianSystem build_laplacian(const WeightedGraph& g, Vertex ground = 0) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  if (ground >= g.vertex_count()) throw Error(Errc::VertexOutOfRange, "ground vertex " + std::to_string(ground));
  LaplacianSystem sys{Eigen::MatrixXd::Zero(n, n), ground};
  for (const auto& e : g.edges()) {
    sys.matrix(e.u, e.u) += e.c;
    sys.matrix(e.v, e.v) += e.c;
    sys.matrix(e.u, e.v) -= e.c;
    sys.matrix(e.v, e.u) -= e.c;
  }
  return sys;
}

/// Cholesky factorization of the grounded Laplacian of a connected graph.
/// Potentials are returned on the full vertex set with the ground held at 0.
/// Immutable after construction; concurrent solves are safe.
class GroundedSolver {
 public:
  explicit GroundedSolver(const WeightedGraph& g, Vertex ground = 0) : graph_(&g), ground_(ground) {
    if (ground >= g.vertex_count()) throw Error(Errc::VertexOutOfRange, "ground vertex " + std::to_string(ground));
    if (!is_connected(g)) throw Error(Errc::GraphDisconnected, "effective resistance needs a connected network");
    if (g.vertex_count() > 1) {
      llt_.compute(build_laplacian(g, ground).reduced());
      if (llt_.info() != Eigen::Success) throw Error(Errc::SingularSystem, "grounded Laplacian is not positive definite");
    }
  }

  Vertex ground() const noexcept { return ground_; }

  /// Solves L x = b for b = +1 at u, -1 at v (ground coordinate omitted).
  Eigen::VectorXd potentials(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto n = static_cast<Eigen::Index>(graph_->vertex_count());
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n - 1);
    if (u != ground_) b(reduced_index(u)) += 1.0;
    if (v != ground_) b(reduced_index(v)) -= 1.0;
    const Eigen::VectorXd y = llt_.solve(b);
    Eigen::VectorXd x = expand(y);
    check_residual(x, u, v);
    return x;
  }

  double effective_resistance(Vertex u, Vertex v) const {
    if (u == v) {
      check_vertex(u);
      return 0.0;
    }
    const auto x = potentials(u, v);
    return std::fabs(x(u) - x(v));
  }

  /// Inverse of the grounded Laplacian, computed with one multi-right-hand
  /// side solve against the identity. Column j is the potential for a unit
  /// injection at the j-th non-ground vertex.
  Eigen::MatrixXd grounded_inverse() const {
    const auto k = static_cast<Eigen::Index>(graph_->vertex_count()) - 1;
    return llt_.solve(Eigen::MatrixXd::Identity(k, k));
  }

  /// ||L_gr x - b|| / ||b|| for the unit (u, v) injection, using the sparse
  /// edge list rather than the dense matrix.
  double relative_residual(const Eigen::VectorXd& x, Vertex u, Vertex v) const {
    const std::size_t n = graph_->vertex_count();
    std::vector<double> r(n, 0.0);
    for (const auto& e : graph_->edges()) {
      const double flow = e.c * (x(e.u) - x(e.v));
      r[e.u] += flow;
      r[e.v] -= flow;
    }
    r[u] -= 1.0;
    r[v] += 1.0;
    r[ground_] = 0.0;
    double num = 0.0;
    for (double ri : r) num += ri * ri;
    const double bnorm = (u == ground_ || v == ground_) ? 1.0 : std::sqrt(2.0);
    return std::sqrt(num) / bnorm;
  }

  void check_residual(const Eigen::VectorXd& x, Vertex u, Vertex v) const {
    const double res = relative_residual(x, u, v);
    if (!(res <= kResidualTolerance)) {
      throw Error(Errc::SingularSystem, "grounded solve residual " + std::to_string(res) + " exceeds tolerance");
    }
  }

 private:
  void check_vertex(Vertex v) const {
    if (v >= graph_->vertex_count()) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
  }

  Eigen::Index reduced_index(Vertex v) const noexcept {
    return static_cast<Eigen::Index>(v < ground_ ? v : v - 1);
  }

  Eigen::VectorXd expand(const Eigen::VectorXd& y) const {
    const auto n = static_cast<Eigen::Index>(graph_->vertex_count());
    Eigen::VectorXd x(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      x(i) = i == static_cast<Eigen::Index>(ground_) ? 0.0 : y(reduced_index(static_cast<Vertex>(i)));
    }
    return x;
  }

  const WeightedGraph* graph_;
  Vertex ground_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
};

inline double effective_resistance(const WeightedGraph& g, Vertex u, Vertex v, Vertex ground = 0) {
  return GroundedSolver(g, ground).effective_resistance(u, v);
}

/// Ambient effective resistance of every edge, indexed like g.edges().
struct ResistanceProfile {
  std::vector<double> resistance;
  Vertex ground = 0;
  double max_relative_residual = 0.0;
};

/// One factorization, one multi-RHS solve: for edge (u, v) the potential is
/// the difference of the u and v columns of the grounded inverse, so
/// R_eff = |x_u - x_v|. Each per-edge potential is residual-checked.
inline ResistanceProfile resistance_profile(const WeightedGraph& g, Vertex ground = 0) {
  const GroundedSolver solver(g, ground);
  ResistanceProfile profile;
  profile.ground = ground;
  profile.resistance.reserve(g.edge_count());
  if (g.edge_count() == 0) return profile;

  const Eigen::MatrixXd inv = solver.grounded_inverse();
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  auto column = [&](Vertex w, Eigen::VectorXd& out) {
    // Full-length potential for a unit injection at w (zero when w is ground).
    for (Eigen::Index i = 0, ri = 0; i < n; ++i) {
      if (i == static_cast<Eigen::Index>(ground)) {
        out(i) = 0.0;
        continue;
      }
      out(i) = w == ground ? 0.0 : inv(ri, static_cast<Eigen::Index>(w < ground ? w : w - 1));
      ++ri;
    }
  };
  Eigen::VectorXd xu(n), xv(n);
  for (const auto& e : g.edges()) {
    column(e.u, xu);
    column(e.v, xv);
    const Eigen::VectorXd x = xu - xv;
    const double res = solver.relative_residual(x, e.u, e.v);
    if (!(res <= kResidualTolerance)) {
      throw Error(Errc::SingularSystem, "grounded solve residual " + std::to_string(res) + " exceeds tolerance");
    }
    profile.max_relative_residual = std::max(profile.max_relative_residual, res);
    profile.resistance.push_back(std::fabs(x(e.u) - x(e.v)));
  }
  return profile;
}

/// Sum over edges of c(e) R_eff(e); equals n - 1 on a connected network.
inline double foster_sum(const WeightedGraph& g, const ResistanceProfile& profile) {
  ExactSum sum;
  for (std::size_t i = 0; i < g.edge_count(); ++i) sum.add(g.edge(i).c * profile.resistance[i]);
  return sum.value();
}

inline double foster_check(const WeightedGraph& g) { return foster_sum(g, resistance_profile(g)); }

/// Local Foster and Cauchy-Schwarz quantities for one connected subset H:
///   foster_lhs = sum_{e in E(H)} c(e) R_eff^(G)(e)   (at most |V(H)| - 1)
///   cs_bound   = sqrt( sum_{e in E(H)} c(e) / R_eff^(G)(e) / (|V(H)| - 1) )
struct BoundReport {
  VertexSubset subset;
  DensityValue density;
  double foster_lhs = 0.0;
  double cs_bound = 0.0;
  double slack = 0.0;  // |V(H)| - 1 - foster_lhs
};

inline BoundReport bound_report(const WeightedGraph& g, const ResistanceProfile& profile, const VertexSubset& s) {
  BoundReport rep{s, weighted_density(g, s)};
  ExactSum lhs;
  ExactSum radicand;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    if (!(s.contains(e.u) && s.contains(e.v))) continue;
    lhs.add(e.c * profile.resistance[i]);
    radicand.add(e.c / profile.resistance[i]);
  }
  const auto denom = static_cast<double>(rep.density.denominator);
  rep.foster_lhs = lhs.value();
  rep.cs_bound = std::sqrt(radicand.value() / denom);
  rep.slack = denom - rep.foster_lhs;
  return rep;
}

inline BoundReport local_foster(const WeightedGraph& g, const VertexSubset& s) {
  check_subset_range(g, s);
  if (s.size() < 2) throw Error(Errc::SubsetTooSmall, "local Foster needs at least two vertices");
  if (!is_connected(g, s)) throw Error(Errc::SubsetDisconnected, "subset " + s.to_string() + " is not connected");
  return bound_report(g, resistance_profile(g), s);
}

inline BoundReport cs_bound(const WeightedGraph& g, const VertexSubset& s) { return local_foster(g, s); }

/// Maximum of the CS bound over all connected induced subsets (ties: fewer
/// vertices, then smaller mask). Dominates A_c(G).
inline BoundReport cs_bound_max(const WeightedGraph& g, std::size_t cap = kDefaultEnumerationCap) {
  check_enumeration_cap(g.vertex_count(), cap);
  if (g.edge_count() == 0) throw Error(Errc::NoFeasibleSubgraph, "graph has no edges");
  const auto profile = resistance_profile(g);
  const MaskGraph mg(g);
  std::vector<double> ratio(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) ratio[i] = g.edge(i).c / profile.resistance[i];

  double best_value = -1.0;
  std::uint64_t best_mask = 0;
  ExactSum radicand;
  for_each_connected_subset(
      g, 2,
      [&](std::uint64_t mask) {
        radicand.clear();
        for (std::size_t i = 0; i < ratio.size(); ++i) {
          if ((mask & mg.edge_mask(i)) == mg.edge_mask(i)) radicand.add(ratio[i]);
        }
        const double value = std::sqrt(radicand.value() / static_cast<double>(std::popcount(mask) - 1));
        const bool better = value > best_value ||
                            (value == best_value && (std::popcount(mask) < std::popcount(best_mask) ||
                                                     (std::popcount(mask) == std::popcount(best_mask) && mask < best_mask)));
        if (better) {
          best_value = value;
          best_mask = mask;
        }
      },
      cap);
  return bound_report(g, profile, VertexSubset::from_mask(best_mask, g.vertex_count()));
}

/// Rayleigh monotonicity on H = G[s]: every edge of H has ambient resistance
/// no larger than its resistance inside H alone.
inline bool rayleigh_check(const WeightedGraph& g, const VertexSubset& s) {
  check_subset_range(g, s);
  if (s.size() < 2) throw Error(Errc::SubsetTooSmall, "Rayleigh check needs at least two vertices");
  if (!is_connected(g, s)) throw Error(Errc::SubsetDisconnected, "subset " + s.to_string() + " is not connected");
  const auto ambient = resistance_profile(g);
  const auto h = induced_subgraph(g, s);
  const auto local = resistance_profile(h);
  // Induced relabeling is monotone, so H's edges appear in the same relative order.
  std::size_t j = 0;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    if (!(s.contains(e.u) && s.contains(e.v))) continue;
    if (ambient.resistance[i] > local.resistance[j] + kResistanceTolerance) return false;
    ++j;
  }
  return true;
}

}  // namespace warb
