// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "warb/graph.hpp"
#include "warb/numeric.hpp"
#include "warb/resistance.hpp"

namespace warb {

/// c(e) = lambda with probability p, 1 otherwise, independently per edge.
struct TwoPointLaw {
  double lambda = 10.0;
  double p = 0.5;

  void validate() const {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw Error(Errc::InvalidLaw, "lambda must be positive and finite");
    if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::InvalidLaw, "p must lie in [0, 1]");
  }
};

enum class SweepMode { unit, random };

struct SweepConfig {
  std::size_t d_min = 4;
  std::size_t d_max = 10;
  std::size_t reps = 25;
  TwoPointLaw law;
  std::uint64_t seed = 0;
  SweepMode mode = SweepMode::random;
  /// Largest hypercube dimension the dense solver is asked to handle.
  std::size_t d_cap = 10;
  unsigned threads = 1;
};

struct SweepRecord {
  std::string family = "hypercube";
  std::size_t d = 0;
  std::size_t v = 0;
  std::size_t m = 0;
  std::size_t rep = 0;
  std::uint64_t seed = 0;
  double lambda = 1.0;
  double p = 0.0;
  double density = 0.0;
  double cs_bound = 0.0;
  double ratio = 0.0;
  std::int64_t runtime_ms = 0;
};

struct OverlayQuantities {
  double density = 0.0;
  double cs_bound = 0.0;
  double ratio = 0.0;
};

struct MedianRow {
  std::size_t d = 0;
  double lambda = 1.0;
  double p = 0.0;
  double median_ratio = 0.0;
};

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Per-record seed: splitmix64(splitmix64(splitmix64(master) ^ d) ^ rep).
/// Depends only on its own (d, rep), so widening the sweep leaves existing
/// records' draws untouched.
inline std::uint64_t derive_seed(std::uint64_t master, std::size_t d, std::size_t rep) noexcept {
  return splitmix64(splitmix64(splitmix64(master) ^ static_cast<std::uint64_t>(d)) ^ static_cast<std::uint64_t>(rep));
}

/// Draws one conductance per edge in normalized edge order from an
/// mt19937_64 stream; uniforms are the top 53 bits of each output, so the
/// draw is identical on every standard library.
inline WeightedGraph sample_conductances(const WeightedGraph& g, const TwoPointLaw& law, std::uint64_t seed) {
  law.validate();
  std::mt19937_64 engine(seed);
  std::vector<double> c(g.edge_count());
  for (auto& ci : c) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    ci = u < law.p ? law.lambda : 1.0;
  }
  return g.with_conductances(c);
}

/// D_c(G) and CSBound(H = G) on the whole vertex set. Unit-weight
/// hypercubes are edge-transitive, so a single grounded solve gives the
/// common per-edge resistance; any other input gets the full profile.
inline OverlayQuantities overlay_quantities(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || g.edge_count() == 0) throw Error(Errc::NoFeasibleSubgraph, "overlay needs at least one edge");
  OverlayQuantities q;
  const auto& fam = g.family();
  if (fam.has_value() && fam->kind == FamilyKind::hypercube) {
    if (!is_connected(g)) throw Error(Errc::GraphDisconnected, "overlay needs a connected graph");
    const double r = effective_resistance(g, g.edge(0).u, g.edge(0).v);
    const double m = static_cast<double>(g.edge_count());
    q.density = m / static_cast<double>(n - 1);
    q.cs_bound = std::sqrt((m / r) / static_cast<double>(n - 1));
  } else {
    const auto rep = bound_report(g, resistance_profile(g), VertexSubset::full(n));
    q.density = rep.density.value();
    q.cs_bound = rep.cs_bound;
  }
  q.ratio = q.cs_bound / q.density;
  return q;
}

inline void validate(const SweepConfig& cfg) {
  if (cfg.d_min < 1 || cfg.d_min > cfg.d_max) {
    throw Error(Errc::InvalidConfig, "need 1 <= d_min <= d_max, got d_min=" + std::to_string(cfg.d_min) +
                                         " d_max=" + std::to_string(cfg.d_max));
  }
  if (cfg.reps < 1) throw Error(Errc::InvalidConfig, "reps must be at least 1");
  if (cfg.d_max > cfg.d_cap) {
    throw Error(Errc::DimensionTooLarge,
                "d_max=" + std::to_string(cfg.d_max) + " exceeds solver cap " + std::to_string(cfg.d_cap));
  }
  if (cfg.mode == SweepMode::random) cfg.law.validate();
}

/// Records are ordered by (d, rep) regardless of thread count; runtime_ms
/// covers the overlay computation only.
inline std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
  validate(cfg);
  std::vector<WeightedGraph> cubes;
  for (std::size_t d = cfg.d_min; d <= cfg.d_max; ++d) cubes.push_back(generate_family(GraphFamily::hypercube(d)));

  const std::size_t dims = cfg.d_max - cfg.d_min + 1;
  std::vector<SweepRecord> records(dims * cfg.reps);
  auto compute = [&](std::size_t idx) {
    const std::size_t d = cfg.d_min + idx / cfg.reps;
    const std::size_t rep = idx % cfg.reps;
    const auto& cube = cubes[idx / cfg.reps];
    SweepRecord r;
    r.d = d;
    r.v = cube.vertex_count();
    r.m = cube.edge_count();
    r.rep = rep;
    r.seed = derive_seed(cfg.seed, d, rep);
    if (cfg.mode == SweepMode::random) {
      r.lambda = cfg.law.lambda;
      r.p = cfg.law.p;
    }
    const WeightedGraph g = cfg.mode == SweepMode::random ? sample_conductances(cube, cfg.law, r.seed) : cube;
    const auto start = std::chrono::steady_clock::now();
    const auto q = overlay_quantities(g);
    const auto stop = std::chrono::steady_clock::now();
    r.density = q.density;
    r.cs_bound = q.cs_bound;
    r.ratio = q.ratio;
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    records[idx] = std::move(r);
  };

  const unsigned workers = std::max(1U, std::min<unsigned>(cfg.threads, static_cast<unsigned>(records.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < records.size(); ++i) compute(i);
    return records;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < records.size(); i = next++) {
          try {
            compute(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

/// Lower median (order statistic ceil(k/2)) of the ratios for each d.
inline std::vector<MedianRow> median_ratios(std::span<const SweepRecord> records) {
  std::vector<SweepRecord> sorted(records.begin(), records.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const SweepRecord& a, const SweepRecord& b) { return std::tie(a.d, a.rep) < std::tie(b.d, b.rep); });
  std::vector<MedianRow> out;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    std::vector<double> ratios;
    while (j < sorted.size() && sorted[j].d == sorted[i].d) ratios.push_back(sorted[j++].ratio);
    std::sort(ratios.begin(), ratios.end());
    out.push_back({sorted[i].d, sorted[i].lambda, sorted[i].p, ratios[(ratios.size() + 1) / 2 - 1]});
    i = j;
  }
  return out;
}

namespace detail {

inline std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

template <class T>
T parse_field(const std::string& s, const char* name) {
  std::istringstream in(s);
  T value{};
  in >> value;
  if (in.fail() || !(in >> std::ws).eof()) {
    throw Error(Errc::ParseError, std::string("bad value '") + s + "' for column " + name);
  }
  return value;
}

}  // namespace detail

inline constexpr const char* kSweepCsvHeader = "family,d,v,m,rep,seed,lambda,p,density,cs_bound,ratio,runtime_ms";
inline constexpr const char* kMediansCsvHeader = "d,lambda,p,median_ratio";

/// Reals are written with 12 significant digits; rows sorted by (d, rep).
inline void write_csv(std::span<const SweepRecord> records, std::ostream& out) {
  std::vector<SweepRecord> sorted(records.begin(), records.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const SweepRecord& a, const SweepRecord& b) { return std::tie(a.d, a.rep) < std::tie(b.d, b.rep); });
  out << kSweepCsvHeader << '\n';
  for (const auto& r : sorted) {
    out << r.family << ',' << r.d << ',' << r.v << ',' << r.m << ',' << r.rep << ',' << r.seed << ','
        << detail::format_real(r.lambda) << ',' << detail::format_real(r.p) << ',' << detail::format_real(r.density) << ','
        << detail::format_real(r.cs_bound) << ',' << detail::format_real(r.ratio) << ',' << r.runtime_ms << '\n';
  }
}

inline void write_csv(std::span<const SweepRecord> records, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoFailure, "cannot open " + path + " for writing");
  write_csv(records, out);
  if (!out) throw Error(Errc::IoFailure, "write to " + path + " failed");
}

inline std::vector<SweepRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepCsvHeader) throw Error(Errc::ParseError, "missing or unexpected sweep CSV header");
  std::vector<SweepRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = detail::split_csv_line(line);
    if (f.size() != 12) throw Error(Errc::ParseError, "expected 12 columns, got " + std::to_string(f.size()));
    SweepRecord r;
    r.family = f[0];
    r.d = detail::parse_field<std::size_t>(f[1], "d");
    r.v = detail::parse_field<std::size_t>(f[2], "v");
    r.m = detail::parse_field<std::size_t>(f[3], "m");
    r.rep = detail::parse_field<std::size_t>(f[4], "rep");
    r.seed = detail::parse_field<std::uint64_t>(f[5], "seed");
    r.lambda = detail::parse_field<double>(f[6], "lambda");
    r.p = detail::parse_field<double>(f[7], "p");
    r.density = detail::parse_field<double>(f[8], "density");
    r.cs_bound = detail::parse_field<double>(f[9], "cs_bound");
    r.ratio = detail::parse_field<double>(f[10], "ratio");
    r.runtime_ms = detail::parse_field<std::int64_t>(f[11], "runtime_ms");
    out.push_back(std::move(r));
  }
  return out;
}

inline void write_medians_csv(std::span<const MedianRow> rows, std::ostream& out) {
  out << kMediansCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.d << ',' << detail::format_real(r.lambda) << ',' << detail::format_real(r.p) << ','
        << detail::format_real(r.median_ratio) << '\n';
  }
}

inline void write_medians_csv(std::span<const MedianRow> rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoFailure, "cannot open " + path + " for writing");
  write_medians_csv(rows, out);
  if (!out) throw Error(Errc::IoFailure, "write to " + path + " failed");
}

}  // namespace warb
