// SPDX-License-Identifier: Apache-2.0
//
// warb: command-line front end for the weighted arboricity library.
//
// Exit codes: 0 success, 1 a verified inequality or identity failed,
// 2 input or flag error, 3 capacity exceeded (enumeration cap, dimension cap).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "warb/warb.hpp"

namespace {

using namespace warb;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

constexpr double kCheckTolerance = 1e-9;

using Cell = std::variant<std::string, double, long long>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c, int digits) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, std::get<double>(c));
  return buf;
}

void print_table(const Table& t, const std::string& format) {
  if (format == "csv") {
    for (std::size_t i = 0; i < t.columns.size(); ++i) std::cout << (i ? "," : "") << t.columns[i];
    std::cout << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << cell_text(row[i], 17);
      std::cout << '\n';
    }
    return;
  }
  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : t.rows) {
      nlohmann::json obj;
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::visit([&](const auto& v) { obj[t.columns[i]] = v; }, row[i]);
      }
      out.push_back(std::move(obj));
    }
    std::cout << out.dump(2) << '\n';
    return;
  }
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], cell_text(row[i], 12).size());
  auto line = [&](auto&& text_of) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      std::cout << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << text_of(i);
    }
    std::cout << '\n';
  };
  line([&](std::size_t i) { return t.columns[i]; });
  for (const auto& row : t.rows) line([&](std::size_t i) { return cell_text(row[i], 12); });
}

// Subsets are rendered space-separated so they survive as one CSV field.
std::string subset_text(const VertexSubset& s) {
  std::string out;
  for (Vertex v : s.members()) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::istringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    std::size_t pos = 0;
    long long v = -1;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != tok.size() || v < 0) throw Error(Errc::ParseError, "bad vertex '" + tok + "'");
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

struct GlobalFlags {
  std::string format = "table";
  std::size_t cap = kDefaultEnumerationCap;
  unsigned threads = 1;
};

WeightedGraph load_graph(const std::string& arg) {
  if (is_family_spec(arg)) return generate_family(parse_family_spec(arg));
  return read_graph_file(arg);
}

VertexSubset subset_or_full(const WeightedGraph& g, const std::string& text) {
  if (text.empty()) return VertexSubset::full(g.vertex_count());
  const auto members = parse_vertex_list(text);
  for (Vertex v : members) {
    if (v >= g.vertex_count()) throw Error(Errc::VertexOutOfRange, "subset vertex " + std::to_string(v));
  }
  return VertexSubset::from_members(g.vertex_count(), members);
}

int cmd_compute(const GlobalFlags& flags, const std::string& input, bool closed_form) {
  Table t{{"value", "numerator", "denominator", "argmax", "method", "c_max", "total_conductance", "ceil"}, {}};
  if (is_family_spec(input)) {
    const auto fam = parse_family_spec(input);
    const auto [n, m] = family_size(fam);
    if (closed_form) {
      // Closed forms need no graph, so arbitrarily large families are fine here.
      const auto d = arboricity_closed_form(fam);
      const std::string argmax = fam.is_tree() ? "0 1" : "all";
      t.rows.push_back({d.value(), d.numerator, static_cast<long long>(d.denominator), argmax,
                        std::string(to_string(fam.is_tree() ? ArboricityMethod::closed_form_tree
                                                            : ArboricityMethod::closed_form_family)),
                        1.0, static_cast<double>(m), arboricity_ceiling(d)});
      print_table(t, flags.format);
      return kExitOk;
    }
    check_enumeration_cap(n, flags.cap);
  }
  const auto g = load_graph(input);
  const auto res = arboricity(g, {flags.cap, closed_form, flags.threads});
  const auto gb = global_bounds(g);
  t.rows.push_back({res.value(), res.density.numerator, static_cast<long long>(res.density.denominator),
                    subset_text(res.argmax), std::string(to_string(res.method)), gb.max_conductance, gb.total_conductance,
                    arboricity_ceiling(res.density)});
  print_table(t, flags.format);
  if (res.value() + kCheckTolerance < gb.max_conductance || res.value() > gb.total_conductance + kCheckTolerance) {
    std::cerr << "global bounds violated\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_local(const GlobalFlags& flags, const std::string& input, int vertex) {
  const auto g = load_graph(input);
  const ArboricityOptions opts{flags.cap, false, flags.threads};
  Table t{{"vertex", "value", "argmax"}, {}};
  if (vertex >= 0) {
    const auto r = local_arboricity_result(g, static_cast<Vertex>(vertex), opts);
    t.rows.push_back({static_cast<long long>(vertex), r.value(), subset_text(r.argmax)});
    print_table(t, flags.format);
    return kExitOk;
  }
  DensityValue best;
  bool any = false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) continue;
    const auto r = local_arboricity_result(g, v, opts);
    t.rows.push_back({static_cast<long long>(v), r.value(), subset_text(r.argmax)});
    if (!any || compare_density(r.density, best) > 0) best = r.density;
    any = true;
  }
  print_table(t, flags.format);
  if (any && compare_density(best, arboricity(g, opts).density) != 0) {
    std::cerr << "max of local arboricity differs from arboricity\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_bound(const GlobalFlags& flags, const std::string& input, const std::string& subset, bool maximize) {
  const auto g = load_graph(input);
  Table t{{"kind", "subset", "density", "foster_lhs", "slack", "cs_bound"}, {}};
  auto add = [&](const std::string& kind, const BoundReport& r) {
    t.rows.push_back({kind, subset_text(r.subset), r.density.value(), r.foster_lhs, r.slack, r.cs_bound});
  };
  const auto rep = local_foster(g, subset_or_full(g, subset));
  add("subset", rep);
  bool ok = rep.slack >= -kCheckTolerance && rep.density.value() <= rep.cs_bound + kCheckTolerance;
  if (maximize) {
    const auto best = cs_bound_max(g, flags.cap);
    add("cs_max", best);
    const auto a = arboricity(g, {flags.cap, true, flags.threads});
    t.rows.push_back({std::string("arboricity"), subset_text(a.argmax), a.value(), 0.0, 0.0, best.cs_bound});
    ok = ok && a.value() <= best.cs_bound + kCheckTolerance;
  }
  print_table(t, flags.format);
  if (!ok) {
    std::cerr << "local Foster / Cauchy-Schwarz bound violated\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_resist(const GlobalFlags& flags, const std::string& input, const std::string& pair, unsigned ground) {
  const auto g = load_graph(input);
  Table t{{"u", "v", "c", "r_eff"}, {}};
  if (!pair.empty()) {
    const auto uv = parse_vertex_list(pair);
    if (uv.size() != 2) throw Error(Errc::ParseError, "--pair expects 'u,v'");
    const double r = effective_resistance(g, uv[0], uv[1], ground);
    const auto e = g.find_edge(uv[0], uv[1]);
    t.rows.push_back({static_cast<long long>(uv[0]), static_cast<long long>(uv[1]),
                      e ? Cell{g.edge(*e).c} : Cell{std::string("")}, r});
  } else {
    const auto profile = resistance_profile(g, ground);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const auto& e = g.edge(i);
      t.rows.push_back({static_cast<long long>(e.u), static_cast<long long>(e.v), e.c, profile.resistance[i]});
    }
  }
  print_table(t, flags.format);
  return kExitOk;
}

int cmd_foster(const GlobalFlags& flags, const std::string& input, const std::string& subset) {
  const auto g = load_graph(input);
  if (!subset.empty()) {
    const auto rep = local_foster(g, subset_or_full(g, subset));
    Table t{{"subset", "sum", "bound", "slack"}, {}};
    t.rows.push_back({subset_text(rep.subset), rep.foster_lhs, static_cast<double>(rep.density.denominator), rep.slack});
    print_table(t, flags.format);
    return rep.slack >= -kCheckTolerance ? kExitOk : kExitViolation;
  }
  const double sum = foster_check(g);
  const double expected = static_cast<double>(g.vertex_count() - 1);
  Table t{{"sum", "n_minus_1", "deviation"}, {}};
  t.rows.push_back({sum, expected, sum - expected});
  print_table(t, flags.format);
  return std::fabs(sum - expected) <= kCheckTolerance * static_cast<double>(g.vertex_count()) ? kExitOk : kExitViolation;
}

int cmd_union(const GlobalFlags& flags, const std::vector<std::string>& inputs) {
  std::vector<WeightedGraph> parts;
  for (const auto& in : inputs) parts.push_back(load_graph(in));
  const ArboricityOptions opts{flags.cap, true, flags.threads};
  Table t{{"part", "n", "m", "value"}, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Cell value = parts[i].edge_count() ? Cell{arboricity(parts[i], opts).value()} : Cell{std::string("")};
    t.rows.push_back({inputs[i], static_cast<long long>(parts[i].vertex_count()),
                      static_cast<long long>(parts[i].edge_count()), value});
  }
  const auto [combined, record] = disjoint_union(parts);
  const auto max_law = arboricity_of_union(parts, opts);
  t.rows.push_back({std::string("max"), static_cast<long long>(combined.vertex_count()),
                    static_cast<long long>(combined.edge_count()), max_law.value()});
  bool ok = true;
  if (combined.vertex_count() <= flags.cap) {
    const auto direct = arboricity(combined, {flags.cap, false, flags.threads});
    t.rows.push_back({std::string("combined"), static_cast<long long>(combined.vertex_count()),
                      static_cast<long long>(combined.edge_count()), direct.value()});
    ok = compare_density(direct.density, max_law) == 0;
  }
  print_table(t, flags.format);
  if (!ok) {
    std::cerr << "union arboricity differs from the max over parts\n";
    return kExitViolation;
  }
  return kExitOk;
}

struct SweepFlags {
  std::string dist = "two_point";
  std::string mode = "random";
  double lambda = 10.0;
  double p = 0.5;
  std::size_t d_min = 4;
  std::size_t d_max = 10;
  std::size_t reps = 25;
  std::size_t d_cap = 10;
  std::uint64_t seed = 0;
  std::string out = "records.csv";
  std::string medians;
};

int cmd_sweep(const GlobalFlags& flags, const SweepFlags& sf) {
  if (sf.dist != "two_point") throw Error(Errc::InvalidLaw, "only --dist two_point is supported");
  SweepConfig cfg;
  cfg.d_min = sf.d_min;
  cfg.d_max = sf.d_max;
  cfg.reps = sf.reps;
  cfg.law = {sf.lambda, sf.p};
  cfg.seed = sf.seed;
  cfg.mode = sf.mode == "unit" ? SweepMode::unit : SweepMode::random;
  cfg.d_cap = sf.d_cap;
  cfg.threads = flags.threads;
  const auto records = run_sweep(cfg);
  write_csv(records, sf.out);
  const auto medians = median_ratios(records);
  const std::string medians_path =
      sf.medians.empty() ? (std::filesystem::path(sf.out).parent_path() / "medians.csv").string() : sf.medians;
  write_medians_csv(medians, medians_path);

  Table t{{"d", "lambda", "p", "median_ratio"}, {}};
  for (const auto& m : medians) t.rows.push_back({static_cast<long long>(m.d), m.lambda, m.p, m.median_ratio});
  print_table(t, flags.format);
  for (const auto& r : records) {
    if (!(r.ratio >= 1.0 - kCheckTolerance)) {
      std::cerr << "tightness ratio below 1 at d=" << r.d << " rep=" << r.rep << '\n';
      return kExitViolation;
    }
  }
  return kExitOk;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::GraphTooLargeForEnumeration:
    case Errc::DimensionTooLarge:
      return kExitCapacity;
    default:
      return kExitInput;
  }
}

std::size_t default_cap() {
  if (const char* env = std::getenv("WARB_ENUM_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed WARB_ENUM_CAP='" << env << "'\n";
    }
  }
  return kDefaultEnumerationCap;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "warb: conductance-weighted arboricity, effective resistances and local Foster bounds.\n"
      "Graph arguments are files (text 'n m' + 'u v c' lines, or JSON {n, edges:[{u,v,c}]})\n"
      "or family specs 'family:<kind>:<params>' with kind in path, star, cycle, complete,\n"
      "complete_bipartite (params a,b), hypercube; e.g. family:complete:7, family:hypercube:5."};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  flags.cap = default_cap();
  flags.threads = std::max(1U, std::thread::hardware_concurrency());
  app.add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--exact-cap", flags.cap, "Largest vertex count for brute-force enumeration (env WARB_ENUM_CAP)");
  app.add_option("--threads", flags.threads, "Worker threads")->check(CLI::PositiveNumber);

  std::string graph;
  std::vector<std::string> graphs;
  bool closed_form = false;
  bool maximize = false;
  int vertex = -1;
  std::string subset;
  std::string pair;
  unsigned ground = 0;
  SweepFlags sf;

  auto* compute = app.add_subcommand("compute", "Weighted arboricity A_c with argmax, method and global bounds");
  compute->add_option("graph", graph, "Graph file or family spec")->required();
  compute->add_flag("--closed-form", closed_form, "Allow closed forms for unit families and trees");

  auto* local = app.add_subcommand("local", "Local weighted arboricity per vertex");
  local->add_option("graph", graph, "Graph file or family spec")->required();
  local->add_option("--vertex", vertex, "Single vertex (default: every non-isolated vertex)")->check(CLI::NonNegativeNumber);

  auto* bound = app.add_subcommand("bound", "Local Foster sum and Cauchy-Schwarz bound for a subset");
  bound->add_option("graph", graph, "Graph file or family spec")->required();
  bound->add_option("--subset", subset, "Comma-separated vertices (default: all)");
  bound->add_flag("--max", maximize, "Also maximize the bound over connected subsets and compare with A_c");

  auto* resist = app.add_subcommand("resist", "Effective resistances via grounded Laplacian solves");
  resist->add_option("graph", graph, "Graph file or family spec")->required();
  resist->add_option("--pair", pair, "Single pair 'u,v' (default: every edge)");
  resist->add_option("--ground", ground, "Ground vertex");

  auto* foster = app.add_subcommand("foster", "Foster identity sum c(e) R_eff(e) = n - 1, or the local inequality");
  foster->add_option("graph", graph, "Graph file or family spec")->required();
  foster->add_option("--subset", subset, "Check the local inequality on this subset instead");

  auto* uni = app.add_subcommand("union", "Arboricity of a disjoint union and the max law");
  uni->add_option("graphs", graphs, "Graph files or family specs")->required();

  auto* sweep = app.add_subcommand("sweep", "Hypercube sweep with random two-point conductances");
  sweep->add_option("--dist", sf.dist, "Conductance law")->check(CLI::IsMember({"two_point"}));
  sweep->add_option("--mode", sf.mode, "unit or random weights")->check(CLI::IsMember({"unit", "random"}));
  sweep->add_option("--lambda", sf.lambda, "Heavy conductance value");
  sweep->add_option("--p", sf.p, "Probability of the heavy value");
  sweep->add_option("--d_min", sf.d_min, "Smallest dimension");
  sweep->add_option("--d_max", sf.d_max, "Largest dimension");
  sweep->add_option("--d_cap", sf.d_cap, "Largest dimension accepted");
  sweep->add_option("--reps", sf.reps, "Draws per dimension");
  sweep->add_option("--seed", sf.seed, "Master seed")->required();
  sweep->add_option("--out", sf.out, "Records CSV path");
  sweep->add_option("--medians", sf.medians, "Medians CSV path (default: medians.csv next to --out)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*compute) return cmd_compute(flags, graph, closed_form);
    if (*local) return cmd_local(flags, graph, vertex);
    if (*bound) return cmd_bound(flags, graph, subset, maximize);
    if (*resist) return cmd_resist(flags, graph, pair, ground);
    if (*foster) return cmd_foster(flags, graph, subset);
    if (*uni) return cmd_union(flags, graphs);
    if (*sweep) return cmd_sweep(flags, sf);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitInput;
}
