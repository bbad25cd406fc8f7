// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "warb/graph.hpp"

namespace warb {

// Graph files come in two flavors:
//
//   text:  first line "n m", then m lines "u v c" (0-indexed, c > 0).
//          Blank lines and lines starting with '#' are ignored.
//   json:  {"n": 3, "edges": [{"u": 0, "v": 1, "c": 2.0}, ...]}
//
// Readers sniff the first non-blank character; '{' selects JSON. Writers
// emit normalized edge order with round-trippable (17 digit) reals.

namespace detail {

inline std::string format_exact(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace detail

inline WeightedGraph parse_graph_text(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw Error(Errc::ParseError, "empty graph file");
  long long n = -1;
  long long m = -1;
  {
    std::istringstream head(lines[0]);
    if (!(head >> n >> m) || n < 1 || m < 0 || !(head >> std::ws).eof()) {
      throw Error(Errc::ParseError, "first line must be 'n m', got '" + lines[0] + "'");
    }
  }
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw Error(Errc::ParseError, "header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    long long u = -1;
    long long v = -1;
    double c = 0.0;
    if (!(row >> u >> v >> c) || !(row >> std::ws).eof()) {
      throw Error(Errc::ParseError, "edge line " + std::to_string(i) + " must be 'u v c', got '" + lines[i] + "'");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(Errc::VertexOutOfRange, "edge line " + std::to_string(i) + " references a vertex outside [0, n)");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), c});
  }
  return build_graph(static_cast<std::size_t>(n), std::move(edges));
}

inline WeightedGraph parse_graph_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
    const auto n = doc.at("n").get<long long>();
    if (n < 1) throw Error(Errc::ParseError, "n must be at least 1");
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      const auto u = e.at("u").get<long long>();
      const auto v = e.at("v").get<long long>();
      if (u < 0 || v < 0 || u >= n || v >= n) throw Error(Errc::VertexOutOfRange, "edge references a vertex outside [0, n)");
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), e.at("c").get<double>()});
    }
    return build_graph(static_cast<std::size_t>(n), std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::ParseError, std::string("malformed graph document: ") + ex.what());
  }
}

inline WeightedGraph read_graph(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  std::istringstream body(text);
  if (first != std::string::npos && text[first] == '{') return parse_graph_json(body);
  return parse_graph_text(body);
}

inline WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoFailure, "cannot open graph file " + path);
  return read_graph(in);
}

inline void write_graph_text(const WeightedGraph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << detail::format_exact(e.c) << '\n';
}

inline nlohmann::json graph_to_json(const WeightedGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"c", e.c}});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline void write_graph_json(const WeightedGraph& g, std::ostream& out) { out << graph_to_json(g).dump(2) << '\n'; }

inline FamilyKind parse_family_kind(std::string_view name) {
  for (auto k : {FamilyKind::path, FamilyKind::star, FamilyKind::cycle, FamilyKind::complete, FamilyKind::complete_bipartite,
                 FamilyKind::hypercube}) {
    if (name == to_string(k)) return k;
  }
  throw Error(Errc::ParseError, "unknown graph family '" + std::string(name) + "'");
}

/// "family:<kind>:<p1>[,<p2>]", e.g. "family:complete:7",
/// "family:complete_bipartite:3,4", "family:hypercube:5".
inline bool is_family_spec(std::string_view text) { return text.starts_with("family:"); }

inline GraphFamily parse_family_spec(std::string_view text) {
  if (!is_family_spec(text)) throw Error(Errc::ParseError, "family spec must start with 'family:'");
  const std::string_view rest = text.substr(7);
  const auto colon = rest.find(':');
  if (colon == std::string_view::npos) throw Error(Errc::ParseError, "family spec needs parameters: '" + std::string(text) + "'");
  GraphFamily f;
  f.kind = parse_family_kind(rest.substr(0, colon));
  std::string params(rest.substr(colon + 1));
  std::istringstream in(params);
  for (std::string tok; std::getline(in, tok, ',');) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (tok.empty() || pos != tok.size() || tok[0] == '-') {
      throw Error(Errc::ParseError, "bad family parameter '" + tok + "' in '" + std::string(text) + "'");
    }
    f.params.push_back(static_cast<std::size_t>(v));
  }
  family_size(f);
  return f;
}

}  // namespace warb
