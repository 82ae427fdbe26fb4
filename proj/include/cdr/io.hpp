#pragma once

// Text formats.
//
// Graph: first content line "n m", then m lines "u v" (0-indexed,
// whitespace-separated). '#' starts a comment running to end of line; blank
// lines are ignored. write_graph emits the canonical form: edges with u < v,
// sorted, no comments.
//
// MIN-REP instance: JSON object
//   {"x_count": int, "y_count": int, "x_groups": [[int]], "y_groups": [[int]],
//    "edges": [[x, y], ...]}
// with x and y local to their side.
//
// Gadget labels (sidecar of a gadget graph file): JSON object
//   {"vertex_count", "original_count", "classes": ["X"|"Y"|"PX"|"PY"|"R"|"H"|"M"],
//    "px": [[a, b]], "py": [[a, b]], "relays": [{"x_group", "y_group", "r1", "r2"}],
//    "hubs": {"xr", "yr", "px", "py"}, "dummies": [[a, b] x 4]}

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cdr/graph.hpp"
#include "cdr/minrep.hpp"

namespace cdr {

namespace detail {

inline Error parse_error(int line, const std::string& what) {
  return Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

// Reads the next non-empty, comment-stripped line into `tokens`.
inline bool next_content_line(std::istream& in, int& line_no, std::vector<std::string>& tokens) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    tokens.clear();
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    if (!tokens.empty()) return true;
  }
  return false;
}

inline long long parse_int(const std::string& tok, int line_no) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw parse_error(line_no, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) throw parse_error(line_no, "expected an integer, got '" + tok + "'");
  return value;
}

}  // namespace detail

inline Graph read_graph(std::istream& in) {
  int line_no = 0;
  std::vector<std::string> tokens;
  if (!detail::next_content_line(in, line_no, tokens)) {
    throw detail::parse_error(line_no, "missing header 'n m'");
  }
  if (tokens.size() != 2) throw detail::parse_error(line_no, "header must be 'n m'");
  const long long n = detail::parse_int(tokens[0], line_no);
  const long long m = detail::parse_int(tokens[1], line_no);
  if (n < 0 || m < 0 || n > 1'000'000'000) {
    throw detail::parse_error(line_no, "header values out of range");
  }
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> seen(static_cast<std::size_t>(n));
  for (long long k = 0; k < m; ++k) {
    if (!detail::next_content_line(in, line_no, tokens)) {
      throw detail::parse_error(line_no, "expected " + std::to_string(m) + " edges, found " +
                                             std::to_string(k));
    }
    if (tokens.size() != 2) throw detail::parse_error(line_no, "edge line must be 'u v'");
    const long long u = detail::parse_int(tokens[0], line_no);
    const long long v = detail::parse_int(tokens[1], line_no);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw detail::parse_error(line_no, "endpoint out of range");
    }
    if (u == v) throw detail::parse_error(line_no, "self-loop");
    auto& su = seen[static_cast<std::size_t>(u)];
    if (std::find(su.begin(), su.end(), static_cast<Vertex>(v)) != su.end()) {
      throw detail::parse_error(line_no, "duplicate edge");
    }
    su.push_back(static_cast<Vertex>(v));
    seen[static_cast<std::size_t>(v)].push_back(static_cast<Vertex>(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (detail::next_content_line(in, line_no, tokens)) {
    throw detail::parse_error(line_no, "unexpected content after the last edge");
  }
  return Graph::build(static_cast<int>(n), edges);
}

inline Graph read_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

inline std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline nlohmann::json minrep_to_json(const MinRepInstance& inst) {
  nlohmann::json j;
  j["x_count"] = inst.x_count;
  j["y_count"] = inst.y_count;
  j["x_groups"] = inst.x_groups;
  j["y_groups"] = inst.y_groups;
  auto edges = nlohmann::json::array();
  for (auto [x, y] : inst.cross_edges) edges.push_back({x, y});
  j["edges"] = edges;
  return j;
}

inline MinRepInstance minrep_from_json(const nlohmann::json& j) {
  MinRepInstance inst;
  try {
    inst.x_count = j.at("x_count").get<int>();
    inst.y_count = j.at("y_count").get<int>();
    inst.x_groups = j.at("x_groups").get<std::vector<std::vector<int>>>();
    inst.y_groups = j.at("y_groups").get<std::vector<std::vector<int>>>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(Errc::ParseError, "edge must be [x, y]");
      inst.cross_edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::ParseError, std::string("MIN-REP document: ") + ex.what());
  }
  inst.validate();
  return inst;
}

inline MinRepInstance read_minrep(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw Error(Errc::ParseError, std::string("MIN-REP document: ") + ex.what());
  }
  return minrep_from_json(j);
}

inline std::string write_minrep(const MinRepInstance& inst) { return minrep_to_json(inst).dump(2) + "\n"; }

inline nlohmann::json labels_to_json(const ReducedGraph& rg) {
  nlohmann::json j;
  j["vertex_count"] = rg.graph.vertex_count();
  j["original_count"] = rg.original_count;
  auto classes = nlohmann::json::array();
  for (auto c : rg.classes) classes.push_back(std::string(to_string(c)));
  j["classes"] = classes;
  j["px"] = rg.px;
  j["py"] = rg.py;
  auto relays = nlohmann::json::array();
  for (const auto& r : rg.relays) {
    relays.push_back({{"x_group", r.x_group}, {"y_group", r.y_group}, {"r1", r.r1}, {"r2", r.r2}});
  }
  j["relays"] = relays;
  j["hubs"] = {{"xr", rg.hubs.xr}, {"yr", rg.hubs.yr}, {"px", rg.hubs.px}, {"py", rg.hubs.py}};
  j["dummies"] = rg.dummies;
  return j;
}

inline VertexClass parse_vertex_class(std::string_view s) {
  for (auto c : {VertexClass::X, VertexClass::Y, VertexClass::PX, VertexClass::PY, VertexClass::R,
                 VertexClass::H, VertexClass::M}) {
    if (to_string(c) == s) return c;
  }
  throw Error(Errc::ParseError, "unknown vertex class '" + std::string(s) + "'");
}

/// Rebuilds a gadget from its graph file and label sidecar.
inline ReducedGraph read_reduction(std::string_view graph_text, std::string_view labels_text) {
  ReducedGraph rg;
  rg.graph = read_graph(graph_text);
  try {
    const auto j = nlohmann::json::parse(labels_text);
    if (j.at("vertex_count").get<int>() != rg.graph.vertex_count()) {
      throw Error(Errc::ParseError, "label file does not match graph size");
    }
    rg.original_count = j.at("original_count").get<int>();
    for (const auto& c : j.at("classes")) rg.classes.push_back(parse_vertex_class(c.get<std::string>()));
    if (static_cast<int>(rg.classes.size()) != rg.graph.vertex_count()) {
      throw Error(Errc::ParseError, "class list does not match graph size");
    }
    rg.px = j.at("px").get<std::vector<std::array<Vertex, 2>>>();
    rg.py = j.at("py").get<std::vector<std::array<Vertex, 2>>>();
    for (const auto& r : j.at("relays")) {
      rg.relays.push_back({r.at("x_group").get<int>(), r.at("y_group").get<int>(),
                           r.at("r1").get<Vertex>(), r.at("r2").get<Vertex>()});
    }
    const auto& h = j.at("hubs");
    rg.hubs = {h.at("xr").get<Vertex>(), h.at("yr").get<Vertex>(), h.at("px").get<Vertex>(),
               h.at("py").get<Vertex>()};
    rg.dummies = j.at("dummies").get<std::array<std::array<Vertex, 2>, 4>>();
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::ParseError, std::string("label document: ") + ex.what());
  }
  auto in_range = [&](Vertex v) { return v >= 0 && v < rg.graph.vertex_count(); };
  bool ok = true;
  for (const auto& p : rg.px) ok = ok && in_range(p[0]) && in_range(p[1]);
  for (const auto& p : rg.py) ok = ok && in_range(p[0]) && in_range(p[1]);
  for (const auto& r : rg.relays) {
    ok = ok && in_range(r.r1) && in_range(r.r2) && r.x_group >= 0 &&
         r.x_group < static_cast<int>(rg.px.size()) && r.y_group >= 0 &&
         r.y_group < static_cast<int>(rg.py.size());
  }
  for (Vertex v : rg.hubs.all()) ok = ok && in_range(v);
  for (const auto& p : rg.dummies) ok = ok && in_range(p[0]) && in_range(p[1]);
  if (!ok) throw Error(Errc::ParseError, "label document refers to vertices outside the graph");
  return rg;
}

/// Parses "1,2,5" (empty string = empty set).
inline VertexSet parse_vertex_list(std::string_view text) {
  VertexSet out;
  std::string token;
  std::istringstream ss{std::string(text)};
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    out.push_back(static_cast<Vertex>(detail::parse_int(token, 1)));
  }
  return normalized(std::move(out));
}

inline std::string format_vertex_list(std::span<const Vertex> set) {
  std::string out;
  for (Vertex v : set) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

}  // namespace cdr
