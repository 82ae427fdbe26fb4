#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "cdr/graph.hpp"
#include "cdr/rng.hpp"

namespace cdr {

enum class Family { Gnp, UnitDisk, Path, Cycle, Star, Complete };

inline Family parse_family(std::string_view name) {
  if (name == "gnp") return Family::Gnp;
  if (name == "unit-disk") return Family::UnitDisk;
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "star") return Family::Star;
  if (name == "complete") return Family::Complete;
  throw Error(Errc::DomainError, "unknown graph family '" + std::string(name) + "'");
}

struct GenParams {
  int n = 0;
  /// Edge probability for gnp.
  double p = 0.5;
  /// Connection radius for unit-disk (points in the unit square).
  double radius = 0.3;
  /// gnp and unit-disk redraw until connected, at most this many times.
  int max_attempts = 200;
};

namespace detail {

inline Graph gnp_once(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return Graph::build(n, edges);
}

inline Graph unit_disk_once(int n, double radius, Rng& rng) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  std::vector<double> ys(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    xs[i] = rng.uniform();
    ys[i] = rng.uniform();
  }
  std::vector<Edge> edges;
  const double r2 = radius * radius;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double dx = xs[u] - xs[v];
      const double dy = ys[u] - ys[v];
      if (dx * dx + dy * dy <= r2) edges.emplace_back(u, v);
    }
  }
  return Graph::build(n, edges);
}

}  // namespace detail

/// Deterministic per (family, params, seed). Random families consume one
/// generator stream across their redraws.
inline Graph gen_graph(Family family, const GenParams& params, std::uint64_t seed) {
  const int n = params.n;
  if (n < 1) throw Error(Errc::DomainError, "n must be at least 1");
  std::vector<Edge> edges;
  switch (family) {
    case Family::Path:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      return Graph::build(n, edges);
    case Family::Cycle:
      if (n < 3) throw Error(Errc::DomainError, "a cycle needs at least 3 vertices");
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(0, n - 1);
      return Graph::build(n, edges);
    case Family::Star:
      for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
      return Graph::build(n, edges);
    case Family::Complete:
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      }
      return Graph::build(n, edges);
    case Family::Gnp:
    case Family::UnitDisk: {
      if (family == Family::Gnp && !(params.p >= 0.0 && params.p <= 1.0)) {
        throw Error(Errc::DomainError, "p must lie in [0,1]");
      }
      if (family == Family::UnitDisk && !(params.radius >= 0.0)) {
        throw Error(Errc::DomainError, "radius must be nonnegative");
      }
      Rng rng(seed);
      for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
        Graph g = family == Family::Gnp ? detail::gnp_once(n, params.p, rng)
                                        : detail::unit_disk_once(n, params.radius, rng);
        if (is_connected(g)) return g;
      }
      throw Error(Errc::Disconnected, "no connected graph after " +
                                          std::to_string(params.max_attempts) + " attempts");
    }
  }
  throw Error(Errc::DomainError, "unknown family");
}

}  // namespace cdr
