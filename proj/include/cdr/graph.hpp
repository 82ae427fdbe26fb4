#pragma once

// Undirected simple graphs over dense vertex ids, the internal-vertex distance
// m(u, v) and its constrained form m^D(u, v), target couples and the basic
// structural predicates the solvers and checkers are built from.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cdr/error.hpp"

namespace cdr {

using Vertex = int;
/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;
using Bitset = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<Vertex, Vertex>;

inline VertexSet normalized(VertexSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

inline Bitset to_mask(std::size_t n, std::span<const Vertex> set) {
  Bitset mask(n);
  for (Vertex v : set) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw Error(Errc::EndpointOutOfRange, "vertex " + std::to_string(v) + " not in graph");
    }
    mask.set(static_cast<std::size_t>(v));
  }
  return mask;
}

inline VertexSet to_set(const Bitset& mask) {
  VertexSet out;
  out.reserve(mask.count());
  for (auto i = mask.find_first(); i != Bitset::npos; i = mask.find_next(i)) {
    out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

/// Number of internal vertices on a shortest path, or Unreachable.
/// Unreachable orders after every finite value.
class InternalDistance {
 public:
  static constexpr InternalDistance finite(int k) { return InternalDistance(k); }
  static constexpr InternalDistance unreachable() { return InternalDistance(); }

  [[nodiscard]] constexpr bool is_finite() const { return value_ >= 0; }
  [[nodiscard]] constexpr int value() const {
    if (!is_finite()) throw Error(Errc::DomainError, "distance is unreachable");
    return value_;
  }
  /// True iff finite and at most `bound`.
  [[nodiscard]] constexpr bool at_most(long long bound) const {
    return is_finite() && value_ <= bound;
  }

  constexpr bool operator==(const InternalDistance&) const = default;
  constexpr std::strong_ordering operator<=>(const InternalDistance& o) const {
    if (is_finite() != o.is_finite()) {
      return is_finite() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return value_ <=> o.value_;
  }

  [[nodiscard]] std::string str() const {
    return is_finite() ? std::to_string(value_) : std::string("unreachable");
  }

 private:
  constexpr InternalDistance() = default;
  constexpr explicit InternalDistance(int k) : value_(k) {}
  int value_ = -1;
};

/// Unordered non-adjacent pair with a common neighbour, stored with u < v.
struct TargetCouple {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const TargetCouple&) const = default;
};

/// Immutable undirected simple graph. Adjacency is kept both as sorted lists
/// and as bitset rows; the rows back the masked breadth-first searches.
class Graph {
 public:
  Graph() = default;

  static Graph build(int vertex_count, std::span<const Edge> edges) {
    if (vertex_count < 0) throw Error(Errc::DomainError, "negative vertex count");
    Graph g;
    const auto n = static_cast<std::size_t>(vertex_count);
    g.adjacency_.assign(n, {});
    g.rows_.assign(n, Bitset(n));
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
        throw Error(Errc::EndpointOutOfRange,
                    "edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
      if (a == b) throw Error(Errc::SelfLoop, "vertex " + std::to_string(a));
      if (g.rows_[a].test(b)) {
        throw Error(Errc::DuplicateEdge,
                    "edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
      g.rows_[a].set(b);
      g.rows_[b].set(a);
      g.adjacency_[a].push_back(b);
      g.adjacency_[b].push_back(a);
    }
    for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
    g.edge_count_ = edges.size();
    return g;
  }

  static Graph build(int vertex_count, std::initializer_list<Edge> edges) {
    return build(vertex_count, std::span<const Edge>(edges.begin(), edges.size()));
  }

  [[nodiscard]] int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  [[nodiscard]] std::size_t edge_count() const { return edge_count_; }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
  }
  [[nodiscard]] const Bitset& row(Vertex v) const { return rows_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
    return rows_.at(static_cast<std::size_t>(u)).test(static_cast<std::size_t>(v));
  }
  [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  /// Closed neighbourhood N[v] as a mask.
  [[nodiscard]] Bitset closed_row(Vertex v) const {
    Bitset r = row(v);
    r.set(static_cast<std::size_t>(v));
    return r;
  }

  /// Edges with u < v in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  [[nodiscard]] Bitset all_vertices() const {
    Bitset m(adjacency_.size());
    m.set();
    return m;
  }

  bool operator==(const Graph& o) const { return adjacency_ == o.adjacency_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Bitset> rows_;
  std::size_t edge_count_ = 0;
};

namespace detail {

inline void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.vertex_count()) {
    throw Error(Errc::EndpointOutOfRange, "vertex " + std::to_string(v) + " not in graph");
  }
}

// Breadth-first search from u inside `allowed` (which must contain u and v).
// Stops once more than `max_internal` internal vertices would be needed.
inline InternalDistance masked_distance(const Graph& g, const Bitset& allowed, Vertex u, Vertex v,
                                        int max_internal) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Bitset visited(n);
  Bitset frontier(n);
  Bitset next(n);
  visited.set(u);
  frontier.set(u);
  for (int edges = 1; edges <= max_internal + 1; ++edges) {
    next.reset();
    for (auto w = frontier.find_first(); w != Bitset::npos; w = frontier.find_next(w)) {
      next |= g.row(static_cast<Vertex>(w));
    }
    next &= allowed;
    next -= visited;
    if (next.test(static_cast<std::size_t>(v))) return InternalDistance::finite(edges - 1);
    if (next.none()) break;
    visited |= next;
    std::swap(frontier, next);
  }
  return InternalDistance::unreachable();
}

}  // namespace detail

/// m(u, v): internal vertices on a shortest u-v path in G.
inline InternalDistance internal_distance(const Graph& g, Vertex u, Vertex v) {
  detail::check_vertex(g, u);
  detail::check_vertex(g, v);
  if (u == v) throw Error(Errc::SameVertex, "m(u,u) is undefined");
  return detail::masked_distance(g, g.all_vertices(), u, v, g.vertex_count());
}

/// m^D(u, v) with D given as a mask; u and v are added to the allowed set.
inline InternalDistance constrained_internal_distance(const Graph& g, const Bitset& d, Vertex u,
                                                      Vertex v, int max_internal = -1) {
  detail::check_vertex(g, u);
  detail::check_vertex(g, v);
  if (u == v) throw Error(Errc::SameVertex, "m(u,u) is undefined");
  Bitset allowed = d;
  allowed.set(u);
  allowed.set(v);
  return detail::masked_distance(g, allowed, u, v,
                                 max_internal < 0 ? g.vertex_count() : max_internal);
}

inline InternalDistance constrained_internal_distance(const Graph& g, std::span<const Vertex> d,
                                                      Vertex u, Vertex v) {
  return constrained_internal_distance(g, to_mask(static_cast<std::size_t>(g.vertex_count()), d),
                                       u, v);
}

/// All pairs at internal distance exactly one, sorted lexicographically.
inline std::vector<TargetCouple> target_couples(const Graph& g) {
  std::vector<TargetCouple> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (!g.adjacent(u, v) && g.row(u).intersects(g.row(v))) out.push_back({u, v});
    }
  }
  return out;
}

inline bool is_target_couple(const Graph& g, Vertex u, Vertex v) {
  detail::check_vertex(g, u);
  detail::check_vertex(g, v);
  return u != v && !g.adjacent(u, v) && g.row(u).intersects(g.row(v));
}

/// Vertices in D or adjacent to a member of D.
inline Bitset dominated_by(const Graph& g, const Bitset& d) {
  Bitset dominated = d;
  for (auto w = d.find_first(); w != Bitset::npos; w = d.find_next(w)) {
    dominated |= g.row(static_cast<Vertex>(w));
  }
  return dominated;
}

inline bool is_dominating(const Graph& g, const Bitset& d) { return dominated_by(g, d).all(); }

inline bool is_dominating(const Graph& g, std::span<const Vertex> d) {
  return is_dominating(g, to_mask(static_cast<std::size_t>(g.vertex_count()), d));
}

/// Whether G[D] is connected. D must be nonempty.
inline bool induced_connected(const Graph& g, const Bitset& d) {
  const auto first = d.find_first();
  if (first == Bitset::npos) throw Error(Errc::EmptySet, "connectivity of an empty set");
  Bitset visited(d.size());
  Bitset frontier(d.size());
  Bitset next(d.size());
  visited.set(first);
  frontier.set(first);
  while (frontier.any()) {
    next.reset();
    for (auto w = frontier.find_first(); w != Bitset::npos; w = frontier.find_next(w)) {
      next |= g.row(static_cast<Vertex>(w));
    }
    next &= d;
    next -= visited;
    visited |= next;
    std::swap(frontier, next);
  }
  return visited == d;
}

inline bool induced_connected(const Graph& g, std::span<const Vertex> d) {
  return induced_connected(g, to_mask(static_cast<std::size_t>(g.vertex_count()), d));
}

inline bool is_connected(const Graph& g) {
  return g.vertex_count() == 0 || induced_connected(g, g.all_vertices());
}

inline bool triangle_free(const Graph& g) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && g.row(u).intersects(g.row(v))) return false;
    }
  }
  return true;
}

/// Edge distances from `source` over the whole graph; -1 marks unreachable.
inline std::vector<int> bfs_edge_distances(const Graph& g, Vertex source) {
  detail::check_vertex(g, source);
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex w = queue[head];
    for (Vertex x : g.neighbors(w)) {
      if (dist[x] < 0) {
        dist[x] = dist[w] + 1;
        queue.push_back(x);
      }
    }
  }
  return dist;
}

/// The shortest u-v path whose vertex sequence (starting at u) is
/// lexicographically smallest. Empty when v is unreachable.
inline std::vector<Vertex> lex_shortest_path(const Graph& g, Vertex u, Vertex v) {
  const auto to_v = bfs_edge_distances(g, v);
  if (to_v[u] < 0) return {};
  std::vector<Vertex> path{u};
  Vertex at = u;
  while (at != v) {
    for (Vertex x : g.neighbors(at)) {  // ascending, so the first hit is smallest
      if (to_v[x] == to_v[at] - 1) {
        at = x;
        break;
      }
    }
    path.push_back(at);
  }
  return path;
}

/// All-pairs m(u, v) for a fixed graph. The graph is immutable, so the table
/// stays valid for its lifetime.
class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g) : n_(g.vertex_count()) {
    edges_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
    for (Vertex s = 0; s < n_; ++s) {
      auto row = bfs_edge_distances(g, s);
      edges_.insert(edges_.end(), row.begin(), row.end());
    }
  }

  [[nodiscard]] InternalDistance operator()(Vertex u, Vertex v) const {
    if (u == v) throw Error(Errc::SameVertex, "m(u,u) is undefined");
    const int e = edges_.at(static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v));
    return e < 0 ? InternalDistance::unreachable() : InternalDistance::finite(e - 1);
  }

 private:
  int n_;
  std::vector<int> edges_;
};

}  // namespace cdr
