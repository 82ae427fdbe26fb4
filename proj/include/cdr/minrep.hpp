#pragma once

// MIN-REP instances and the gadget graph that encodes them as a couple-cover
// problem with alpha = 2, together with executable checks of the gadget's
// structural properties and the maps between solutions of the two problems.
//
// Gadget vertex layout (ids in this order):
//   X (x_count) | Y (y_count) | px^1_i, px^2_i per X group | py^1_j, py^2_j per
//   Y group | r^1, r^2 per super edge | h_XR, h_YR, h_PX, h_PY | two dummies per
//   hub, in hub order.

#include <array>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdr/graph.hpp"
#include "cdr/rng.hpp"
#include "cdr/validator.hpp"

namespace cdr {

struct MinRepInstance {
  int x_count = 0;
  int y_count = 0;
  /// (x id, y id), each local to its side.
  std::vector<std::pair<int, int>> cross_edges;
  std::vector<std::vector<int>> x_groups;
  std::vector<std::vector<int>> y_groups;

  bool operator==(const MinRepInstance&) const = default;

  [[nodiscard]] int kx() const { return static_cast<int>(x_groups.size()); }
  [[nodiscard]] int ky() const { return static_cast<int>(y_groups.size()); }

  /// Group index of every X (resp. Y) vertex.
  [[nodiscard]] std::vector<int> x_group_of() const { return group_index(x_groups, x_count); }
  [[nodiscard]] std::vector<int> y_group_of() const { return group_index(y_groups, y_count); }

  /// Throws InvalidInstance unless groups are an equal-sized partition and
  /// every edge joins X to Y exactly once.
  void validate() const {
    auto fail = [](const std::string& why) { throw Error(Errc::InvalidInstance, why); };
    if (x_count < 0 || y_count < 0) fail("negative side size");
    check_partition(x_groups, x_count, "X");
    check_partition(y_groups, y_count, "Y");
    std::vector<std::pair<int, int>> seen = cross_edges;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) fail("duplicate cross edge");
    for (auto [x, y] : cross_edges) {
      if (x < 0 || x >= x_count || y < 0 || y >= y_count) {
        fail("cross edge (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
      }
    }
  }

 private:
  static std::vector<int> group_index(const std::vector<std::vector<int>>& groups, int count) {
    std::vector<int> of(static_cast<std::size_t>(count), -1);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (int v : groups[g]) {
        if (v >= 0 && v < count) of[v] = static_cast<int>(g);
      }
    }
    return of;
  }

  static void check_partition(const std::vector<std::vector<int>>& groups, int count,
                              const char* side) {
    const std::string s(side);
    if (count > 0 && groups.empty()) throw Error(Errc::InvalidInstance, s + " has no groups");
    std::vector<int> hits(static_cast<std::size_t>(count), 0);
    for (const auto& grp : groups) {
      if (grp.size() != groups.front().size() || grp.empty()) {
        throw Error(Errc::InvalidInstance, s + " groups are not equal-sized and nonempty");
      }
      for (int v : grp) {
        if (v < 0 || v >= count) throw Error(Errc::InvalidInstance, s + " group member out of range");
        ++hits[v];
      }
    }
    for (int h : hits) {
      if (h != 1) throw Error(Errc::InvalidInstance, s + " groups do not partition the side");
    }
  }
};

/// Group pairs (i, j) joined by at least one cross edge, sorted.
inline std::vector<std::pair<int, int>> super_edges(const MinRepInstance& inst) {
  const auto xg = inst.x_group_of();
  const auto yg = inst.y_group_of();
  std::vector<std::pair<int, int>> out;
  for (auto [x, y] : inst.cross_edges) out.emplace_back(xg.at(x), yg.at(y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Whether R (ids over X then Y, i.e. y is x_count + y) covers every super edge.
inline bool validate_minrep(const MinRepInstance& inst, std::span<const Vertex> r) {
  std::vector<bool> in_r(static_cast<std::size_t>(inst.x_count + inst.y_count), false);
  for (Vertex v : r) {
    if (v < 0 || v >= inst.x_count + inst.y_count) return false;
    in_r[v] = true;
  }
  const auto xg = inst.x_group_of();
  const auto yg = inst.y_group_of();
  std::vector<std::pair<int, int>> covered;
  for (auto [x, y] : inst.cross_edges) {
    if (in_r[x] && in_r[inst.x_count + y]) covered.emplace_back(xg[x], yg[y]);
  }
  std::sort(covered.begin(), covered.end());
  for (const auto& se : super_edges(inst)) {
    if (!std::binary_search(covered.begin(), covered.end(), se)) return false;
  }
  return true;
}

/// Equal-size groups (consecutive ids) on both sides; every X-Y pair becomes a
/// cross edge independently with probability edge_prob. Deterministic per seed.
inline MinRepInstance generate_minrep(int kx, int ky, int group_size, double edge_prob,
                                      std::uint64_t seed) {
  if (kx < 1 || ky < 1 || group_size < 1 || !(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw Error(Errc::DomainError, "generate_minrep needs k_X, k_Y, group size >= 1, p in [0,1]");
  }
  MinRepInstance inst;
  inst.x_count = kx * group_size;
  inst.y_count = ky * group_size;
  for (int i = 0; i < kx; ++i) {
    auto& grp = inst.x_groups.emplace_back();
    for (int k = 0; k < group_size; ++k) grp.push_back(i * group_size + k);
  }
  for (int j = 0; j < ky; ++j) {
    auto& grp = inst.y_groups.emplace_back();
    for (int k = 0; k < group_size; ++k) grp.push_back(j * group_size + k);
  }
  Rng rng(seed);
  for (int x = 0; x < inst.x_count; ++x) {
    for (int y = 0; y < inst.y_count; ++y) {
      if (rng.bernoulli(edge_prob)) inst.cross_edges.emplace_back(x, y);
    }
  }
  return inst;
}

enum class VertexClass { X, Y, PX, PY, R, H, M };

constexpr std::string_view to_string(VertexClass c) {
  switch (c) {
    case VertexClass::X: return "X";
    case VertexClass::Y: return "Y";
    case VertexClass::PX: return "PX";
    case VertexClass::PY: return "PY";
    case VertexClass::R: return "R";
    case VertexClass::H: return "H";
    case VertexClass::M: return "M";
  }
  return "?";
}

struct Hubs {
  Vertex xr = -1;
  Vertex yr = -1;
  Vertex px = -1;
  Vertex py = -1;

  [[nodiscard]] std::array<Vertex, 4> all() const { return {xr, yr, px, py}; }
  bool operator==(const Hubs&) const = default;
};

struct RelayPair {
  int x_group = 0;
  int y_group = 0;
  Vertex r1 = -1;
  Vertex r2 = -1;
  bool operator==(const RelayPair&) const = default;
};

/// The gadget graph with explicit class labels; checkers read the labels and
/// never infer them from structure.
struct ReducedGraph {
  Graph graph;
  std::vector<VertexClass> classes;
  /// px[i] = {px^1_i, px^2_i}; likewise py.
  std::vector<std::array<Vertex, 2>> px;
  std::vector<std::array<Vertex, 2>> py;
  /// One entry per super edge, in super_edges() order.
  std::vector<RelayPair> relays;
  Hubs hubs;
  /// dummies[k] hangs off hubs.all()[k].
  std::array<std::array<Vertex, 2>, 4> dummies{};
  /// Size of the MIN-REP side X u Y; those vertices keep their ids.
  int original_count = 0;

  [[nodiscard]] VertexSet hub_set() const {
    auto h = hubs.all();
    return normalized(VertexSet(h.begin(), h.end()));
  }

  [[nodiscard]] VertexSet members(VertexClass c) const {
    VertexSet out;
    for (std::size_t v = 0; v < classes.size(); ++v) {
      if (classes[v] == c) out.push_back(static_cast<Vertex>(v));
    }
    return out;
  }
};

inline ReducedGraph build_reduction(const MinRepInstance& inst) {
  inst.validate();
  ReducedGraph rg;
  std::vector<Edge> edges;
  std::vector<VertexClass>& cls = rg.classes;
  auto add_vertex = [&](VertexClass c) {
    cls.push_back(c);
    return static_cast<Vertex>(cls.size() - 1);
  };

  for (int x = 0; x < inst.x_count; ++x) add_vertex(VertexClass::X);
  for (int y = 0; y < inst.y_count; ++y) add_vertex(VertexClass::Y);
  rg.original_count = inst.x_count + inst.y_count;
  for (auto [x, y] : inst.cross_edges) edges.emplace_back(x, inst.x_count + y);

  for (const auto& grp : inst.x_groups) {
    const std::array<Vertex, 2> pair{add_vertex(VertexClass::PX), add_vertex(VertexClass::PX)};
    for (int x : grp) {
      edges.emplace_back(x, pair[0]);
      edges.emplace_back(x, pair[1]);
    }
    rg.px.push_back(pair);
  }
  for (const auto& grp : inst.y_groups) {
    const std::array<Vertex, 2> pair{add_vertex(VertexClass::PY), add_vertex(VertexClass::PY)};
    for (int y : grp) {
      edges.emplace_back(inst.x_count + y, pair[0]);
      edges.emplace_back(inst.x_count + y, pair[1]);
    }
    rg.py.push_back(pair);
  }
  for (auto [i, j] : super_edges(inst)) {
    RelayPair rp{i, j, add_vertex(VertexClass::R), add_vertex(VertexClass::R)};
    edges.emplace_back(rg.px[i][0], rp.r1);
    edges.emplace_back(rp.r1, rg.py[j][0]);
    edges.emplace_back(rg.px[i][1], rp.r2);
    edges.emplace_back(rp.r2, rg.py[j][1]);
    rg.relays.push_back(rp);
  }

  rg.hubs.xr = add_vertex(VertexClass::H);
  rg.hubs.yr = add_vertex(VertexClass::H);
  rg.hubs.px = add_vertex(VertexClass::H);
  rg.hubs.py = add_vertex(VertexClass::H);
  for (Vertex v = 0; v < rg.hubs.xr; ++v) {
    switch (cls[v]) {
      case VertexClass::X: edges.emplace_back(v, rg.hubs.xr); break;
      case VertexClass::Y: edges.emplace_back(v, rg.hubs.yr); break;
      case VertexClass::PX: edges.emplace_back(v, rg.hubs.px); break;
      case VertexClass::PY: edges.emplace_back(v, rg.hubs.py); break;
      case VertexClass::R:
        edges.emplace_back(v, rg.hubs.xr);
        edges.emplace_back(v, rg.hubs.yr);
        break;
      default: break;
    }
  }
  // 4-cycle h_PX - h_YR - h_PY - h_XR - h_PX.
  edges.emplace_back(rg.hubs.px, rg.hubs.yr);
  edges.emplace_back(rg.hubs.yr, rg.hubs.py);
  edges.emplace_back(rg.hubs.py, rg.hubs.xr);
  edges.emplace_back(rg.hubs.xr, rg.hubs.px);

  const auto hubs = rg.hubs.all();
  for (std::size_t k = 0; k < hubs.size(); ++k) {
    rg.dummies[k] = {add_vertex(VertexClass::M), add_vertex(VertexClass::M)};
    edges.emplace_back(hubs[k], rg.dummies[k][0]);
    edges.emplace_back(hubs[k], rg.dummies[k][1]);
  }

  rg.graph = Graph::build(static_cast<int>(cls.size()), edges);
  return rg;
}

/// Expected gadget size: n(G) + 2 k_X + 2 k_Y + 2 |super edges| + 12.
inline int expected_gadget_size(const MinRepInstance& inst) {
  return inst.x_count + inst.y_count + 2 * inst.kx() + 2 * inst.ky() +
         2 * static_cast<int>(super_edges(inst).size()) + 12;
}

/// One flag per structural property; every flag should hold.
struct StructureReport {
  bool vertex_count = false;         // matches the class bookkeeping
  bool neighborhoods = false;        // per-class adjacency table
  bool triangle_free = false;
  bool hubs_dominate = false;        // H dominates the gadget
  bool dummies_need_hubs = false;    // dummy couples need their hub
  bool hubs_cover_except_pxpy = false;  // H covers exactly the non-[PX,PY] couples
  bool relay_conditions = false;     // relay couples vs. the two covering conditions
  std::vector<std::string> failures;

  [[nodiscard]] bool all() const {
    return vertex_count && neighborhoods && triangle_free && hubs_dominate && dummies_need_hubs &&
           hubs_cover_except_pxpy && relay_conditions;
  }

  /// (name, value) for reporting.
  [[nodiscard]] std::vector<std::pair<std::string, bool>> entries() const {
    return {{"vertex_count", vertex_count},
            {"neighborhoods", neighborhoods},
            {"triangle_free", triangle_free},
            {"hubs_dominate", hubs_dominate},
            {"dummies_need_hubs", dummies_need_hubs},
            {"hubs_cover_except_pxpy", hubs_cover_except_pxpy},
            {"relay_conditions", relay_conditions}};
  }
};

namespace detail {

inline bool is_class(const ReducedGraph& rg, Vertex v, VertexClass c) { return rg.classes[v] == c; }

// Allowed neighbour classes (and specific hubs) for each class, as the
// construction prescribes. Hubs are also checked for exact neighbourhoods.
inline bool neighborhoods_match(const ReducedGraph& rg, std::vector<std::string>& why) {
  const auto& g = rg.graph;
  const auto& h = rg.hubs;
  bool ok = true;
  auto allowed = [&](Vertex v, Vertex w) {
    switch (rg.classes[v]) {
      case VertexClass::PX:
        return is_class(rg, w, VertexClass::X) || is_class(rg, w, VertexClass::R) || w == h.px;
      case VertexClass::PY:
        return is_class(rg, w, VertexClass::Y) || is_class(rg, w, VertexClass::R) || w == h.py;
      case VertexClass::X:
        return is_class(rg, w, VertexClass::PX) || is_class(rg, w, VertexClass::Y) || w == h.xr;
      case VertexClass::Y:
        return is_class(rg, w, VertexClass::PY) || is_class(rg, w, VertexClass::X) || w == h.yr;
      case VertexClass::M: return is_class(rg, w, VertexClass::H);
      case VertexClass::R:
        return is_class(rg, w, VertexClass::PX) || is_class(rg, w, VertexClass::PY) ||
               w == h.xr || w == h.yr;
      case VertexClass::H: return true;  // exact sets checked below
    }
    return false;
  };
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (!allowed(v, w)) {
        ok = false;
        why.push_back("edge (" + std::to_string(v) + "," + std::to_string(w) + ") not allowed for class " +
                      std::string(to_string(rg.classes[v])));
      }
    }
  }
  auto exact = [&](Vertex hub, std::initializer_list<VertexClass> classes,
                   std::initializer_list<Vertex> extra) {
    VertexSet expected(extra);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      for (auto c : classes) {
        if (rg.classes[v] == c) expected.push_back(v);
      }
    }
    expected = normalized(std::move(expected));
    VertexSet actual;
    for (Vertex w : g.neighbors(hub)) {
      if (!is_class(rg, w, VertexClass::M)) actual.push_back(w);
    }
    if (actual != expected) {
      ok = false;
      why.push_back("hub " + std::to_string(hub) + " neighbourhood mismatch");
    }
  };
  exact(h.xr, {VertexClass::X, VertexClass::R}, {h.px, h.py});
  exact(h.yr, {VertexClass::Y, VertexClass::R}, {h.px, h.py});
  exact(h.px, {VertexClass::PX}, {h.xr, h.yr});
  exact(h.py, {VertexClass::PY}, {h.xr, h.yr});
  return ok;
}

// Condition 1 for relay pair (i, j): some x in D adjacent to both px^1_i and
// px^2_i, some y in D adjacent to both py^1_j and py^2_j, and x ~ y.
inline bool relay_condition_one(const ReducedGraph& rg, const RelayPair& rp, const Bitset& d) {
  const auto& g = rg.graph;
  const auto& px = rg.px[rp.x_group];
  const auto& py = rg.py[rp.y_group];
  Bitset xs = g.row(px[0]) & g.row(px[1]) & d;
  Bitset ys = g.row(py[0]) & g.row(py[1]) & d;
  for (auto x = xs.find_first(); x != Bitset::npos; x = xs.find_next(x)) {
    if (!is_class(rg, static_cast<Vertex>(x), VertexClass::X)) continue;
    if ((g.row(static_cast<Vertex>(x)) & ys).any()) {
      for (auto y = ys.find_first(); y != Bitset::npos; y = ys.find_next(y)) {
        if (is_class(rg, static_cast<Vertex>(y), VertexClass::Y) &&
            g.adjacent(static_cast<Vertex>(x), static_cast<Vertex>(y))) {
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace detail

struct StructureCheckOptions {
  int sampled_subsets = 64;
  std::uint64_t seed = 1;
};

inline StructureReport check_structure(const ReducedGraph& rg, StructureCheckOptions options = {}) {
  StructureReport rep;
  const Graph& g = rg.graph;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  auto count = [&](VertexClass c) { return static_cast<int>(rg.members(c).size()); };

  rep.vertex_count = g.vertex_count() == static_cast<int>(rg.classes.size()) &&
                     count(VertexClass::X) + count(VertexClass::Y) == rg.original_count &&
                     count(VertexClass::PX) == 2 * static_cast<int>(rg.px.size()) &&
                     count(VertexClass::PY) == 2 * static_cast<int>(rg.py.size()) &&
                     count(VertexClass::R) == 2 * static_cast<int>(rg.relays.size()) &&
                     count(VertexClass::H) == 4 && count(VertexClass::M) == 8 &&
                     g.vertex_count() == rg.original_count + 2 * static_cast<int>(rg.px.size()) +
                                             2 * static_cast<int>(rg.py.size()) +
                                             2 * static_cast<int>(rg.relays.size()) + 12;
  if (!rep.vertex_count) rep.failures.emplace_back("vertex count does not match class bookkeeping");

  rep.neighborhoods = detail::neighborhoods_match(rg, rep.failures);

  rep.triangle_free = triangle_free(g);
  if (!rep.triangle_free) rep.failures.emplace_back("gadget contains a triangle");

  const VertexSet hub_list = rg.hub_set();
  const Bitset hubs = to_mask(n, hub_list);
  rep.hubs_dominate = is_dominating(g, hubs);
  if (!rep.hubs_dominate) rep.failures.emplace_back("hubs do not dominate the gadget");

  // Each dummy pair is a couple whose only common neighbour is its hub,
  // each dummy's only neighbour is that hub, H covers it and V - {hub} does not.
  rep.dummies_need_hubs = true;
  const auto hub_arr = rg.hubs.all();
  for (std::size_t k = 0; k < hub_arr.size(); ++k) {
    const auto [d1, d2] = rg.dummies[k];
    const Vertex h = hub_arr[k];
    const Bitset common = g.row(d1) & g.row(d2);
    Bitset without_hub = g.all_vertices();
    without_hub.reset(h);
    const bool ok = is_target_couple(g, d1, d2) && common.count() == 1 && common.test(h) &&
                    g.degree(d1) == 1 && g.degree(d2) == 1 &&
                    couple_covered(g, 2, hubs, {std::min(d1, d2), std::max(d1, d2)}) &&
                    !couple_covered(g, 2, without_hub, {std::min(d1, d2), std::max(d1, d2)});
    if (!ok) {
      rep.dummies_need_hubs = false;
      rep.failures.push_back("dummy pair at hub " + std::to_string(h) + " does not force the hub");
    }
  }
  // Any other couple with both ends in M would be coverable without a hub.
  for (const auto& c : target_couples(g)) {
    if (detail::is_class(rg, c.u, VertexClass::M) && detail::is_class(rg, c.v, VertexClass::M)) {
      const Bitset common = g.row(c.u) & g.row(c.v);
      if (common.count() != 1 || !detail::is_class(rg, static_cast<Vertex>(common.find_first()),
                                                   VertexClass::H)) {
        rep.dummies_need_hubs = false;
        rep.failures.emplace_back("unexpected dummy couple");
      }
    }
  }

  // H covers a couple iff it is not in [PX,PY].
  rep.hubs_cover_except_pxpy = true;
  for (const auto& c : target_couples(g)) {
    const bool pxpy = (detail::is_class(rg, c.u, VertexClass::PX) &&
                       detail::is_class(rg, c.v, VertexClass::PY)) ||
                      (detail::is_class(rg, c.u, VertexClass::PY) &&
                       detail::is_class(rg, c.v, VertexClass::PX));
    if (couple_covered(g, 2, hubs, c) == pxpy) {
      rep.hubs_cover_except_pxpy = false;
      rep.failures.push_back("couple (" + std::to_string(c.u) + "," + std::to_string(c.v) +
                             (pxpy ? ") in [PX,PY] covered by H" : ") not covered by H"));
    }
  }

  // For sampled D: D covers both relay couples iff condition 1 holds or both relays are in D.
  rep.relay_conditions = true;
  Rng rng(options.seed);
  std::vector<Bitset> samples;
  samples.push_back(Bitset(n));
  samples.push_back(g.all_vertices());
  for (int s = 0; s < options.sampled_subsets; ++s) {
    Bitset d(n);
    // Alternate between sparse and dense subsets so both sides of the
    // equivalence get exercised.
    const double p = (s % 2 == 0) ? 0.3 : 0.7;
    for (std::size_t v = 0; v < n; ++v) {
      if (rng.bernoulli(p)) d.set(v);
    }
    samples.push_back(std::move(d));
  }
  for (const auto& d : samples) {
    for (const auto& rp : rg.relays) {
      const auto& px = rg.px[rp.x_group];
      const auto& py = rg.py[rp.y_group];
      const bool covers =
          couple_covered(g, 2, d, {std::min(px[0], py[0]), std::max(px[0], py[0])}) &&
          couple_covered(g, 2, d, {std::min(px[1], py[1]), std::max(px[1], py[1])});
      const bool cond2 = d.test(rp.r1) && d.test(rp.r2);
      if (covers != (detail::relay_condition_one(rg, rp, d) || cond2)) {
        rep.relay_conditions = false;
        rep.failures.push_back("relay equivalence fails for super edge (" +
                               std::to_string(rp.x_group) + "," + std::to_string(rp.y_group) + ")");
      }
    }
  }
  return rep;
}

/// S (ids over X u Y) plus the four hubs.
inline VertexSet lift(const MinRepInstance& inst, const ReducedGraph& rg,
                      std::span<const Vertex> s) {
  if (!validate_minrep(inst, s)) {
    throw Error(Errc::InfeasibleInput, "set does not cover every super edge");
  }
  VertexSet out(s.begin(), s.end());
  const auto h = rg.hubs.all();
  out.insert(out.end(), h.begin(), h.end());
  return normalized(std::move(out));
}

/// Turns a feasible gadget solution inside H u X u Y u R into a MIN-REP
/// solution: lone relays are dropped, each remaining relay pair is swapped for
/// the lexicographically smallest cross edge of its super edge, and H is removed.
inline VertexSet project(const MinRepInstance& inst, const ReducedGraph& rg,
                         std::span<const Vertex> d) {
  const auto n = static_cast<std::size_t>(rg.graph.vertex_count());
  for (Vertex v : d) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw Error(Errc::PreconditionViolated, "vertex " + std::to_string(v) + " not in gadget");
    }
    const auto c = rg.classes[v];
    if (c == VertexClass::PX || c == VertexClass::PY || c == VertexClass::M) {
      throw Error(Errc::PreconditionViolated,
                  "vertex " + std::to_string(v) + " of class " + std::string(to_string(c)));
    }
  }
  Bitset mask = to_mask(n, d);
  if (!validate_1dr(rg.graph, 2, mask).feasible) {
    throw Error(Errc::PreconditionViolated, "set is not feasible on the gadget");
  }

  for (const auto& rp : rg.relays) {
    const bool has1 = mask.test(rp.r1);
    const bool has2 = mask.test(rp.r2);
    if (has1 != has2) {
      mask.reset(rp.r1);
      mask.reset(rp.r2);
    }
  }
  const auto xg = inst.x_group_of();
  const auto yg = inst.y_group_of();
  auto edges = inst.cross_edges;
  std::sort(edges.begin(), edges.end());
  for (const auto& rp : rg.relays) {
    if (!mask.test(rp.r1)) continue;
    const auto it = std::find_if(edges.begin(), edges.end(), [&](const auto& e) {
      return xg[e.first] == rp.x_group && yg[e.second] == rp.y_group;
    });
    mask.reset(rp.r1);
    mask.reset(rp.r2);
    mask.set(static_cast<std::size_t>(it->first));
    mask.set(static_cast<std::size_t>(inst.x_count + it->second));
  }
  for (Vertex h : rg.hubs.all()) mask.reset(h);
  VertexSet out = to_set(mask);
  if (!validate_minrep(inst, out)) {
    throw Error(Errc::PreconditionViolated, "projection is not a MIN-REP solution");
  }
  return out;
}

}  // namespace cdr
