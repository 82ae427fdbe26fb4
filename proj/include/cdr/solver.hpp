#pragma once

// Solvers for the couple form of the routing-cost constrained dominating set:
// the tuple-cover greedy, the dominating-set-plus-short-paths construction
// for alpha >= 5, an exhaustive oracle and the best-of combinator.

#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdr/cover.hpp"
#include "cdr/graph.hpp"
#include "cdr/validator.hpp"

namespace cdr {

enum class Algorithm { GreedySct, PathAugment, Exact, BestOf, Trivial };

constexpr std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::GreedySct: return "greedy-sct";
    case Algorithm::PathAugment: return "path-augment";
    case Algorithm::Exact: return "exact";
    case Algorithm::BestOf: return "best-of";
    case Algorithm::Trivial: return "trivial";
  }
  return "unknown";
}

struct Solution {
  VertexSet vertices;
  Algorithm algorithm = Algorithm::Trivial;
  std::optional<int> rounds;
  /// validate_1dr on `vertices`, computed when the solution is made.
  Verdict verdict;
  int alpha = 0;

  [[nodiscard]] std::size_t size() const { return vertices.size(); }
};

inline Solution make_solution(const Graph& g, int alpha, VertexSet vertices, Algorithm algorithm,
                              std::optional<int> rounds = std::nullopt) {
  Solution s;
  s.vertices = normalized(std::move(vertices));
  s.algorithm = algorithm;
  s.rounds = rounds;
  s.alpha = alpha;
  s.verdict = validate_1dr(g, alpha, s.vertices);
  return s;
}

/// Tuple-cover instance of a graph. Targets 0..n-1 are the vertices (to be
/// dominated); target n + k is couples[k].
struct DrCoverInstance {
  CoverInstance instance;
  std::vector<TargetCouple> couples;
  int vertex_targets = 0;
};

inline DrCoverInstance build_cover_instance(const Graph& graph, int alpha) {
  if (alpha < 1) throw Error(Errc::DomainError, "alpha must be at least 1");
  auto g = std::make_shared<const Graph>(graph);
  auto couples = std::make_shared<const std::vector<TargetCouple>>(target_couples(graph));
  const int n = graph.vertex_count();
  const int t = n + static_cast<int>(couples->size());

  // Both routes mark domination, then test each couple inside the selection.
  auto cover = [g, couples, n, t, alpha](std::span<const Element> sel, const Bitset& known) {
    const Bitset mask = to_mask(static_cast<std::size_t>(n), sel);
    Bitset out = known;
    out.resize(static_cast<std::size_t>(t));
    const Bitset dominated = dominated_by(*g, mask);
    for (auto v = dominated.find_first(); v != Bitset::npos; v = dominated.find_next(v)) {
      out.set(v);
    }
    for (std::size_t k = 0; k < couples->size(); ++k) {
      const auto target = static_cast<std::size_t>(n) + k;
      if (out.test(target)) continue;
      const auto& c = (*couples)[k];
      if (constrained_internal_distance(*g, mask, c.u, c.v, alpha).at_most(alpha)) out.set(target);
    }
    return out;
  };

  CoverInstance::Oracle oracle = [cover, t](std::span<const Element> tuple) {
    return cover(tuple, Bitset(static_cast<std::size_t>(t)));
  };
  // A couple is covered by S iff the internal vertices of a shortest path
  // through S (at most alpha of them) cover it, so the union over small tuples
  // collapses to a direct test on S.
  CoverInstance::SelectionCoverage whole = cover;

  return DrCoverInstance{CoverInstance(n, t, alpha, std::move(oracle), std::move(whole)),
                         *couples, n};
}

struct GreedyRun {
  Solution solution;
  GreedyTrace trace;
};

inline GreedyRun greedy_run(const Graph& g, int alpha, GainRule rule = GainRule::Absolute) {
  const auto built = build_cover_instance(g, alpha);
  auto result = greedy_select(built.instance, rule);
  const int rounds = static_cast<int>(result.trace.rounds.size());
  return {make_solution(g, alpha, std::move(result.selection), Algorithm::GreedySct, rounds),
          std::move(result.trace)};
}

inline Solution solve_greedy(const Graph& g, int alpha, GainRule rule = GainRule::Absolute) {
  return greedy_run(g, alpha, rule).solution;
}

/// Classic greedy over closed neighbourhoods; ties go to the lowest id.
inline VertexSet greedy_dominating_set(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Bitset dominated(n);
  VertexSet chosen;
  while (!dominated.all()) {
    Vertex best = -1;
    std::size_t best_gain = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const std::size_t gain = (g.closed_row(v) - dominated).count();
      if (gain > best_gain) {
        best = v;
        best_gain = gain;
      }
    }
    chosen.push_back(best);
    dominated |= g.closed_row(best);
  }
  return normalized(std::move(chosen));
}

struct PathAugmentRun {
  Solution solution;
  /// The dominating set the augmentation started from.
  VertexSet dominating_set;
};

inline PathAugmentRun path_augment_run(const Graph& g, int alpha) {
  if (alpha < 5) {
    throw Error(Errc::AlphaTooSmall, "path augmentation needs alpha >= 5, got " +
                                         std::to_string(alpha));
  }
  VertexSet d = greedy_dominating_set(g);
  Bitset augmented = to_mask(static_cast<std::size_t>(g.vertex_count()), d);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto dist = bfs_edge_distances(g, d[i]);
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const int edges = dist[d[j]];
      if (edges < 2 || edges > 4) continue;  // m = edges - 1 must be in 1..3
      const auto path = lex_shortest_path(g, d[i], d[j]);
      for (std::size_t k = 1; k + 1 < path.size(); ++k) augmented.set(path[k]);
    }
  }
  return {make_solution(g, alpha, to_set(augmented), Algorithm::PathAugment), std::move(d)};
}

inline Solution solve_path_augment(const Graph& g, int alpha) {
  return path_augment_run(g, alpha).solution;
}

namespace detail {

// Smallest k-subset (lexicographically, trying k = 0, 1, ...) accepted by `ok`.
template <typename Accept>
VertexSet smallest_accepted(const Graph& g, int max_n, Accept&& ok) {
  const int n = g.vertex_count();
  if (n > max_n) {
    throw Error(Errc::TooLarge, "exhaustive search limited to " + std::to_string(max_n) +
                                    " vertices, graph has " + std::to_string(n));
  }
  ElementSet all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[i] = i;
  for (int k = 0; k <= n; ++k) {
    VertexSet found;
    bool hit = false;
    for_each_combination(all, k, [&](const ElementSet& subset) {
      if (ok(to_mask(static_cast<std::size_t>(n), subset))) {
        found = subset;
        hit = true;
        return false;
      }
      return true;
    });
    if (hit) return found;
  }
  throw Error(Errc::Infeasible, "no subset is feasible");
}

}  // namespace detail

inline constexpr int kDefaultExactMaxN = 16;

/// Minimum-cardinality feasible set by exhaustive enumeration; among the
/// minimum ones, the lexicographically smallest.
inline Solution exact_opt(const Graph& g, int alpha, int max_n = kDefaultExactMaxN) {
  if (alpha < 1) throw Error(Errc::DomainError, "alpha must be at least 1");
  const auto couples = target_couples(g);
  auto feasible = [&](const Bitset& mask) {
    if (!is_dominating(g, mask)) return false;  // necessary, and cheap
    for (const auto& c : couples) {
      if (!constrained_internal_distance(g, mask, c.u, c.v, alpha).at_most(alpha)) return false;
    }
    return true;
  };
  return make_solution(g, alpha, detail::smallest_accepted(g, max_n, feasible), Algorithm::Exact);
}

/// Minimum dominating set by exhaustive enumeration.
inline VertexSet exact_dominating_set(const Graph& g, int max_n = kDefaultExactMaxN) {
  return detail::smallest_accepted(g, max_n,
                                   [&](const Bitset& mask) { return is_dominating(g, mask); });
}

namespace detail {
inline void check_ratio_domain(double n, double t, int alpha) {
  if (!(n >= 2) || !(t >= 2) || alpha < 2) {
    throw Error(Errc::DomainError, "ratio needs n >= 2, t >= 2, alpha >= 2");
  }
}
}  // namespace detail

/// n^(1 - 1/alpha) * (alpha ln t)^(1/alpha).
inline double theoretical_ratio(double n, double t, int alpha) {
  detail::check_ratio_domain(n, t, alpha);
  const double a = alpha;
  return std::pow(n, 1.0 - 1.0 / a) * std::pow(a * std::log(t), 1.0 / a);
}

/// c = 1/alpha - ln ln(t^alpha) / (alpha ln n), the optimum-size threshold
/// exponent at which both branches of the ratio analysis meet.
inline double ratio_exponent(double n, double t, int alpha) {
  detail::check_ratio_domain(n, t, alpha);
  const double a = alpha;
  return 1.0 / a - std::log(a * std::log(t)) / (a * std::log(n));
}

/// Runs every applicable solver plus the trivial solution V and keeps the
/// smallest feasible one.
inline Solution solve_best(const Graph& g, int alpha) {
  std::vector<Solution> candidates;
  candidates.push_back(solve_greedy(g, alpha));
  if (alpha >= 5) candidates.push_back(solve_path_augment(g, alpha));
  candidates.push_back(make_solution(g, alpha, to_set(g.all_vertices()), Algorithm::Trivial));

  const Solution* best = nullptr;
  for (const auto& c : candidates) {
    if (c.verdict.feasible && (best == nullptr || c.size() < best->size())) best = &c;
  }
  if (best == nullptr) throw Error(Errc::Infeasible, "no candidate solution is feasible");
  Solution out = *best;
  out.algorithm = Algorithm::BestOf;
  return out;
}

}  // namespace cdr
