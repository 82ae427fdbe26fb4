#pragma once

// Feasibility checks for the two equivalent problem forms: the routing-cost
// constrained connected dominating set (checked on every non-adjacent pair)
// and the couple form (domination plus coverage of every target couple).

#include <string>
#include <variant>
#include <vector>

#include "cdr/graph.hpp"

namespace cdr {

namespace violation {
struct Undominated {
  Vertex vertex;
  bool operator==(const Undominated&) const = default;
};
struct NotConnected {
  bool operator==(const NotConnected&) const = default;
};
struct UncoveredCouple {
  Vertex u;
  Vertex v;
  bool operator==(const UncoveredCouple&) const = default;
};
struct StretchViolated {
  Vertex u;
  Vertex v;
  InternalDistance m;
  InternalDistance m_d;
  bool operator==(const StretchViolated&) const = default;
};
}  // namespace violation

using Violation = std::variant<violation::Undominated, violation::NotConnected,
                               violation::UncoveredCouple, violation::StretchViolated>;

inline std::string describe(const Violation& v) {
  struct Visitor {
    std::string operator()(const violation::Undominated& x) const {
      return "Undominated(" + std::to_string(x.vertex) + ")";
    }
    std::string operator()(const violation::NotConnected&) const { return "NotConnected"; }
    std::string operator()(const violation::UncoveredCouple& x) const {
      return "UncoveredCouple(" + std::to_string(x.u) + "," + std::to_string(x.v) + ")";
    }
    std::string operator()(const violation::StretchViolated& x) const {
      return "StretchViolated(" + std::to_string(x.u) + "," + std::to_string(x.v) + "," +
             x.m.str() + "," + x.m_d.str() + ")";
    }
  };
  return std::visit(Visitor{}, v);
}

/// feasible holds exactly when violations is empty.
struct Verdict {
  bool feasible = true;
  std::vector<Violation> violations;

  void add(Violation v) {
    feasible = false;
    violations.push_back(std::move(v));
  }
};

/// Whether S covers the couple, i.e. m^S(u, v) <= alpha.
inline bool couple_covered(const Graph& g, int alpha, const Bitset& s, TargetCouple c) {
  if (!is_target_couple(g, c.u, c.v)) {
    throw Error(Errc::NotACouple,
                "(" + std::to_string(c.u) + "," + std::to_string(c.v) + ") is not a target couple");
  }
  return constrained_internal_distance(g, s, c.u, c.v, alpha).at_most(alpha);
}

inline bool couple_covered(const Graph& g, int alpha, std::span<const Vertex> s, TargetCouple c) {
  return couple_covered(g, alpha, to_mask(static_cast<std::size_t>(g.vertex_count()), s), c);
}

struct CoupleCheckOptions {
  /// Off for the couples-only relaxation, where D need not dominate.
  bool require_domination = true;
};

inline Verdict validate_1dr(const Graph& g, int alpha, const Bitset& d,
                            CoupleCheckOptions options = {}) {
  Verdict verdict;
  if (options.require_domination) {
    const Bitset dominated = dominated_by(g, d);
    for (auto v = 0; v < g.vertex_count(); ++v) {
      if (!dominated.test(v)) verdict.add(violation::Undominated{v});
    }
  }
  // Couples touching D are checked like any other.
  for (const auto& c : target_couples(g)) {
    if (!constrained_internal_distance(g, d, c.u, c.v, alpha).at_most(alpha)) {
      verdict.add(violation::UncoveredCouple{c.u, c.v});
    }
  }
  return verdict;
}

inline Verdict validate_1dr(const Graph& g, int alpha, std::span<const Vertex> d,
                            CoupleCheckOptions options = {}) {
  return validate_1dr(g, alpha, to_mask(static_cast<std::size_t>(g.vertex_count()), d), options);
}

/// Checks the definition directly over all non-adjacent pairs; it never
/// reduces to the couple form.
inline Verdict validate_cdr(const Graph& g, int alpha, const Bitset& d) {
  Verdict verdict;
  const Bitset dominated = dominated_by(g, d);
  for (auto v = 0; v < g.vertex_count(); ++v) {
    if (!dominated.test(v)) verdict.add(violation::Undominated{v});
  }
  if (d.none() || !induced_connected(g, d)) verdict.add(violation::NotConnected{});

  const DistanceTable m(g);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (g.adjacent(u, v)) continue;
      const auto base = m(u, v);
      if (!base.is_finite()) continue;  // different components: no finite bound applies
      const auto through_d = constrained_internal_distance(g, d, u, v);
      if (!through_d.at_most(static_cast<long long>(alpha) * base.value())) {
        verdict.add(violation::StretchViolated{u, v, base, through_d});
      }
    }
  }
  return verdict;
}

inline Verdict validate_cdr(const Graph& g, int alpha, std::span<const Vertex> d) {
  return validate_cdr(g, alpha, to_mask(static_cast<std::size_t>(g.vertex_count()), d));
}

}  // namespace cdr
