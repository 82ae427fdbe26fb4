#pragma once

// Set cover with alpha-tuples: coverage is defined on element subsets of size
// at most alpha, and a selection covers the union over all its small subsets.
// greedy_select adds, per round, the disjoint tuple with the largest marginal
// gain until every target is covered.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cdr/graph.hpp"

namespace cdr {

using Element = int;
using ElementSet = std::vector<Element>;

/// Calls fn(subset) for every k-subset of `items` in lexicographic order of
/// positions. fn returns false to stop early; the function then returns false.
template <typename Fn>
bool for_each_combination(std::span<const Element> items, int k, Fn&& fn) {
  const int n = static_cast<int>(items.size());
  if (k < 0 || k > n) return true;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  ElementSet subset(static_cast<std::size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i) subset[i] = items[idx[i]];
    if (!fn(std::as_const(subset))) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Abstract instance. The oracle maps a sorted element subset of size at most
/// alpha to the targets it covers. An instance may also carry a closed form of
/// the whole-selection coverage; when present it must agree with the union
/// definition (see union_coverage) and is used to speed up the greedy.
class CoverInstance {
 public:
  using Oracle = std::function<Bitset(std::span<const Element>)>;
  /// (S, known) -> coverage of S, where `known` is already known to be covered by S.
  using SelectionCoverage = std::function<Bitset(std::span<const Element>, const Bitset&)>;

  CoverInstance(int element_count, int target_count, int alpha, Oracle oracle,
                SelectionCoverage selection_coverage = {})
      : element_count_(element_count),
        target_count_(target_count),
        alpha_(alpha),
        oracle_(std::move(oracle)),
        selection_coverage_(std::move(selection_coverage)) {
    if (element_count < 0 || target_count < 0) {
      throw Error(Errc::DomainError, "negative element or target count");
    }
    if (alpha < 1) throw Error(Errc::DomainError, "alpha must be at least 1");
  }

  [[nodiscard]] int element_count() const { return element_count_; }
  [[nodiscard]] int target_count() const { return target_count_; }
  [[nodiscard]] int alpha() const { return alpha_; }
  [[nodiscard]] bool has_selection_coverage() const { return static_cast<bool>(selection_coverage_); }

  /// C(P) for |P| <= alpha.
  [[nodiscard]] Bitset covered_by(std::span<const Element> tuple) const {
    if (static_cast<int>(tuple.size()) > alpha_) {
      throw Error(Errc::DomainError, "tuple larger than alpha");
    }
    Bitset out = oracle_(tuple);
    out.resize(static_cast<std::size_t>(target_count_));
    return out;
  }

  [[nodiscard]] Bitset selection_coverage(std::span<const Element> s, const Bitset& known) const {
    Bitset out = selection_coverage_(s, known);
    out.resize(static_cast<std::size_t>(target_count_));
    return out;
  }

  [[nodiscard]] ElementSet all_elements() const {
    ElementSet all(static_cast<std::size_t>(element_count_));
    for (int i = 0; i < element_count_; ++i) all[i] = i;
    return all;
  }

 private:
  int element_count_;
  int target_count_;
  int alpha_;
  Oracle oracle_;
  SelectionCoverage selection_coverage_;
};

/// Coverage straight from the definition: union of C(P) over every P subset
/// of S with |P| <= alpha, including the empty subset.
inline Bitset union_coverage(const CoverInstance& inst, std::span<const Element> s) {
  const ElementSet sorted = normalized(ElementSet(s.begin(), s.end()));
  Bitset covered(static_cast<std::size_t>(inst.target_count()));
  for (int k = 0; k <= inst.alpha(); ++k) {
    for_each_combination(sorted, k, [&](const ElementSet& p) {
      covered |= inst.covered_by(p);
      return true;
    });
  }
  return covered;
}

inline Bitset coverage_of(const CoverInstance& inst, std::span<const Element> s) {
  if (!inst.has_selection_coverage()) return union_coverage(inst, s);
  const ElementSet sorted = normalized(ElementSet(s.begin(), s.end()));
  return inst.selection_coverage(sorted, Bitset(static_cast<std::size_t>(inst.target_count())));
}

namespace detail {

inline void check_elements(const CoverInstance& inst, std::span<const Element> s) {
  for (Element e : s) {
    if (e < 0 || e >= inst.element_count()) {
      throw Error(Errc::DomainError, "element " + std::to_string(e) + " out of range");
    }
  }
}

// coverage_of(S u P) given covered = coverage_of(S) and P disjoint from S.
// Only tuples meeting P can add targets.
inline Bitset extended_coverage(const CoverInstance& inst, std::span<const Element> s,
                                std::span<const Element> p, const Bitset& covered) {
  if (inst.has_selection_coverage()) {
    ElementSet joined(s.begin(), s.end());
    joined.insert(joined.end(), p.begin(), p.end());
    std::sort(joined.begin(), joined.end());
    return inst.selection_coverage(joined, covered);
  }
  Bitset out = covered;
  const int alpha = inst.alpha();
  for (int kp = 1; kp <= static_cast<int>(p.size()) && kp <= alpha; ++kp) {
    for_each_combination(p, kp, [&](const ElementSet& from_p) {
      for (int ks = 0; ks <= alpha - kp; ++ks) {
        for_each_combination(s, ks, [&](const ElementSet& from_s) {
          ElementSet tuple = from_p;
          tuple.insert(tuple.end(), from_s.begin(), from_s.end());
          std::sort(tuple.begin(), tuple.end());
          out |= inst.covered_by(tuple);
          return true;
        });
      }
      return true;
    });
  }
  return out;
}

}  // namespace detail

/// |coverage_of(S u P)| - |covered|, where covered = coverage_of(S).
inline int marginal_gain(const CoverInstance& inst, std::span<const Element> s,
                         std::span<const Element> p, const Bitset& covered) {
  detail::check_elements(inst, s);
  detail::check_elements(inst, p);
  if (static_cast<int>(p.size()) > inst.alpha()) {
    throw Error(Errc::DomainError, "candidate larger than alpha");
  }
  for (Element e : p) {
    if (std::find(s.begin(), s.end(), e) != s.end()) {
      throw Error(Errc::Overlap, "element " + std::to_string(e) + " already selected");
    }
  }
  const ElementSet sorted_s = normalized(ElementSet(s.begin(), s.end()));
  const ElementSet sorted_p = normalized(ElementSet(p.begin(), p.end()));
  const Bitset after = detail::extended_coverage(inst, sorted_s, sorted_p, covered);
  return static_cast<int>(after.count()) - static_cast<int>(covered.count());
}

/// Targets no selection can cover.
inline std::vector<int> uncoverable_targets(const CoverInstance& inst) {
  const Bitset all = coverage_of(inst, inst.all_elements());
  std::vector<int> out;
  for (int t = 0; t < inst.target_count(); ++t) {
    if (!all.test(static_cast<std::size_t>(t))) out.push_back(t);
  }
  return out;
}

enum class GainRule {
  /// Maximise g(P).
  Absolute,
  /// Maximise g(P) / |P| (the original pair-cover variant).
  PerElement,
};

struct GreedyRound {
  ElementSet chosen;
  int gain = 0;
  int covered_after = 0;
};

struct GreedyTrace {
  std::vector<GreedyRound> rounds;
  int target_count = 0;
  int covered_at_start = 0;

  /// Targets still uncovered after round i (1-based); i = 0 gives the start.
  [[nodiscard]] int uncovered_after(std::size_t i) const {
    return target_count - (i == 0 ? covered_at_start : rounds.at(i - 1).covered_after);
  }
};

struct GreedyResult {
  ElementSet selection;
  GreedyTrace trace;
};

/// Greedy tuple selection. Ties go to the smaller tuple, then the
/// lexicographically smaller sorted tuple.
inline GreedyResult greedy_select(const CoverInstance& inst, GainRule rule = GainRule::Absolute) {
  if (const auto missing = uncoverable_targets(inst); !missing.empty()) {
    std::string ids;
    for (int t : missing) ids += (ids.empty() ? "" : ",") + std::to_string(t);
    throw Error(Errc::Infeasible, "uncoverable targets " + ids);
  }

  GreedyResult result;
  result.trace.target_count = inst.target_count();
  Bitset covered = coverage_of(inst, {});
  result.trace.covered_at_start = static_cast<int>(covered.count());
  std::vector<bool> selected(static_cast<std::size_t>(inst.element_count()), false);

  while (!covered.all() && inst.target_count() > 0) {
    ElementSet remaining;
    for (int e = 0; e < inst.element_count(); ++e) {
      if (!selected[e]) remaining.push_back(e);
    }
    ElementSet best;
    Bitset best_cover;
    int best_gain = 0;
    const auto base = static_cast<int>(covered.count());
    for (int k = 1; k <= inst.alpha(); ++k) {
      for_each_combination(remaining, k, [&](const ElementSet& p) {
        Bitset after = detail::extended_coverage(inst, result.selection, p, covered);
        const int gain = static_cast<int>(after.count()) - base;
        bool better = false;
        if (rule == GainRule::Absolute) {
          better = gain > best_gain;
        } else {
          // gain / |p| > best_gain / |best|, cross-multiplied.
          better = best.empty() ? gain > 0
                                : static_cast<long long>(gain) * static_cast<long long>(best.size()) >
                                      static_cast<long long>(best_gain) * static_cast<long long>(p.size());
        }
        if (better) {
          best = p;
          best_gain = gain;
          best_cover = std::move(after);
        }
        return true;
      });
    }
    if (best_gain <= 0) throw Error(Errc::Infeasible, "no candidate makes progress");
    for (Element e : best) selected[e] = true;
    result.selection.insert(result.selection.end(), best.begin(), best.end());
    std::sort(result.selection.begin(), result.selection.end());
    covered = std::move(best_cover);
    result.trace.rounds.push_back({best, best_gain, static_cast<int>(covered.count())});
  }
  return result;
}

}  // namespace cdr
