#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "cdr/cover.hpp"
#include "cdr/rng.hpp"
#include "oracles.hpp"

using cdr::Bitset;
using cdr::CoverInstance;
using cdr::ElementSet;
using cdr::Errc;

namespace {

using TupleTable = std::map<ElementSet, std::vector<int>>;

// Instance whose oracle looks tuples up in a table; missing tuples cover nothing.
CoverInstance table_instance(int elements, int targets, int alpha, TupleTable table) {
  return CoverInstance(elements, targets, alpha,
                       [table = std::move(table), targets](std::span<const cdr::Element> p) {
                         Bitset out(static_cast<std::size_t>(targets));
                         const auto it = table.find(ElementSet(p.begin(), p.end()));
                         if (it != table.end()) {
                           for (int t : it->second) out.set(static_cast<std::size_t>(t));
                         }
                         return out;
                       });
}

std::vector<int> ids(const Bitset& b) {
  std::vector<int> out;
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

// a, b, c = 0, 1, 2; targets "1", "2", "3" = 0, 1, 2.
CoverInstance abc_instance() { return table_instance(3, 3, 2, {{{0, 1}, {0, 1}}, {{1, 2}, {2}}}); }

}  // namespace

TEST(CoverageOf, UnionOverSmallSubsets) {
  const auto one = table_instance(2, 2, 2, {{{0, 1}, {0, 1}}});
  EXPECT_EQ(ids(cdr::coverage_of(one, ElementSet{0, 1})), (std::vector<int>{0, 1}));

  const auto two = table_instance(3, 2, 2, {{{0, 1}, {0}}, {{1, 2}, {1}}});
  EXPECT_EQ(ids(cdr::coverage_of(two, ElementSet{0, 1, 2})), (std::vector<int>{0, 1}));

  // Only a triple covers target 0, target 1 comes from a pair.
  const auto three = table_instance(3, 2, 3, {{{0, 1, 2}, {0}}, {{0, 1}, {1}}});
  EXPECT_EQ(ids(cdr::coverage_of(three, ElementSet{0, 1})), (std::vector<int>{1}));
  EXPECT_TRUE(cdr::coverage_of(three, ElementSet{}).none());
}

TEST(MarginalGain, NamedExamples) {
  const auto inst = table_instance(3, 3, 2, {{{0, 1}, {0, 1}}, {{1, 2}, {1}}});
  EXPECT_EQ(cdr::marginal_gain(inst, ElementSet{}, ElementSet{0, 1}, Bitset(3)), 2);
  const Bitset covered = cdr::coverage_of(inst, ElementSet{0, 1});
  EXPECT_EQ(cdr::marginal_gain(inst, ElementSet{0, 1}, ElementSet{2}, covered), 0);

  const auto fresh = table_instance(3, 3, 2, {{{0, 1}, {0, 1}}, {{1, 2}, {2}}});
  EXPECT_EQ(cdr::marginal_gain(fresh, ElementSet{0, 1}, ElementSet{2},
                               cdr::coverage_of(fresh, ElementSet{0, 1})),
            1);
}

TEST(MarginalGain, RejectsOverlap) {
  const auto inst = abc_instance();
  try {
    cdr::marginal_gain(inst, ElementSet{0, 1}, ElementSet{1}, cdr::coverage_of(inst, ElementSet{0, 1}));
    FAIL() << "expected Overlap";
  } catch (const cdr::Error& e) {
    EXPECT_EQ(e.code(), Errc::Overlap);
  }
}

TEST(GreedySelect, PairThenSingleton) {
  // Round 1: {a,b} gains 2 (nothing else gains more); round 2: {c} gains 1
  // through the pair {b,c}, and beats {c} plus nothing larger by size.
  const auto result = cdr::greedy_select(abc_instance());
  EXPECT_EQ(result.selection, (ElementSet{0, 1, 2}));
  ASSERT_EQ(result.trace.rounds.size(), 2u);
  EXPECT_EQ(result.trace.rounds[0].chosen, (ElementSet{0, 1}));
  EXPECT_EQ(result.trace.rounds[0].gain, 2);
  EXPECT_EQ(result.trace.rounds[1].chosen, (ElementSet{2}));
  EXPECT_EQ(result.trace.rounds[1].gain, 1);
  EXPECT_EQ(result.trace.rounds[1].covered_after, 3);
}

TEST(GreedySelect, SingleTargetOneRound) {
  const auto result = cdr::greedy_select(table_instance(2, 1, 2, {{{0, 1}, {0}}}));
  EXPECT_EQ(result.selection, (ElementSet{0, 1}));
  EXPECT_EQ(result.trace.rounds.size(), 1u);
}

TEST(GreedySelect, ReportsUncoverableTargets) {
  const auto inst = table_instance(3, 10, 2, {{{0, 1}, {0, 1, 2, 3, 4, 5, 6, 7, 8}}});
  EXPECT_EQ(cdr::uncoverable_targets(inst), (std::vector<int>{9}));
  try {
    cdr::greedy_select(inst);
    FAIL() << "expected Infeasible";
  } catch (const cdr::Error& e) {
    EXPECT_EQ(e.code(), Errc::Infeasible);
    EXPECT_NE(std::string(e.what()).find("9"), std::string::npos);
  }
}

TEST(GreedySelect, PerElementRuleDiffersOnTies) {
  const auto inst = table_instance(3, 3, 2, {{{0}, {0}}, {{1, 2}, {1, 2}}});
  const auto absolute = cdr::greedy_select(inst, cdr::GainRule::Absolute);
  const auto per_element = cdr::greedy_select(inst, cdr::GainRule::PerElement);
  EXPECT_EQ(absolute.trace.rounds.front().chosen, (ElementSet{1, 2}));
  // 1/1 ties 2/2; the smaller tuple wins.
  EXPECT_EQ(per_element.trace.rounds.front().chosen, (ElementSet{0}));
  EXPECT_EQ(absolute.selection, per_element.selection);
}

// Random abstract instances: coverage, trace invariants and the round bound
// against an exhaustive optimum computed from the tuple table directly.
class CoverProperties : public ::testing::TestWithParam<int> {};

TEST_P(CoverProperties, GreedyInvariantsAndRoundBound) {
  cdr::Rng rng(static_cast<std::uint64_t>(GetParam()) * 104729u);
  const int n = 3 + static_cast<int>(rng.below(4));
  const int t = 2 + static_cast<int>(rng.below(8));
  const int alpha = 2 + static_cast<int>(rng.below(2));
  TupleTable table;
  ElementSet all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[i] = i;
  for (int k = 1; k <= alpha; ++k) {
    cdr::for_each_combination(all, k, [&](const ElementSet& p) {
      for (int target = 0; target < t; ++target) {
        if (rng.bernoulli(k == 1 ? 0.08 : 0.2)) table[p].push_back(target);
      }
      return true;
    });
  }
  const auto inst = table_instance(n, t, alpha, table);

  // Independent whole-selection coverage straight from the table.
  auto covered_targets = [&](const std::vector<int>& s) {
    std::vector<bool> hit(static_cast<std::size_t>(t), false);
    for (const auto& [tuple, targets] : table) {
      if (std::includes(s.begin(), s.end(), tuple.begin(), tuple.end())) {
        for (int x : targets) hit[x] = true;
      }
    }
    return hit;
  };
  for (const auto& s : oracle::all_subsets(n)) {
    const auto expected = covered_targets(s);
    const auto got = cdr::coverage_of(inst, s);
    for (int x = 0; x < t; ++x) EXPECT_EQ(got.test(x), expected[x]);
  }

  const auto opt = oracle::opt_cover(n, [&](const std::vector<int>& s) {
    const auto hit = covered_targets(s);
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  });
  if (!opt) {
    EXPECT_THROW(cdr::greedy_select(inst), cdr::Error);
    return;
  }

  const auto result = cdr::greedy_select(inst);
  EXPECT_EQ(cdr::greedy_select(inst).selection, result.selection);  // deterministic
  EXPECT_TRUE(cdr::coverage_of(inst, result.selection).all());
  int previous = result.trace.covered_at_start;
  for (const auto& round : result.trace.rounds) {
    EXPECT_GT(round.gain, 0);
    EXPECT_LE(static_cast<int>(round.chosen.size()), alpha);
    EXPECT_GT(round.covered_after, previous);
    previous = round.covered_after;
  }
  if (!result.trace.rounds.empty()) {
    EXPECT_EQ(result.trace.rounds.back().covered_after, t);
  }

  const double tuples = std::max(1.0, oracle::binomial(*opt, alpha));
  const auto rounds = static_cast<double>(result.trace.rounds.size());
  EXPECT_LE(rounds, std::ceil(tuples * std::log(static_cast<double>(t))) + 1.0);
  EXPECT_LE(static_cast<double>(result.selection.size()),
            alpha * (std::ceil(tuples * std::log(static_cast<double>(t))) + 1.0));
  for (std::size_t i = 0; i <= result.trace.rounds.size(); ++i) {
    EXPECT_LE(result.trace.uncovered_after(i), t * std::pow(1.0 - 1.0 / tuples, static_cast<double>(i)) + 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, CoverProperties, ::testing::Range(1, 81));

TEST(ForEachCombination, LexicographicOrder) {
  std::vector<ElementSet> seen;
  cdr::for_each_combination(ElementSet{3, 5, 7, 9}, 2, [&](const ElementSet& s) {
    seen.push_back(s);
    return true;
  });
  EXPECT_EQ(seen, (std::vector<ElementSet>{{3, 5}, {3, 7}, {3, 9}, {5, 7}, {5, 9}, {7, 9}}));
}
