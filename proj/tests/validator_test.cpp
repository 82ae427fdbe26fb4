#include <gtest/gtest.h>

#include <algorithm>

#include "cdr/rng.hpp"
#include "cdr/validator.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using cdr::Errc;
using cdr::Graph;
using cdr::VertexSet;

namespace {

bool contains(const cdr::Verdict& v, const cdr::Violation& x) {
  return std::find(v.violations.begin(), v.violations.end(), x) != v.violations.end();
}

}  // namespace

TEST(CoupleCovered, NamedExamples) {
  EXPECT_TRUE(cdr::couple_covered(fixtures::star4(), 2, VertexSet{0}, {1, 2}));
  EXPECT_FALSE(cdr::couple_covered(fixtures::p4(), 2, VertexSet{}, {0, 2}));
  EXPECT_TRUE(cdr::couple_covered(fixtures::c5(), 2, VertexSet{0, 1, 2}, {0, 3}));
  EXPECT_FALSE(cdr::couple_covered(fixtures::c5(), 1, VertexSet{0, 1, 2}, {0, 3}));
}

TEST(CoupleCovered, RejectsNonCouples) {
  try {
    cdr::couple_covered(fixtures::p4(), 2, VertexSet{1, 2}, {0, 3});
    FAIL() << "expected NotACouple";
  } catch (const cdr::Error& e) {
    EXPECT_EQ(e.code(), Errc::NotACouple);
  }
}

TEST(Validate1dr, NamedExamples) {
  const auto c5 = fixtures::c5();
  EXPECT_TRUE(cdr::validate_1dr(c5, 2, VertexSet{0, 1, 2}).feasible);
  const auto bad = cdr::validate_1dr(c5, 2, VertexSet{0, 2});
  EXPECT_FALSE(bad.feasible);
  EXPECT_TRUE(contains(bad, cdr::violation::UncoveredCouple{0, 2}));
  EXPECT_TRUE(cdr::validate_1dr(fixtures::star4(), 1, VertexSet{0}).feasible);
}

TEST(Validate1dr, EnumeratesEveryViolation) {
  // P4 with D = {0}: 2 and 3 undominated, both couples uncovered.
  const auto v = cdr::validate_1dr(fixtures::p4(), 2, VertexSet{0});
  EXPECT_EQ(v.violations.size(), 4u);
  EXPECT_TRUE(contains(v, cdr::violation::Undominated{2}));
  EXPECT_TRUE(contains(v, cdr::violation::Undominated{3}));
  EXPECT_TRUE(contains(v, cdr::violation::UncoveredCouple{0, 2}));
  EXPECT_TRUE(contains(v, cdr::violation::UncoveredCouple{1, 3}));
}

TEST(Validate1dr, DominationCanBeSwitchedOff) {
  const auto v = cdr::validate_1dr(fixtures::p4(), 2, VertexSet{1, 2}, {.require_domination = false});
  EXPECT_TRUE(v.feasible);
  const auto w = cdr::validate_1dr(fixtures::star4(), 2, VertexSet{}, {.require_domination = false});
  EXPECT_FALSE(w.feasible);
  EXPECT_EQ(w.violations.size(), 3u);
}

TEST(ValidateCdr, NamedExamples) {
  EXPECT_TRUE(cdr::validate_cdr(fixtures::p4(), 2, VertexSet{1, 2}).feasible);
  EXPECT_TRUE(cdr::validate_cdr(fixtures::p4(), 1, VertexSet{1, 2}).feasible);
  EXPECT_TRUE(cdr::validate_cdr(fixtures::c5(), 2, VertexSet{0, 1, 2}).feasible);
}

TEST(ValidateCdr, ReportsStretchAndConnectivity) {
  const auto c5 = fixtures::c5();
  const auto v = cdr::validate_cdr(c5, 1, VertexSet{0, 1, 2});
  EXPECT_FALSE(v.feasible);
  // m(0,3) = 1 but the only route inside {0,1,2,3} has two internal vertices.
  EXPECT_TRUE(contains(v, cdr::violation::StretchViolated{0, 3, cdr::InternalDistance::finite(1),
                                                          cdr::InternalDistance::finite(2)}));
  const auto split = cdr::validate_cdr(fixtures::p4(), 5, VertexSet{0, 3});
  EXPECT_TRUE(contains(split, cdr::violation::NotConnected{}));
  EXPECT_TRUE(contains(cdr::validate_cdr(c5, 2, VertexSet{}), cdr::violation::NotConnected{}));
}

// Verdicts against the path-enumeration oracle, the forms against each other,
// and the structural consequences of feasibility.
class ValidatorProperties : public ::testing::TestWithParam<int> {};

TEST_P(ValidatorProperties, AgreesWithOracleAndIsMonotone) {
  cdr::Rng rng(static_cast<std::uint64_t>(GetParam()) * 7919u);
  const int n = 2 + static_cast<int>(rng.below(6));
  Graph g;
  do {
    std::vector<cdr::Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng.bernoulli(0.45)) edges.emplace_back(u, v);
      }
    }
    g = Graph::build(n, edges);
  } while (!cdr::is_connected(g));
  for (const auto& d : oracle::all_subsets(n)) {
    for (int alpha : {1, 2, 3}) {
      const auto one = cdr::validate_1dr(g, alpha, d);
      EXPECT_EQ(one.feasible, oracle::feasible_1dr(g, alpha, d));
      EXPECT_EQ(one.feasible, cdr::validate_cdr(g, alpha, d).feasible);
      if (!one.feasible) continue;
      EXPECT_TRUE(cdr::induced_connected(g, d));
      for (int extra = 0; extra < n; ++extra) {
        auto bigger = cdr::normalized([&] {
          auto s = d;
          s.push_back(extra);
          return s;
        }());
        EXPECT_TRUE(cdr::validate_1dr(g, alpha, bigger).feasible);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, ValidatorProperties, ::testing::Range(1, 41));
