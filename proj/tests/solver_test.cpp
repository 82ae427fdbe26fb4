#include <gtest/gtest.h>

#include <cmath>

#include "cdr/generators.hpp"
#include "cdr/rng.hpp"
#include "cdr/solver.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using cdr::Errc;
using cdr::Graph;
using cdr::VertexSet;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const cdr::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no cdr::Error thrown";
  return Errc::DomainError;
}

}  // namespace

TEST(BuildCoverInstance, TargetsAndCoverage) {
  const auto star = cdr::build_cover_instance(fixtures::star4(), 2);
  EXPECT_EQ(star.instance.target_count(), 4 + 3);
  EXPECT_EQ(star.vertex_targets, 4);

  const auto p4 = cdr::build_cover_instance(fixtures::p4(), 2);
  EXPECT_EQ(p4.instance.target_count(), 6);
  EXPECT_EQ(p4.instance.covered_by(VertexSet{1, 2}).count(), 6u);

  const auto c5 = cdr::build_cover_instance(fixtures::c5(), 2);
  EXPECT_EQ(c5.instance.target_count(), 10);
  EXPECT_EQ(code_of([] { cdr::build_cover_instance(fixtures::p4(), 0); }), Errc::DomainError);
}

TEST(SolveGreedy, NamedExamples) {
  const auto star = cdr::greedy_run(fixtures::star4(), 1);
  EXPECT_EQ(star.solution.vertices, (VertexSet{0}));
  EXPECT_EQ(star.solution.rounds, 1);
  EXPECT_TRUE(star.solution.verdict.feasible);

  const auto p4 = cdr::solve_greedy(fixtures::p4(), 1);
  EXPECT_EQ(p4.vertices, (VertexSet{1, 2}));
  EXPECT_EQ(p4.algorithm, cdr::Algorithm::GreedySct);

  const auto c5 = cdr::solve_greedy(fixtures::c5(), 2);
  EXPECT_TRUE(c5.verdict.feasible);
  EXPECT_GE(c5.size(), 3u);
}

TEST(GreedyDominatingSet, LowestIdOnTies) {
  // After 1 is chosen, 2 and 3 each dominate only vertex 3; 2 is lower.
  EXPECT_EQ(cdr::greedy_dominating_set(fixtures::p4()), (VertexSet{1, 2}));
  EXPECT_EQ(cdr::greedy_dominating_set(fixtures::k4()), (VertexSet{0}));
  EXPECT_EQ(cdr::greedy_dominating_set(fixtures::p7()), (VertexSet{1, 4, 5}));
}

TEST(PathAugment, FillsShortGaps) {
  const auto run = cdr::path_augment_run(fixtures::p7(), 5);
  EXPECT_EQ(run.dominating_set, (VertexSet{1, 4, 5}));
  EXPECT_EQ(run.solution.vertices, (VertexSet{1, 2, 3, 4, 5}));
  EXPECT_TRUE(run.solution.verdict.feasible);
  EXPECT_TRUE(cdr::validate_cdr(fixtures::p7(), 5, run.solution.vertices).feasible);
  EXPECT_EQ(code_of([] { cdr::solve_path_augment(fixtures::p7(), 4); }), Errc::AlphaTooSmall);
}

TEST(ExactOpt, NamedExamples) {
  const auto c5 = cdr::exact_opt(fixtures::c5(), 2);
  EXPECT_EQ(c5.vertices, (VertexSet{0, 1, 2}));
  EXPECT_EQ(c5.algorithm, cdr::Algorithm::Exact);
  EXPECT_EQ(cdr::exact_opt(fixtures::k4(), 2).vertices, (VertexSet{0}));
  EXPECT_EQ(cdr::exact_opt(fixtures::p4(), 3).vertices, (VertexSet{1, 2}));
  EXPECT_EQ(cdr::exact_dominating_set(fixtures::c5()), (VertexSet{0, 2}));

  cdr::GenParams p;
  p.n = 30;
  const auto big = cdr::gen_graph(cdr::Family::Path, p, 0);
  EXPECT_EQ(code_of([&] { cdr::exact_opt(big, 2); }), Errc::TooLarge);
}

TEST(TheoreticalRatio, ValuesAndDomain) {
  // sqrt(100) * sqrt(2 ln 100), evaluated independently.
  EXPECT_NEAR(cdr::theoretical_ratio(100, 100, 2), 30.34854258770293, 1e-9);
  EXPECT_NEAR(cdr::theoretical_ratio(100, 100, 2), 10.0 * std::sqrt(2.0 * std::log(100.0)), 1e-12);
  EXPECT_NEAR(cdr::theoretical_ratio(1000, 50, 3),
              std::cbrt(1000.0 * 1000.0) * std::cbrt(3.0 * std::log(50.0)), 1e-9);
  EXPECT_EQ(code_of([] { cdr::theoretical_ratio(1, 10, 2); }), Errc::DomainError);
  EXPECT_EQ(code_of([] { cdr::theoretical_ratio(10, 1, 2); }), Errc::DomainError);
  EXPECT_EQ(code_of([] { cdr::theoretical_ratio(10, 10, 1); }), Errc::DomainError);
}

TEST(TheoreticalRatio, BalancesBothSides) {
  for (double n : {10.0, 100.0, 1e4, 1e6}) {
    for (double t : {2.0, 10.0, 1e3}) {
      for (int alpha : {2, 3, 5, 8}) {
        const double c = cdr::ratio_exponent(n, t, alpha);
        const double lhs = std::pow(n, 1.0 - c);
        const double rhs = std::sqrt(n * alpha * std::pow(n, c * (alpha - 2)) * std::log(t));
        EXPECT_LT(std::abs(lhs - rhs) / rhs, 1e-9) << n << " " << t << " " << alpha;
        EXPECT_NEAR(lhs, cdr::theoretical_ratio(n, t, alpha), 1e-9 * lhs);
      }
    }
  }
}

TEST(SolveBest, PicksSmallestFeasible) {
  const auto best = cdr::solve_best(fixtures::p7(), 5);
  EXPECT_EQ(best.algorithm, cdr::Algorithm::BestOf);
  EXPECT_TRUE(best.verdict.feasible);
  EXPECT_LE(best.size(), cdr::solve_greedy(fixtures::p7(), 5).size());
  EXPECT_LE(best.size(), cdr::solve_path_augment(fixtures::p7(), 5).size());
}

// Random connected graphs: every solver is feasible, the exact search matches
// brute force, and the selection shortcut matches the subset-union definition.
class SolverProperties : public ::testing::TestWithParam<int> {};

TEST_P(SolverProperties, FeasibleAndDominatedByOptimum) {
  cdr::Rng rng(static_cast<std::uint64_t>(GetParam()) * 31337u);
  cdr::GenParams params;
  params.n = 3 + static_cast<int>(rng.below(6));
  params.p = 0.25 + 0.4 * rng.uniform();
  const Graph g = cdr::gen_graph(cdr::Family::Gnp, params, rng.next());

  const auto ds = cdr::exact_dominating_set(g);
  for (int alpha : {1, 2, 3, 5}) {
    const auto built = cdr::build_cover_instance(g, alpha);
    for (int trial = 0; trial < 8; ++trial) {
      VertexSet s;
      for (int v = 0; v < params.n; ++v) {
        if (rng.bernoulli(0.5)) s.push_back(v);
      }
      EXPECT_EQ(cdr::union_coverage(built.instance, s), cdr::coverage_of(built.instance, s));
    }

    const auto exact = cdr::exact_opt(g, alpha);
    EXPECT_TRUE(exact.verdict.feasible);
    EXPECT_EQ(static_cast<int>(exact.size()), oracle::opt_1dr(g, alpha));
    EXPECT_LE(ds.size(), exact.size());

    for (auto rule : {cdr::GainRule::Absolute, cdr::GainRule::PerElement}) {
      const auto run = cdr::greedy_run(g, alpha, rule);
      EXPECT_TRUE(run.solution.verdict.feasible);
      EXPECT_TRUE(oracle::feasible_1dr(g, alpha, run.solution.vertices));
      EXPECT_LE(exact.size(), run.solution.size());
      if (rule == cdr::GainRule::Absolute) {
        const double t = built.instance.target_count();
        const double tuples = std::max(1.0, oracle::binomial(static_cast<int>(exact.size()), alpha));
        EXPECT_LE(static_cast<double>(run.trace.rounds.size()), std::ceil(tuples * std::log(t)) + 1.0);
      }
    }

    if (alpha >= 5) {
      const auto run = cdr::path_augment_run(g, alpha);
      EXPECT_TRUE(run.solution.verdict.feasible);
      EXPECT_TRUE(cdr::validate_cdr(g, alpha, run.solution.vertices).feasible);
      const double d = static_cast<double>(run.dominating_set.size());
      EXPECT_LE(static_cast<double>(run.solution.size()), d + 3.0 * d * (d - 1.0) / 2.0);
      EXPECT_LE(exact.size(), run.solution.size());
    }
    const auto best = cdr::solve_best(g, alpha);
    EXPECT_TRUE(best.verdict.feasible);
    EXPECT_LE(exact.size(), best.size());
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SolverProperties, ::testing::Range(1, 41));
