#include "oracles.hpp"

#include "repkit/error.hpp"
#include "repkit/hardness.hpp"
#include "repkit/mps.hpp"
#include "repkit/reductions.hpp"
#include "repkit/smu_tree.hpp"

#include <gtest/gtest.h>

using namespace repkit;

TEST(Hardness, SmallExamples) {
  EXPECT_EQ(hd(ClauseSet{}).value, 0u);
  EXPECT_EQ(hd(make_clause_set({{1, 2}})).value, 0u);
  EXPECT_EQ(phd(make_clause_set({{1, 2}})).value, 1u);
  EXPECT_EQ(hd(make_clause_set({{1, 2}, {-1, 2}, {1, -2}, {-1, -2}})).value, 2u);
  EXPECT_EQ(whd(make_clause_set({{1, 2}, {-1, 2}, {1, -2}, {-1, -2}})).value, 2u);
}

TEST(Hardness, WitnessNeedsReportedLevel) {
  ClauseSet f = make_clause_set({{1, 2, 3}, {-1, 2}, {1, -2}, {-1, -2}});
  HardnessReport r = hd(f);
  ASSERT_TRUE(r.witness);
  ClauseSet g = apply(*r.witness, f);
  EXPECT_EQ(hd_unsat(g), r.value);
}

TEST(Hardness, MatchesDefinitions) {
  std::mt19937 rng(8);
  for (int i = 0; i < 150; ++i) {
    unsigned n = 1 + i % 5;
    ClauseSet f = oracle::random_clause_set(rng, n, 1 + i % (3 * n + 2), 3);
    HardnessReport h = hd(f), p = phd(f), w = whd(f);
    ASSERT_TRUE(h.exact && p.exact && w.exact);
    EXPECT_EQ(h.value, oracle::hd(f)) << to_string(f);
    EXPECT_EQ(p.value, oracle::phd(f)) << to_string(f);
    EXPECT_EQ(w.value, oracle::whd(f)) << to_string(f);
    for (unsigned k = 0; k <= 3; ++k)
      EXPECT_EQ(hd_at_most(f, k), h.value <= k);
  }
}

TEST(Hardness, AboveBruteForceLimit) {
  Limits small;
  small.brute_force_vars = 3;
  ClauseSet unsat = make_clause_set({{1, 2}, {-1, 2}, {3, 4}, {-3, 4}, {-2, -4}});
  HardnessReport r = hd(unsat, small);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.value, hd(unsat).value);
  HardnessReport s = hd(make_clause_set({{1, 2, 3, 4}}), small);
  EXPECT_FALSE(s.exact);
  EXPECT_THROW(hd_at_most(unsat, 1, small), Error);
}

TEST(Hardness, DopedTreesFollowStrahlerNumber) {
  for (unsigned leaves = 1; leaves <= 5; ++leaves)
    for (const auto &t : oracle::all_trees(leaves)) {
      EXPECT_EQ(hd(smuo(t)).value, hts(t));
      EXPECT_EQ(hd(dope(smuo(t)).doped).value, hts(t));
    }
}

TEST(Hardness, Relative) {
  ClauseSet f = make_clause_set({{1, 2}, {-1, 2}, {1, -2}, {-1, -2, 3}});
  std::vector<Var> v{3};
  EXPECT_EQ(hd_relative(f, v), 2u);
  std::vector<Var> none;
  EXPECT_EQ(hd_relative(make_clause_set({{1, 2}, {-1, 2}}), none), 0u);
  std::vector<Var> all = f.vars();
  EXPECT_EQ(hd_relative(f, all), hd(f).value);
}

TEST(Hardness, UpperSplitBoundsHardness) {
  std::mt19937 rng(9);
  for (int i = 0; i < 40; ++i) {
    ClauseSet f = oracle::random_clause_set(rng, 5, 12, 3);
    std::vector<Var> vars = f.vars();
    vars.resize(std::min<std::size_t>(vars.size(), 2));
    EXPECT_GE(hd_upper_split(f, vars), hd(f).value);
  }
}

TEST(Hardness, UnionOfVariableDisjointParts) {
  // hd of a variable-disjoint union of satisfiable parts is the maximum of
  // the parts.
  std::mt19937 rng(10);
  for (int i = 0; i < 30; ++i) {
    ClauseSet a = oracle::random_clause_set(rng, 3, 6, 3);
    if (!oracle::satisfiable(a)) {
      --i;
      continue;
    }
    std::vector<Clause> shifted;
    for (const Clause &c : oracle::random_clause_set(rng, 3, 6, 3)) {
      std::vector<Lit> lits;
      for (Lit x : c)
        lits.push_back(Lit::make(x.var() + 3, x.negative()));
      shifted.push_back(Clause(lits));
    }
    ClauseSet b(shifted);
    if (!oracle::satisfiable(b)) {
      --i;
      continue;
    }
    EXPECT_EQ(hd(set_union(a, b)).value, std::max(hd(a).value, hd(b).value));
  }
}
