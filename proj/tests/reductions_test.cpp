#include "oracles.hpp"

#include "repkit/error.hpp"
#include "repkit/reductions.hpp"
#include "repkit/translations.hpp"

#include <gtest/gtest.h>

using namespace repkit;

TEST(Reductions, UnitPropagation) {
  ClauseSet f = make_clause_set({{1}, {-1, 2}, {-2, 3, 4}});
  EXPECT_EQ(r_k(f, 1), make_clause_set({{3, 4}}));
  EXPECT_EQ(r_k(f, 0), f);
  EXPECT_TRUE(r_k_refutes(make_clause_set({{1}, {-1, 2}, {-2}}), 1));
  EXPECT_FALSE(r_k_refutes(make_clause_set({{1, 2}, {-1, 2}, {1, -2}, {-1, -2}}), 1));
  EXPECT_TRUE(r_k_refutes(make_clause_set({{1, 2}, {-1, 2}, {1, -2}, {-1, -2}}), 2));
}

TEST(Reductions, ForcedSet) {
  ClauseSet f = make_clause_set({{2}, {1}, {-1, 3}});
  auto forced = r_k_forced(f, 1);
  ASSERT_TRUE(forced);
  std::sort(forced->begin(), forced->end());
  EXPECT_EQ(*forced, (std::vector<Lit>{Lit::pos(1), Lit::pos(2), Lit::pos(3)}));
  EXPECT_EQ(r_k_forced(f, 1), r_k_forced(f, 1));
  EXPECT_FALSE(r_k_forced(make_clause_set({{1}, {-1}}), 1));
}

TEST(Reductions, RefutationLevelsMatchDefinition) {
  std::mt19937 rng(4);
  int unsat = 0;
  for (int i = 0; i < 300; ++i) {
    unsigned n = 2 + i % 5;
    ClauseSet f = oracle::random_clause_set(rng, n, 3 * n + i % 6, 3);
    for (unsigned k = 0; k <= 3; ++k)
      EXPECT_EQ(r_k_refutes(f, k), oracle::refutes(f, k)) << to_string(f);
    if (!oracle::satisfiable(f)) {
      ++unsat;
      EXPECT_EQ(hd_unsat(f), oracle::hd_unsat(f));
      unsigned w = whd_unsat(f);
      EXPECT_TRUE(oracle::k_resolution_refutes(f, w));
      if (w > 0)
        EXPECT_FALSE(oracle::k_resolution_refutes(f, w - 1));
    }
  }
  EXPECT_GT(unsat, 50);
}

TEST(Reductions, RInfinityAppliesForcedLiterals) {
  ClauseSet f = make_clause_set({{1, 2}, {1, -2}, {3, 4}});
  EXPECT_EQ(r_inf(f), make_clause_set({{3, 4}}));
  EXPECT_EQ(r_inf(make_clause_set({{1}, {-1}})), ClauseSet{Clause{}});
}

TEST(Reductions, HdUnsatRejectsSatisfiable) {
  try {
    hd_unsat(make_clause_set({{1, 2}}));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::not_unsatisfiable);
  }
  EXPECT_THROW(whd_unsat(make_clause_set({{1}})), Error);
}

TEST(Reductions, TwoXorSystems) {
  EXPECT_EQ(two_xor_system(3).n(), 5u);
  EXPECT_EQ(two_xor_system(4).n(), 8u);
  EXPECT_EQ(hd_unsat(two_xor_system(3)), 3u);
  EXPECT_EQ(hd_unsat(two_xor_system(4)), 4u);
}

TEST(Resolution, Resolve) {
  auto step = resolve(Clause{1, 2}, Clause{-1, 3});
  ASSERT_TRUE(step);
  EXPECT_EQ(step->pivot, 1u);
  EXPECT_EQ(step->resolvent, (Clause{2, 3}));
  EXPECT_FALSE(resolve(Clause{1, 2}, Clause{-1, -2}));
  EXPECT_FALSE(resolve(Clause{1}, Clause{2}));
}

TEST(Resolution, KResolution) {
  // Needs a resolution step between two binary clauses.
  ClauseSet f = make_clause_set({{1, 2}, {-1, 2}, {1, -2}, {-1, -2}});
  EXPECT_FALSE(k_resolution_refutes(f, 1));
  EXPECT_TRUE(k_resolution_refutes(f, 2));
  EXPECT_EQ(whd_unsat(f), 2u);
  EXPECT_EQ(whd_unsat(ClauseSet{Clause{}}), 0u);
}

TEST(Resolution, PrimeImplicatesMatchEnumeration) {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    ClauseSet f = oracle::random_clause_set(rng, 2 + i % 5, 1 + i % 9, 3);
    ASSERT_EQ(prime_implicates(f), oracle::prime_implicates(f)) << to_string(f);
  }
  EXPECT_EQ(prime_implicates(make_clause_set({{1, 2}, {-1, 2}})),
            make_clause_set({{2}}));
  EXPECT_EQ(prime_implicates(ClauseSet{}), ClauseSet{});
}

TEST(Resolution, EssentialPrimeImplicates) {
  // A cycle of equivalences: every prime implicate follows from the rest.
  ClauseSet f = make_clause_set({{-1, 2}, {-2, 3}, {-3, 1}});
  ClauseSet p = prime_implicates(f);
  EXPECT_EQ(p.c(), 6u);
  EXPECT_EQ(essential_prime_implicates(p), ClauseSet{});
  std::mt19937 rng(6);
  for (int i = 0; i < 100; ++i) {
    ClauseSet g = oracle::random_clause_set(rng, 4, 1 + i % 7, 3);
    ClauseSet pg = prime_implicates(g);
    ClauseSet e = essential_prime_implicates(pg);
    for (const Clause &c : pg)
      EXPECT_EQ(e.contains(c), !oracle::equivalent(pg.without(c), pg));
  }
}

TEST(Resolution, PrimeImplicateBudget) {
  Limits tight;
  tight.resolution_clauses = 5;
  // Doped G_6 has 70 prime implicates.
  std::vector<Clause> g{Clause{-1, -2, -3, -4, -5, -6, 13}};
  for (int v = 1; v <= 6; ++v)
    g.push_back(Clause{v, 6 + v});
  ClauseSet f(g);
  EXPECT_EQ(prime_implicates(f).c(), 70u);
  EXPECT_THROW(prime_implicates(f, tight), Error);
}

TEST(Substitution, RemovesTautologiesAndContracts) {
  ClauseSet f = make_clause_set({{1}, {-2}});
  EXPECT_EQ(substitute(f, Lit::pos(1), Lit::pos(2)), make_clause_set({{2}, {-2}}));
  ClauseSet g = make_clause_set({{1, -2}, {1, 3}});
  EXPECT_EQ(substitute(g, Lit::pos(1), Lit::pos(2)), make_clause_set({{2, 3}}));
  EXPECT_EQ(substitute(g, Lit::neg(3), Lit::pos(1)), make_clause_set({{1, -2}}));
}
