#include "oracles.hpp"

#include "repkit/dimacs.hpp"
#include "repkit/error.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace repkit;

TEST(Dimacs, ParsesSimpleFile) {
  EXPECT_EQ(parse_dimacs("p cnf 2 2\n1 0\n2 0\n"), make_clause_set({{1}, {2}}));
}

TEST(Dimacs, CommentsMultilineClausesAndDnf) {
  std::istringstream in("c hello\nc  k=2\np dnf 3 2\n1 -2\n 0 3 0\n");
  DimacsFile f = read_dimacs(in);
  EXPECT_TRUE(f.dnf);
  EXPECT_EQ(f.comments, (std::vector<std::string>{"hello", " k=2"}));
  ASSERT_EQ(f.clauses.size(), 2u);
  EXPECT_EQ(f.clauses[0], (Clause{1, -2}));
  EXPECT_TRUE(f.clause_set().dnf());
}

TEST(Dimacs, KeepsFileOrderBeforeContraction) {
  std::istringstream in("p cnf 2 3\n2 0\n1 0\n2 0\n");
  DimacsFile f = read_dimacs(in);
  EXPECT_EQ(f.clauses.size(), 3u);
  EXPECT_EQ(f.clause_set().c(), 2u);
}

TEST(Dimacs, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string &text) -> std::size_t {
    try {
      parse_dimacs(text);
    } catch (const ParseError &e) {
      EXPECT_EQ(e.code(), Errc::parse_error);
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("1 0\n"), 1u);
  EXPECT_EQ(line_of("p cnf 2 1\nc x\n1 x 0\n"), 3u);
  EXPECT_EQ(line_of("p cnf 2 1\n3 0\n"), 2u);
  EXPECT_EQ(line_of("p cnf 2 1\n1 -1 0\n"), 2u);
  EXPECT_EQ(line_of("p cnf 2 2\n1 0\n"), 2u);
  EXPECT_EQ(line_of("p cnf 2 1\n1 2\n"), 2u);
  EXPECT_EQ(line_of("p cnf 2\n"), 1u);
  EXPECT_EQ(line_of("c only\n"), 1u);
}

TEST(Dimacs, RoundTrip) {
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    ClauseSet f = oracle::random_clause_set(rng, 6, 1 + i % 10, 4);
    std::vector<std::string> comments{"k=2 h=3 variant=1"};
    std::string text = emit_dimacs(f, comments);
    EXPECT_EQ(parse_dimacs(text), f);
    EXPECT_EQ(emit_dimacs(parse_dimacs(text), comments), text);
  }
  ClauseSet empty_clause{Clause{}};
  EXPECT_EQ(parse_dimacs(emit_dimacs(empty_clause)), empty_clause);
}
