#pragma once

#include "repkit/cnf.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace repkit {

// Parsed file before contraction: clauses keep their file order.
struct DimacsFile {
  bool dnf = false;
  Var declared_vars = 0;
  std::size_t declared_clauses = 0;
  std::vector<Clause> clauses;
  std::vector<std::string> comments;

  ClauseSet clause_set() const { return ClauseSet(clauses, dnf); }
};

// Accepts "p cnf n m" and "p dnf n m"; errors carry the line number.
DimacsFile read_dimacs(std::istream &in);
DimacsFile read_dimacs_file(const std::string &path);
ClauseSet parse_dimacs(std::string_view text);

void write_dimacs(std::ostream &out, const ClauseSet &f,
                  std::span<const std::string> comments = {});
std::string emit_dimacs(const ClauseSet &f,
                        std::span<const std::string> comments = {});
void write_dimacs_file(const std::string &path, const ClauseSet &f,
                       std::span<const std::string> comments = {});

} // namespace repkit
