#pragma once

#include <cstddef>
#include <cstdint>

namespace repkit {

// Desk-scale budgets shared by the exponential procedures. Every entry point
// that can blow up takes one of these; the defaults are deliberately small.
struct Limits {
  // DPLL decision nodes per satisfiability call.
  std::uint64_t sat_decisions = 50'000'000;
  // Variables allowed for the max-over-instantiations measures.
  unsigned brute_force_vars = 16;
  // Distinct instantiated clause-sets visited by those measures.
  std::size_t brute_force_states = 20'000'000;
  // Clauses generated during a resolution closure.
  std::size_t resolution_clauses = 1'000'000;
  // Variables for total-assignment enumeration (canonical DNF, model counts).
  unsigned enumeration_vars = 22;
  // Subsets inspected by subset enumerations.
  std::size_t subset_budget = 4'000'000;
  // Vertices for exact transversal / matching search.
  std::size_t hypergraph_vertices = 4096;
  // Search nodes for the branch-and-bound hypergraph procedures.
  std::uint64_t search_nodes = 20'000'000;
};

} // namespace repkit
