#pragma once

#include "repkit/cnf.hpp"
#include "repkit/limits.hpp"
#include "repkit/smu_tree.hpp"

#include <span>
#include <vector>

namespace repkit {

// C' ∈ E^k_C: C' does not clash with C and adds at most k literals to it.
bool trigger_member(const Clause &c_prime, const Clause &c, unsigned k);

// Vertices are the given prime implicates (sorted); edges[i] lists the
// vertex ids of E^k for vertices[i].
struct TriggerHypergraph {
  unsigned k = 0;
  std::vector<Clause> vertices;
  std::vector<std::vector<std::size_t>> edges;

  std::size_t index_of(const Clause &c) const;
  std::vector<Clause> edge_clauses(const Clause &c) const;
};

// P is trusted to be the set of prime implicates.
TriggerHypergraph trigger_hypergraph(const ClauseSet &p, unsigned k);
// Recomputes the prime implicates of F first.
TriggerHypergraph trigger_hypergraph_of(const ClauseSet &f, unsigned k,
                                        const Limits &limits = {});

bool is_transversal(const TriggerHypergraph &h,
                    std::span<const std::size_t> vertices);
// F as a set of vertices; clauses of F that are not vertices are ignored.
bool is_transversal(const TriggerHypergraph &h, const ClauseSet &f);

struct TransversalResult {
  std::size_t value = 0;
  // Disjoint-edge lower bound found along the way.
  std::size_t lower_bound = 0;
  std::vector<std::size_t> witness;
  // False when the search budget ran out: value is then a greedy upper
  // bound.
  bool exact = true;
};
TransversalResult transversal_number(const TriggerHypergraph &h,
                                     const Limits &limits = {});

struct MatchingResult {
  std::size_t value = 0;
  // Ids of pairwise disjoint edges (by the vertex that owns the edge).
  std::vector<std::size_t> witness;
  bool exact = true;
};
MatchingResult matching_number(const TriggerHypergraph &h,
                               const Limits &limits = {});

struct DisjointEdgeCertificate {
  unsigned k = 0;
  // Leaf numbers (1-based), sorted.
  std::vector<std::vector<std::size_t>> leaf_sets;
  // C_V for each leaf set, over dope_tree(T).
  std::vector<Clause> clauses;
  // E^k_{C_V} in the trigger hypergraph of dope_tree(T); filled only when
  // the edges were checked.
  std::vector<std::vector<Clause>> edges;
  bool edges_checked = false;
  bool edges_disjoint = false;
};

bool depth_k_incomparable(const LabeledBinaryTree &t, unsigned k,
                          std::span<const std::size_t> a,
                          std::span<const std::size_t> b);

// Sperner family of size binom(m, floor(m/2)), m the least leaf count of a
// depth-k subtree. Edges are built and checked when the tree has at most
// max_edge_leaves leaves. Errors with depth-precondition-violated when a
// leaf has depth <= k.
DisjointEdgeCertificate depth_k_incomparable_family(const LabeledBinaryTree &t,
                                                    unsigned k,
                                                    std::size_t max_edge_leaves = 20);

} // namespace repkit
