#pragma once

#include "repkit/cnf.hpp"
#include "repkit/limits.hpp"

#include <optional>
#include <span>
#include <vector>

namespace repkit {

// Literals of F whose complement does not occur in F.
Clause pure_clause(const ClauseSet &f);

struct DopedClauseSet {
  ClauseSet base;
  ClauseSet doped;
  // (base clause, its doping variable), in allocation order.
  std::vector<std::pair<Clause, Var>> doping;

  Var doping_var(const Clause &c) const;
  std::optional<Clause> base_clause(Var u) const;
  bool is_doping_var(Var u) const;
  std::vector<Var> doping_vars() const;
};

// Fresh variables above var(F), allocated in the clause-set's order.
DopedClauseSet dope(const ClauseSet &f);
// Same, allocated in the given order starting at first_fresh (0: above the
// largest variable). Clauses must be distinct.
DopedClauseSet dope_ordered(std::span<const Clause> clauses, Var first_fresh = 0);

struct MpsWitness {
  ClauseSet subset;
  Clause derived;

  friend bool operator==(const MpsWitness &a, const MpsWitness &b) {
    return a.subset == b.subset && a.derived == b.derived;
  }
  friend bool operator<(const MpsWitness &a, const MpsWitness &b) {
    if (a.subset.clauses() != b.subset.clauses())
      return a.subset.clauses() < b.subset.clauses();
    return a.derived < b.derived;
  }
};

bool is_minimally_unsatisfiable(const ClauseSet &f, const Limits &limits = {});
// Distinct clauses of F keep distinct images under phi.
bool is_contraction_free(const PartialAssignment &phi, const ClauseSet &f);

std::optional<MpsWitness> is_mps(const ClauseSet &f, const Limits &limits = {});
// Every minimal premise set of F, obtained from the prime implicates of the
// doped clause-set. Sorted.
std::vector<MpsWitness> mps_subsets(const ClauseSet &f, const Limits &limits = {});
bool is_total_mps(const ClauseSet &f, const Limits &limits = {});
bool has_max_prime_implicates(const ClauseSet &f, const Limits &limits = {});

// Minimal elements of {puc(F') : F' ⊆ F, 1 <= c(F') <= K, F' ⊨ puc(F')}.
ClauseSet prime_implicates_bounded(const ClauseSet &f, unsigned k,
                                   const Limits &limits = {});

} // namespace repkit
