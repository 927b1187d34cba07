#pragma once

#include "repkit/cnf.hpp"
#include "repkit/limits.hpp"

#include <optional>

namespace repkit {

// r_k: r_0 detects ⊥; r_k for k >= 1 repeatedly sets x -> 1 whenever
// r_{k-1}(<x -> 0> * F) = {⊥}. Literals are scanned in ascending variable
// order, positive first, in repeated passes until a pass forces nothing.
ClauseSet r_k(const ClauseSet &f, unsigned k);
// Literals forced by r_k, in the order they were found; nullopt when r_k
// refutes F.
std::optional<std::vector<Lit>> r_k_forced(const ClauseSet &f, unsigned k);
bool r_k_refutes(const ClauseSet &f, unsigned k);

// Applies every forced literal; {⊥} for unsatisfiable F.
ClauseSet r_inf(const ClauseSet &f, const Limits &limits = {});

// Least k with r_k(F) = {⊥}. Errors with not-unsatisfiable.
unsigned hd_unsat(const ClauseSet &f, const Limits &limits = {});
// Least k such that resolution where one parent has length <= k derives ⊥.
unsigned whd_unsat(const ClauseSet &f, const Limits &limits = {});
bool k_resolution_refutes(const ClauseSet &f, unsigned k,
                          const Limits &limits = {});

struct ResolutionStep {
  Clause left;
  Clause right;
  Var pivot;
  Clause resolvent;
};
// Defined iff the clauses clash in exactly one literal.
std::optional<ResolutionStep> resolve(const Clause &left, const Clause &right);

ClauseSet prime_implicates(const ClauseSet &f, const Limits &limits = {});
ClauseSet essential_prime_implicates(const ClauseSet &f,
                                     const Limits &limits = {});

// F with x replaced by y (and x̄ by ȳ); clauses that become tautological
// are dropped.
ClauseSet substitute(const ClauseSet &f, Lit x, Lit y);

} // namespace repkit
