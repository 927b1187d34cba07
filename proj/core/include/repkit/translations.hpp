#pragma once

#include "repkit/cnf.hpp"
#include "repkit/limits.hpp"
#include "repkit/mps.hpp"

#include <optional>
#include <span>
#include <vector>

namespace repkit {

enum class TranslationKind { cant, cantm, xor_chain };
const char *translation_name(TranslationKind k);

struct TranslationResult {
  ClauseSet output;
  // (DNF clause, its new variable) in allocation order.
  std::vector<std::pair<Clause, Var>> new_var_map;
  TranslationKind kind = TranslationKind::cant;

  std::vector<Var> new_vars() const;
};

// Tseitin translation of a DNF, one new variable per DNF clause, allocated
// above var(G) in the clause-set's order.
TranslationResult cant(const ClauseSet &g);
// Only the directions v_C -> x and the long clause.
TranslationResult cantm(const ClauseSet &g);

// Multi-clause versions: the DNF clauses are taken in the given order and
// may repeat; new_vars[i] is the variable of g[i].
ClauseSet cant_multi(std::span<const Clause> g, std::span<const Var> new_vars);
ClauseSet cantm_multi(std::span<const Clause> g, std::span<const Var> new_vars);

// For an unsatisfiable hitting base, the hitting DNF {C̄ ∪ {u_C}} equivalent
// to the doped clause-set. Errors with not-hitting otherwise.
ClauseSet negate_doped(const DopedClauseSet &d);

// Chained parity translation of xs[0] ⊕ ... ⊕ xs[n-1] = 0 with auxiliaries
// first_fresh, first_fresh+1, ... (0: above the largest variable in xs).
ClauseSet xor_chain(std::span<const Lit> xs, Var first_fresh = 0);
// Chains for x1 ⊕ ... ⊕ xn = 0 and x1 ⊕ ... ⊕ ¬xn = 0 with disjoint
// auxiliaries; 3n - 4 variables.
ClauseSet two_xor_system(unsigned n);

// Greedy subset of the prime implicates P, equivalent to P with hd <= k.
// Phase one adds clauses by ascending size to the essential ones until the
// target is met, phase two drops clauses by descending size while it stays
// met.
ClauseSet kbase(const ClauseSet &p, unsigned k, const Limits &limits = {});

enum class Uep { neither, uep, strong_uep };
const char *uep_name(Uep u);
// uep: every total assignment over original_vars has at most one extension
// to a model of Fp. strong_uep additionally needs the DNF: every partial
// assignment over original_vars containing a DNF clause has exactly one
// assignment of the new variables alone that satisfies Fp.
Uep has_uep(const ClauseSet &fp, std::span<const Var> original_vars,
            const std::optional<ClauseSet> &dnf = std::nullopt,
            const Limits &limits = {});

} // namespace repkit
