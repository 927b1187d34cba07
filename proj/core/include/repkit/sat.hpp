#pragma once

#include "repkit/cnf.hpp"
#include "repkit/limits.hpp"

#include <cstdint>
#include <optional>
#include <span>

namespace repkit {

// Plain DPLL with unit propagation, no learning.
bool is_satisfiable(const ClauseSet &f, const Limits &limits = {});
std::optional<PartialAssignment> find_model(const ClauseSet &f,
                                            const Limits &limits = {});

// F ⊨ C, decided as unsatisfiability of φ_C * F.
bool entails(const ClauseSet &f, const Clause &c, const Limits &limits = {});
bool entails_all(const ClauseSet &f, const ClauseSet &g,
                 const Limits &limits = {});
bool equivalent(const ClauseSet &f, const ClauseSet &g,
                const Limits &limits = {});

// Literals x with F ⊨ {x}; empty when F is unsatisfiable.
std::vector<Lit> forced_literals(const ClauseSet &f, const Limits &limits = {});

// Total satisfying assignments over var(F), as DNF clauses.
ClauseSet canonical_dnf(const ClauseSet &f, const Limits &limits = {});

// Number of total assignments over `vars` (which must cover var(F)) that
// satisfy F read as CNF, or as DNF when the flag is set.
std::uint64_t count_models(const ClauseSet &f, std::span<const Var> vars,
                           const Limits &limits = {});

} // namespace repkit
