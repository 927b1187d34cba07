#include "repkit/mps.hpp"

#include "repkit/error.hpp"
#include "repkit/reductions.hpp"
#include "repkit/sat.hpp"
#include "repkit/smu_tree.hpp"

#include <algorithm>

namespace repkit {

Clause pure_clause(const ClauseSet &f) {
  std::vector<Lit> all;
  for (const Clause &c : f)
    all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<Lit> pure;
  for (Lit x : all)
    if (!std::binary_search(all.begin(), all.end(), ~x))
      pure.push_back(x);
  return Clause::from_sorted(std::move(pure));
}

Var DopedClauseSet::doping_var(const Clause &c) const {
  for (const auto &[clause, u] : doping)
    if (clause == c)
      return u;
  throw Error(Errc::invalid_input, "clause " + to_string(c) + " is not doped");
}

std::optional<Clause> DopedClauseSet::base_clause(Var u) const {
  for (const auto &[clause, v] : doping)
    if (v == u)
      return clause;
  return std::nullopt;
}

bool DopedClauseSet::is_doping_var(Var u) const {
  return base_clause(u).has_value();
}

std::vector<Var> DopedClauseSet::doping_vars() const {
  std::vector<Var> out;
  for (const auto &entry : doping)
    out.push_back(entry.second);
  return out;
}

DopedClauseSet dope_ordered(std::span<const Clause> clauses, Var first_fresh) {
  DopedClauseSet out;
  out.base = ClauseSet(std::vector<Clause>(clauses.begin(), clauses.end()));
  if (out.base.c() != clauses.size())
    throw Error(Errc::invalid_input, "doping needs distinct clauses");
  Var next = first_fresh ? first_fresh : out.base.max_var() + 1;
  if (next <= out.base.max_var())
    throw Error(Errc::invalid_input, "doping variables must be fresh");
  std::vector<Clause> doped;
  doped.reserve(clauses.size());
  for (const Clause &c : clauses) {
    std::vector<Lit> lits = c.lits();
    lits.push_back(Lit::pos(next));
    doped.push_back(Clause::from_sorted(std::move(lits)));
    out.doping.emplace_back(c, next);
    ++next;
  }
  out.doped = ClauseSet(std::move(doped));
  return out;
}

DopedClauseSet dope(const ClauseSet &f) { return dope_ordered(f.clauses()); }

bool is_minimally_unsatisfiable(const ClauseSet &f, const Limits &limits) {
  if (is_satisfiable(f, limits))
    return false;
  for (const Clause &c : f)
    if (!is_satisfiable(f.without(c), limits))
      return false;
  return true;
}

bool is_contraction_free(const PartialAssignment &phi, const ClauseSet &f) {
  auto images = apply_multi(phi, f.clauses());
  std::vector<Clause> cs;
  for (auto &t : images)
    cs.push_back(t.clause);
  std::sort(cs.begin(), cs.end());
  return std::adjacent_find(cs.begin(), cs.end()) == cs.end();
}

std::optional<MpsWitness> is_mps(const ClauseSet &f, const Limits &limits) {
  if (f.empty())
    return std::nullopt;
  Clause p = pure_clause(f);
  PartialAssignment phi = PartialAssignment::falsifying(p);
  if (!is_contraction_free(phi, f))
    return std::nullopt;
  if (!is_minimally_unsatisfiable(apply(phi, f), limits))
    return std::nullopt;
  return MpsWitness{f, p};
}

std::vector<MpsWitness> mps_subsets(const ClauseSet &f, const Limits &limits) {
  DopedClauseSet d = dope(f);
  ClauseSet primes = prime_implicates(d.doped, limits);
  std::vector<MpsWitness> out;
  for (const Clause &c : primes) {
    std::vector<Clause> subset;
    std::vector<Lit> base;
    for (Lit x : c) {
      if (auto orig = d.base_clause(x.var()))
        subset.push_back(*orig);
      else
        base.push_back(x);
    }
    out.push_back({ClauseSet(std::move(subset)), Clause::from_sorted(std::move(base))});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_total_mps(const ClauseSet &f, const Limits &limits) {
  (void)limits;
  if (f.empty())
    return false;
  PartialAssignment phi = PartialAssignment::falsifying(pure_clause(f));
  if (!is_contraction_free(phi, f))
    return false;
  try {
    tsmuo(apply(phi, f));
  } catch (const Error &e) {
    if (e.code() == Errc::not_in_smu1)
      return false;
    throw;
  }
  return true;
}

bool has_max_prime_implicates(const ClauseSet &f, const Limits &limits) {
  // {⊥} has the single prime implicate ⊥ = 2^1 - 1 although ⊥ has no
  // private literal.
  if (f.c() == 1 && f.has_empty_clause())
    return true;
  if (!is_total_mps(f, limits))
    return false;
  for (const Clause &c : f) {
    std::vector<Var> others = f.without(c).vars();
    bool private_literal = std::any_of(c.begin(), c.end(), [&](Lit x) {
      return !std::binary_search(others.begin(), others.end(), x.var());
    });
    if (!private_literal)
      return false;
  }
  return true;
}

ClauseSet prime_implicates_bounded(const ClauseSet &f, unsigned k,
                                   const Limits &limits) {
  std::size_t m = f.c();
  std::size_t top = std::min<std::size_t>(k, m);
  std::vector<Clause> found;
  std::size_t inspected = 0;
  for (std::size_t size = 1; size <= top; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i)
      idx[i] = i;
    for (;;) {
      if (++inspected > limits.subset_budget)
        throw Error(Errc::budget_exceeded, "too many subsets");
      std::vector<Clause> part;
      for (std::size_t i : idx)
        part.push_back(f[i]);
      ClauseSet sub(std::move(part));
      Clause p = pure_clause(sub);
      if (entails(sub, p, limits))
        found.push_back(p);
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == m - size + i - 1)
        --i;
      if (i == 0)
        break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j)
        idx[j] = idx[j - 1] + 1;
    }
  }
  return subsumption_reduce(ClauseSet(std::move(found)));
}

} // namespace repkit
