#include "repkit/reductions.hpp"

#include "propagator.hpp"
#include "repkit/error.hpp"
#include "repkit/sat.hpp"
#include "resolution.hpp"

#include <algorithm>

namespace repkit {

ClauseSet r_k(const ClauseSet &f, unsigned k) {
  detail::Propagator p(f);
  p.reduce(k);
  return p.residual();
}

std::optional<std::vector<Lit>> r_k_forced(const ClauseSet &f, unsigned k) {
  detail::Propagator p(f);
  if (!p.reduce(k))
    return std::nullopt;
  return p.trail_literals();
}

bool r_k_refutes(const ClauseSet &f, unsigned k) {
  detail::Propagator p(f);
  return !p.reduce(k);
}

ClauseSet r_inf(const ClauseSet &f, const Limits &limits) {
  if (f.has_empty_clause() || !is_satisfiable(f, limits))
    return ClauseSet{Clause{}};
  return apply(PartialAssignment::satisfying_literals(forced_literals(f, limits)),
               f);
}

unsigned hd_unsat(const ClauseSet &f, const Limits &limits) {
  if (!f.has_empty_clause() && is_satisfiable(f, limits))
    throw Error(Errc::not_unsatisfiable, "hd_unsat needs unsatisfiable input");
  for (unsigned k = 0;; ++k)
    if (r_k_refutes(f, k))
      return k;
}

bool k_resolution_refutes(const ClauseSet &f, unsigned k,
                          const Limits &limits) {
  if (f.has_empty_clause())
    return true;
  if (k == 0)
    return false;
  return detail::saturate(f, k, limits.resolution_clauses).refuted;
}

unsigned whd_unsat(const ClauseSet &f, const Limits &limits) {
  if (!f.has_empty_clause() && is_satisfiable(f, limits))
    throw Error(Errc::not_unsatisfiable, "whd_unsat needs unsatisfiable input");
  for (unsigned k = 0;; ++k)
    if (k_resolution_refutes(f, k, limits))
      return k;
}

std::optional<ResolutionStep> resolve(const Clause &left, const Clause &right) {
  if (left.clash_count(right) != 1)
    return std::nullopt;
  Var pivot = 0;
  std::vector<Lit> lits;
  std::set_union(left.begin(), left.end(), right.begin(), right.end(),
                 std::back_inserter(lits));
  for (Lit x : left)
    if (right.contains(~x))
      pivot = x.var();
  std::erase_if(lits, [pivot](Lit x) { return x.var() == pivot; });
  return ResolutionStep{left, right, pivot, Clause::from_sorted(std::move(lits))};
}

ClauseSet prime_implicates(const ClauseSet &f, const Limits &limits) {
  return detail::saturate(f, detail::unbounded_width, limits.resolution_clauses)
      .clauses;
}

ClauseSet essential_prime_implicates(const ClauseSet &f, const Limits &limits) {
  ClauseSet primes = prime_implicates(f, limits);
  std::vector<Clause> out;
  for (const Clause &c : primes)
    if (!entails(primes.without(c), c, limits))
      out.push_back(c);
  return ClauseSet(std::move(out));
}

ClauseSet substitute(const ClauseSet &f, Lit x, Lit y) {
  if (x == y)
    return f;
  auto map = [x, y](Lit z) {
    if (z == x)
      return y;
    if (z == ~x)
      return ~y;
    return z;
  };
  std::vector<Clause> out;
  for (const Clause &c : f) {
    std::vector<Lit> lits;
    for (Lit z : c)
      lits.push_back(map(z));
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    bool tautology = false;
    for (std::size_t i = 1; i < lits.size(); ++i)
      tautology |= lits[i].var() == lits[i - 1].var();
    if (!tautology)
      out.push_back(Clause::from_sorted(std::move(lits)));
  }
  return ClauseSet(std::move(out), f.dnf());
}

} // namespace repkit
