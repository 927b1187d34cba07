#include "repkit/sat.hpp"

#include "propagator.hpp"
#include "repkit/error.hpp"

#include <algorithm>

namespace repkit {

bool is_satisfiable(const ClauseSet &f, const Limits &limits) {
  detail::Propagator p(f);
  std::uint64_t budget = limits.sat_decisions;
  return p.solve(budget);
}

std::optional<PartialAssignment> find_model(const ClauseSet &f,
                                            const Limits &limits) {
  detail::Propagator p(f);
  std::uint64_t budget = limits.sat_decisions;
  if (!p.solve(budget))
    return std::nullopt;
  // Unassigned variables are free; fix them to 0 to return a total model.
  PartialAssignment phi;
  for (Var v : f.vars())
    phi.set(v, false);
  for (Lit x : p.trail_literals())
    phi.set_true(x);
  return phi;
}

bool entails(const ClauseSet &f, const Clause &c, const Limits &limits) {
  return !is_satisfiable(apply(PartialAssignment::falsifying(c), f), limits);
}

bool entails_all(const ClauseSet &f, const ClauseSet &g, const Limits &limits) {
  for (const Clause &c : g)
    if (!f.contains(c) && !entails(f, c, limits))
      return false;
  return true;
}

bool equivalent(const ClauseSet &f, const ClauseSet &g, const Limits &limits) {
  return entails_all(f, g, limits) && entails_all(g, f, limits);
}

std::vector<Lit> forced_literals(const ClauseSet &f, const Limits &limits) {
  auto model = find_model(f, limits);
  if (!model)
    return {};
  // Only literals true in some model can be forced; test each of them.
  std::vector<Lit> out;
  for (Lit x : model->true_literals()) {
    PartialAssignment flip;
    flip.set_true(~x);
    if (!is_satisfiable(apply(flip, f), limits))
      out.push_back(x);
  }
  return out;
}

namespace {

struct MaskedClause {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
};

std::vector<MaskedClause> mask(const ClauseSet &f, std::span<const Var> vars) {
  std::vector<MaskedClause> out;
  for (const Clause &c : f) {
    MaskedClause m;
    for (Lit x : c) {
      auto it = std::lower_bound(vars.begin(), vars.end(), x.var());
      if (it == vars.end() || *it != x.var())
        throw Error(Errc::invalid_input,
                    "variable " + std::to_string(x.var()) +
                        " missing from enumeration domain");
      std::uint64_t bit = std::uint64_t{1} << (it - vars.begin());
      (x.negative() ? m.neg : m.pos) |= bit;
    }
    out.push_back(m);
  }
  return out;
}

void check_enumeration_size(std::size_t n, const Limits &limits) {
  if (n > limits.enumeration_vars || n > 62)
    throw Error(Errc::size_limit_exceeded,
                "total-assignment enumeration over " + std::to_string(n) +
                    " variables");
}

} // namespace

ClauseSet canonical_dnf(const ClauseSet &f, const Limits &limits) {
  std::vector<Var> vars = f.vars();
  check_enumeration_size(vars.size(), limits);
  auto cls = mask(f, vars);
  std::vector<Clause> out;
  std::uint64_t total = std::uint64_t{1} << vars.size();
  for (std::uint64_t a = 0; a < total; ++a) {
    bool sat = std::all_of(cls.begin(), cls.end(), [a](const MaskedClause &c) {
      return ((c.pos & a) | (c.neg & ~a)) != 0;
    });
    if (!sat)
      continue;
    std::vector<Lit> lits;
    for (std::size_t i = 0; i < vars.size(); ++i)
      lits.push_back(Lit::make(vars[i], ((a >> i) & 1U) == 0));
    out.push_back(Clause::from_sorted(std::move(lits)));
  }
  return ClauseSet(std::move(out), true);
}

std::uint64_t count_models(const ClauseSet &f, std::span<const Var> vars,
                           const Limits &limits) {
  std::vector<Var> sorted(vars.begin(), vars.end());
  std::sort(sorted.begin(), sorted.end());
  check_enumeration_size(sorted.size(), limits);
  auto cls = mask(f, sorted);
  std::uint64_t total = std::uint64_t{1} << sorted.size();
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < total; ++a) {
    bool sat;
    if (f.dnf())
      sat = std::any_of(cls.begin(), cls.end(), [a](const MaskedClause &c) {
        return (c.pos & ~a) == 0 && (c.neg & a) == 0;
      });
    else
      sat = std::all_of(cls.begin(), cls.end(), [a](const MaskedClause &c) {
        return ((c.pos & a) | (c.neg & ~a)) != 0;
      });
    count += sat ? 1 : 0;
  }
  return count;
}

} // namespace repkit
