#include "propagator.hpp"

#include "repkit/error.hpp"

#include <algorithm>
#include <limits>

namespace repkit::detail {

Propagator::Propagator(const ClauseSet &f) : vars_(f.vars()) {
  auto dense = [this](Var v) {
    return static_cast<std::uint32_t>(
        std::lower_bound(vars_.begin(), vars_.end(), v) - vars_.begin());
  };
  std::size_t m = f.c();
  start_.reserve(m + 1);
  lits_.reserve(f.l());
  occ_.assign(2 * vars_.size(), {});
  start_.push_back(0);
  for (std::size_t c = 0; c < m; ++c) {
    for (Lit x : f[c]) {
      std::uint32_t l = (dense(x.var()) << 1) | (x.negative() ? 1U : 0U);
      lits_.push_back(l);
      occ_[l].push_back(static_cast<std::uint32_t>(c));
    }
    start_.push_back(static_cast<std::uint32_t>(lits_.size()));
    if (f[c].empty())
      ++conflicts_;
  }
  nfalse_.assign(m, 0);
  nsat_.assign(m, 0);
  val_.assign(vars_.size(), -1);
}

bool Propagator::active(std::size_t v) const {
  for (std::uint32_t l = static_cast<std::uint32_t>(2 * v); l < 2 * v + 2; ++l)
    for (std::uint32_t c : occ_[l])
      if (nsat_[c] == 0)
        return true;
  return false;
}

void Propagator::assign(std::uint32_t lit) {
  val_[lit >> 1] = static_cast<std::int8_t>((lit & 1U) ^ 1U);
  trail_.push_back(lit);
  for (std::uint32_t c : occ_[lit])
    ++nsat_[c];
  for (std::uint32_t c : occ_[lit ^ 1U]) {
    ++nfalse_[c];
    if (nsat_[c] == 0 && nfalse_[c] == start_[c + 1] - start_[c])
      ++conflicts_;
  }
}

void Propagator::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    std::uint32_t lit = trail_.back();
    trail_.pop_back();
    for (std::uint32_t c : occ_[lit ^ 1U]) {
      if (nsat_[c] == 0 && nfalse_[c] == start_[c + 1] - start_[c])
        --conflicts_;
      --nfalse_[c];
    }
    for (std::uint32_t c : occ_[lit])
      --nsat_[c];
    val_[lit >> 1] = -1;
  }
}

std::uint32_t Propagator::unassigned_literal(std::uint32_t c) const {
  for (std::uint32_t i = start_[c]; i < start_[c + 1]; ++i)
    if (val_[lits_[i] >> 1] < 0)
      return lits_[i];
  return std::numeric_limits<std::uint32_t>::max();
}

bool Propagator::propagate_from(std::size_t head) {
  while (head < trail_.size()) {
    if (conflicts_)
      return false;
    std::uint32_t lit = trail_[head++];
    for (std::uint32_t c : occ_[lit ^ 1U]) {
      if (nsat_[c] != 0)
        continue;
      std::uint32_t len = start_[c + 1] - start_[c];
      if (nfalse_[c] == len)
        return false;
      if (nfalse_[c] + 1 == len)
        assign(unassigned_literal(c));
    }
  }
  return conflicts_ == 0;
}

bool Propagator::unit_propagate() {
  if (conflicts_)
    return false;
  std::size_t head = trail_.size();
  std::size_t m = nsat_.size();
  for (std::uint32_t c = 0; c < m; ++c) {
    if (nsat_[c] != 0)
      continue;
    std::uint32_t len = start_[c + 1] - start_[c];
    if (nfalse_[c] == len)
      return false;
    if (nfalse_[c] + 1 == len)
      assign(unassigned_literal(c));
  }
  return propagate_from(head);
}

bool Propagator::reduce(unsigned k) {
  if (conflicts_)
    return false;
  if (k == 0)
    return true;
  if (k == 1)
    return unit_propagate();
  // Repeated passes in ascending variable order, positive literal first;
  // a pass that forces nothing ends the loop.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (assigned(v) || !active(v))
        continue;
      for (std::uint32_t sign = 0; sign < 2; ++sign) {
        std::uint32_t x = static_cast<std::uint32_t>(2 * v) | sign;
        std::size_t m = mark();
        assign(x ^ 1U);
        bool open = reduce(k - 1);
        undo(m);
        if (!open) {
          assign(x);
          if (conflicts_)
            return false;
          changed = true;
          break;
        }
      }
    }
  }
  return true;
}

bool Propagator::solve(std::uint64_t &budget) {
  std::size_t m = mark();
  if (!unit_propagate()) {
    undo(m);
    return false;
  }
  // Branch on the first open literal of a shortest open clause.
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t branch = 0;
  for (std::uint32_t c = 0; c < nsat_.size(); ++c) {
    if (nsat_[c] != 0)
      continue;
    std::uint32_t open = start_[c + 1] - start_[c] - nfalse_[c];
    if (open < best) {
      best = open;
      branch = unassigned_literal(c);
      if (open == 2)
        break;
    }
  }
  if (best == std::numeric_limits<std::uint32_t>::max())
    return true;
  if (budget == 0)
    throw Error(Errc::size_limit_exceeded, "DPLL decision budget exhausted");
  --budget;
  for (std::uint32_t lit : {branch, branch ^ 1U}) {
    std::size_t m2 = mark();
    assign(lit);
    if (solve(budget))
      return true;
    undo(m2);
  }
  undo(m);
  return false;
}

ClauseSet Propagator::residual() const {
  if (conflicts_)
    return ClauseSet{Clause{}};
  std::vector<Clause> out;
  for (std::uint32_t c = 0; c < nsat_.size(); ++c) {
    if (nsat_[c] != 0)
      continue;
    std::vector<Lit> rest;
    for (std::uint32_t i = start_[c]; i < start_[c + 1]; ++i) {
      std::uint32_t l = lits_[i];
      if (val_[l >> 1] < 0)
        rest.push_back(Lit::make(vars_[l >> 1], (l & 1U) != 0));
    }
    out.push_back(Clause::from_sorted(std::move(rest)));
  }
  return ClauseSet(std::move(out));
}

std::vector<Lit> Propagator::trail_literals() const {
  std::vector<Lit> out;
  out.reserve(trail_.size());
  for (std::uint32_t l : trail_)
    out.push_back(Lit::make(vars_[l >> 1], (l & 1U) != 0));
  return out;
}

} // namespace repkit::detail
