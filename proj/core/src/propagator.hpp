#pragma once

// Counter-based assignment trail over a fixed clause-set. Shared by DPLL and
// the r_k reductions; both only ever extend the trail and undo to a mark.

#include "repkit/cnf.hpp"

#include <cstdint>
#include <vector>

namespace repkit::detail {

class Propagator {
public:
  explicit Propagator(const ClauseSet &f);

  std::size_t num_vars() const { return vars_.size(); }
  Var original_var(std::size_t v) const { return vars_[v]; }

  bool conflict() const { return conflicts_ != 0; }
  bool assigned(std::size_t v) const { return val_[v] >= 0; }
  // Variable still occurs in a clause that is not satisfied.
  bool active(std::size_t v) const;

  // Internal literal: 2*v + negative.
  void assign(std::uint32_t lit);
  std::size_t mark() const { return trail_.size(); }
  void undo(std::size_t mark);

  bool unit_propagate();
  // r_k applied to the current state; false iff the result is {⊥}.
  bool reduce(unsigned k);
  // DPLL from the current state; budget counts decisions.
  bool solve(std::uint64_t &budget);

  ClauseSet residual() const;
  std::vector<Lit> trail_literals() const;

private:
  bool propagate_from(std::size_t head);
  std::uint32_t unassigned_literal(std::uint32_t c) const;

  std::vector<Var> vars_;
  std::vector<std::uint32_t> start_; // clause c occupies lits_[start_[c], start_[c+1])
  std::vector<std::uint32_t> lits_;
  std::vector<std::vector<std::uint32_t>> occ_;
  std::vector<std::uint32_t> nfalse_;
  std::vector<std::uint32_t> nsat_;
  std::vector<std::int8_t> val_;
  std::vector<std::uint32_t> trail_;
  std::size_t conflicts_ = 0;
};

} // namespace repkit::detail
