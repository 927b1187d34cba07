#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace repkit {

using Var = std::uint32_t;

// A literal is stored as 2*var + sign, so the natural order sorts by
// variable first and puts the positive literal before the negative one.
class Lit {
public:
  constexpr Lit() = default;

  static constexpr Lit pos(Var v) { return Lit(v << 1); }
  static constexpr Lit neg(Var v) { return Lit((v << 1) | 1U); }
  static constexpr Lit make(Var v, bool negative) {
    return Lit((v << 1) | (negative ? 1U : 0U));
  }
  static Lit from_dimacs(int x);

  constexpr Var var() const { return code_ >> 1; }
  constexpr bool negative() const { return (code_ & 1U) != 0; }
  constexpr bool positive() const { return !negative(); }
  constexpr std::uint32_t code() const { return code_; }
  constexpr Lit operator~() const { return Lit(code_ ^ 1U); }
  int to_dimacs() const;

  friend constexpr auto operator<=>(Lit, Lit) = default;

private:
  constexpr explicit Lit(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

std::string to_string(Lit x);

// Complement-free set of literals, kept sorted.
class Clause {
public:
  Clause() = default;
  Clause(std::initializer_list<int> dimacs);
  explicit Clause(std::vector<Lit> lits);

  static Clause from_dimacs(std::span<const int> dimacs);
  // Caller guarantees sorted, duplicate-free and complement-free input.
  static Clause from_sorted(std::vector<Lit> lits);

  const std::vector<Lit> &lits() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }
  Lit operator[](std::size_t i) const { return lits_[i]; }

  bool contains(Lit x) const;
  bool contains_var(Var v) const;
  // this ⊆ other
  bool subsumes(const Clause &other) const;
  bool clashes_with(const Clause &other) const;
  std::size_t clash_count(const Clause &other) const;
  Clause complement() const;
  std::vector<Var> vars() const;
  std::vector<int> to_dimacs() const;

  friend bool operator==(const Clause &, const Clause &) = default;
  friend auto operator<=>(const Clause &a, const Clause &b) {
    return a.lits_ <=> b.lits_;
  }

private:
  std::vector<Lit> lits_;
};

std::string to_string(const Clause &c);
Clause clause_union(const Clause &a, const Clause &b);
Clause clause_difference(const Clause &a, const Clause &b);

// Finite set of clauses. The dnf flag only changes how the set is read;
// equality ignores it.
class ClauseSet {
public:
  ClauseSet() = default;
  ClauseSet(std::initializer_list<Clause> clauses);
  explicit ClauseSet(std::vector<Clause> clauses, bool dnf = false);

  const std::vector<Clause> &clauses() const { return clauses_; }
  auto begin() const { return clauses_.begin(); }
  auto end() const { return clauses_.end(); }
  const Clause &operator[](std::size_t i) const { return clauses_[i]; }
  bool empty() const { return clauses_.empty(); }

  std::size_t n() const;
  std::size_t c() const { return clauses_.size(); }
  std::size_t l() const;
  std::vector<Var> vars() const;
  Var max_var() const;

  bool dnf() const { return dnf_; }
  ClauseSet as_dnf(bool dnf = true) const;

  bool contains(const Clause &c) const;
  bool has_empty_clause() const;
  std::optional<std::size_t> index_of(const Clause &c) const;

  ClauseSet with(const Clause &c) const;
  ClauseSet without(const Clause &c) const;

  friend bool operator==(const ClauseSet &a, const ClauseSet &b) {
    return a.clauses_ == b.clauses_;
  }

private:
  std::vector<Clause> clauses_;
  bool dnf_ = false;
};

std::string to_string(const ClauseSet &f);
ClauseSet set_union(const ClauseSet &a, const ClauseSet &b);
// Keeps only the inclusion-minimal clauses.
ClauseSet subsumption_reduce(const ClauseSet &f);
// {C̄ : C ∈ F}, flipping the dnf flag.
ClauseSet complement_clauses(const ClauseSet &f);
ClauseSet make_clause_set(std::initializer_list<std::initializer_list<int>> cs);

class PartialAssignment {
public:
  PartialAssignment() = default;
  // DIMACS literals that are set to true.
  PartialAssignment(std::initializer_list<int> true_literals);

  static PartialAssignment falsifying(const Clause &c);
  static PartialAssignment satisfying_literals(std::span<const Lit> lits);

  void set(Var v, bool value) { bindings_[v] = value; }
  void set_true(Lit x) { bindings_[x.var()] = x.positive(); }
  void erase(Var v) { bindings_.erase(v); }

  std::optional<bool> value(Var v) const;
  std::optional<bool> value(Lit x) const;
  bool assigns(Var v) const { return bindings_.count(v) != 0; }
  std::size_t size() const { return bindings_.size(); }
  bool empty() const { return bindings_.empty(); }
  const std::map<Var, bool> &bindings() const { return bindings_; }
  std::vector<Var> vars() const;
  std::vector<Lit> true_literals() const;

  // Every binding inverted (φ̄).
  PartialAssignment flipped() const;
  // Union of two assignments; they must agree on shared variables.
  PartialAssignment merged(const PartialAssignment &other) const;

  friend bool operator==(const PartialAssignment &,
                         const PartialAssignment &) = default;

private:
  std::map<Var, bool> bindings_;
};

std::string to_string(const PartialAssignment &phi);

// φ * C: nullopt when C is satisfied.
std::optional<Clause> apply(const PartialAssignment &phi, const Clause &c);
ClauseSet apply(const PartialAssignment &phi, const ClauseSet &f);

struct TaggedClause {
  std::size_t origin;
  Clause clause;
  friend bool operator==(const TaggedClause &, const TaggedClause &) = default;
};
// Application without contraction: every surviving clause keeps the index of
// the input clause it came from.
std::vector<TaggedClause> apply_multi(const PartialAssignment &phi,
                                      std::span<const Clause> clauses);

PartialAssignment clause_falsifying_assignment(const Clause &c);

} // namespace repkit
