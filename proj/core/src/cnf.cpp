#include "repkit/cnf.hpp"

#include "repkit/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace repkit {

Lit Lit::from_dimacs(int x) {
  if (x == 0)
    throw Error(Errc::invalid_input, "literal 0 has no variable");
  Var v = static_cast<Var>(std::abs(static_cast<long>(x)));
  return make(v, x < 0);
}

int Lit::to_dimacs() const {
  int v = static_cast<int>(var());
  return negative() ? -v : v;
}

std::string to_string(Lit x) { return std::to_string(x.to_dimacs()); }

namespace {

void normalize(std::vector<Lit> &lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 1; i < lits.size(); ++i)
    if (lits[i].var() == lits[i - 1].var())
      throw Error(Errc::invalid_input,
                  "tautological clause on variable " +
                      std::to_string(lits[i].var()));
}

} // namespace

Clause::Clause(std::initializer_list<int> dimacs) {
  lits_.reserve(dimacs.size());
  for (int x : dimacs)
    lits_.push_back(Lit::from_dimacs(x));
  normalize(lits_);
}

Clause::Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
  normalize(lits_);
}

Clause Clause::from_dimacs(std::span<const int> dimacs) {
  std::vector<Lit> lits;
  lits.reserve(dimacs.size());
  for (int x : dimacs)
    lits.push_back(Lit::from_dimacs(x));
  return Clause(std::move(lits));
}

Clause Clause::from_sorted(std::vector<Lit> lits) {
  Clause c;
  c.lits_ = std::move(lits);
  return c;
}

bool Clause::contains(Lit x) const {
  return std::binary_search(lits_.begin(), lits_.end(), x);
}

bool Clause::contains_var(Var v) const {
  auto it = std::lower_bound(lits_.begin(), lits_.end(), Lit::pos(v));
  return it != lits_.end() && it->var() == v;
}

bool Clause::subsumes(const Clause &other) const {
  return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(),
                       lits_.end());
}

std::size_t Clause::clash_count(const Clause &other) const {
  std::size_t count = 0;
  auto a = lits_.begin(), b = other.lits_.begin();
  while (a != lits_.end() && b != other.lits_.end()) {
    if (a->var() < b->var()) {
      ++a;
    } else if (b->var() < a->var()) {
      ++b;
    } else {
      if (*a != *b)
        ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

bool Clause::clashes_with(const Clause &other) const {
  return clash_count(other) != 0;
}

Clause Clause::complement() const {
  std::vector<Lit> out;
  out.reserve(lits_.size());
  for (Lit x : lits_)
    out.push_back(~x);
  return from_sorted(std::move(out));
}

std::vector<Var> Clause::vars() const {
  std::vector<Var> out;
  out.reserve(lits_.size());
  for (Lit x : lits_)
    out.push_back(x.var());
  return out;
}

std::vector<int> Clause::to_dimacs() const {
  std::vector<int> out;
  out.reserve(lits_.size());
  for (Lit x : lits_)
    out.push_back(x.to_dimacs());
  return out;
}

std::string to_string(const Clause &c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i)
      s += ",";
    s += to_string(c[i]);
  }
  return s + "}";
}

Clause clause_union(const Clause &a, const Clause &b) {
  std::vector<Lit> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return Clause(std::move(out));
}

Clause clause_difference(const Clause &a, const Clause &b) {
  std::vector<Lit> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return Clause::from_sorted(std::move(out));
}

ClauseSet::ClauseSet(std::initializer_list<Clause> clauses)
    : ClauseSet(std::vector<Clause>(clauses)) {}

ClauseSet::ClauseSet(std::vector<Clause> clauses, bool dnf)
    : clauses_(std::move(clauses)), dnf_(dnf) {
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()),
                 clauses_.end());
}

std::vector<Var> ClauseSet::vars() const {
  std::vector<Var> out;
  for (const Clause &c : clauses_)
    for (Lit x : c)
      out.push_back(x.var());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t ClauseSet::n() const { return vars().size(); }

std::size_t ClauseSet::l() const {
  std::size_t total = 0;
  for (const Clause &c : clauses_)
    total += c.size();
  return total;
}

Var ClauseSet::max_var() const {
  Var m = 0;
  for (const Clause &c : clauses_)
    if (!c.empty())
      m = std::max(m, c.lits().back().var());
  return m;
}

ClauseSet ClauseSet::as_dnf(bool dnf) const {
  ClauseSet out = *this;
  out.dnf_ = dnf;
  return out;
}

bool ClauseSet::contains(const Clause &c) const {
  return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

bool ClauseSet::has_empty_clause() const {
  return !clauses_.empty() && clauses_.front().empty();
}

std::optional<std::size_t> ClauseSet::index_of(const Clause &c) const {
  auto it = std::lower_bound(clauses_.begin(), clauses_.end(), c);
  if (it == clauses_.end() || *it != c)
    return std::nullopt;
  return static_cast<std::size_t>(it - clauses_.begin());
}

ClauseSet ClauseSet::with(const Clause &c) const {
  std::vector<Clause> cs = clauses_;
  cs.push_back(c);
  return ClauseSet(std::move(cs), dnf_);
}

ClauseSet ClauseSet::without(const Clause &c) const {
  std::vector<Clause> cs;
  cs.reserve(clauses_.size());
  for (const Clause &d : clauses_)
    if (d != c)
      cs.push_back(d);
  return ClauseSet(std::move(cs), dnf_);
}

std::string to_string(const ClauseSet &f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.c(); ++i) {
    if (i)
      s += ",";
    s += to_string(f[i]);
  }
  return s + "}";
}

ClauseSet set_union(const ClauseSet &a, const ClauseSet &b) {
  std::vector<Clause> cs = a.clauses();
  cs.insert(cs.end(), b.begin(), b.end());
  return ClauseSet(std::move(cs), a.dnf());
}

ClauseSet subsumption_reduce(const ClauseSet &f) {
  // Sorted by size, a clause can only be subsumed by an earlier one.
  std::vector<Clause> bysize = f.clauses();
  std::stable_sort(bysize.begin(), bysize.end(),
                   [](const Clause &a, const Clause &b) {
                     return a.size() < b.size();
                   });
  std::vector<Clause> kept;
  for (const Clause &c : bysize) {
    bool subsumed = false;
    for (const Clause &k : kept)
      if (k.subsumes(c)) {
        subsumed = true;
        break;
      }
    if (!subsumed)
      kept.push_back(c);
  }
  return ClauseSet(std::move(kept), f.dnf());
}

ClauseSet complement_clauses(const ClauseSet &f) {
  std::vector<Clause> cs;
  cs.reserve(f.c());
  for (const Clause &c : f)
    cs.push_back(c.complement());
  return ClauseSet(std::move(cs), !f.dnf());
}

ClauseSet make_clause_set(std::initializer_list<std::initializer_list<int>> cs) {
  std::vector<Clause> out;
  for (auto c : cs)
    out.emplace_back(c);
  return ClauseSet(std::move(out));
}

PartialAssignment::PartialAssignment(std::initializer_list<int> true_literals) {
  for (int x : true_literals)
    set_true(Lit::from_dimacs(x));
}

PartialAssignment PartialAssignment::falsifying(const Clause &c) {
  PartialAssignment phi;
  for (Lit x : c)
    phi.set_true(~x);
  return phi;
}

PartialAssignment
PartialAssignment::satisfying_literals(std::span<const Lit> lits) {
  PartialAssignment phi;
  for (Lit x : lits)
    phi.set_true(x);
  return phi;
}

std::optional<bool> PartialAssignment::value(Var v) const {
  auto it = bindings_.find(v);
  if (it == bindings_.end())
    return std::nullopt;
  return it->second;
}

std::optional<bool> PartialAssignment::value(Lit x) const {
  auto v = value(x.var());
  if (!v)
    return std::nullopt;
  return x.negative() ? !*v : *v;
}

std::vector<Var> PartialAssignment::vars() const {
  std::vector<Var> out;
  for (auto [v, b] : bindings_)
    out.push_back(v);
  return out;
}

std::vector<Lit> PartialAssignment::true_literals() const {
  std::vector<Lit> out;
  for (auto [v, b] : bindings_)
    out.push_back(Lit::make(v, !b));
  return out;
}

PartialAssignment PartialAssignment::flipped() const {
  PartialAssignment out;
  for (auto [v, b] : bindings_)
    out.set(v, !b);
  return out;
}

PartialAssignment
PartialAssignment::merged(const PartialAssignment &other) const {
  PartialAssignment out = *this;
  for (auto [v, b] : other.bindings_) {
    auto mine = value(v);
    if (mine && *mine != b)
      throw Error(Errc::invalid_input, "assignments disagree on variable " +
                                           std::to_string(v));
    out.set(v, b);
  }
  return out;
}

std::string to_string(const PartialAssignment &phi) {
  std::string s = "<";
  bool first = true;
  for (auto [v, b] : phi.bindings()) {
    if (!first)
      s += ",";
    first = false;
    s += std::to_string(v) + "->" + (b ? "1" : "0");
  }
  return s + ">";
}

std::optional<Clause> apply(const PartialAssignment &phi, const Clause &c) {
  std::vector<Lit> rest;
  rest.reserve(c.size());
  for (Lit x : c) {
    auto val = phi.value(x);
    if (!val)
      rest.push_back(x);
    else if (*val)
      return std::nullopt;
  }
  return Clause::from_sorted(std::move(rest));
}

ClauseSet apply(const PartialAssignment &phi, const ClauseSet &f) {
  if (phi.empty())
    return f;
  std::vector<Clause> out;
  out.reserve(f.c());
  for (const Clause &c : f)
    if (auto r = apply(phi, c))
      out.push_back(std::move(*r));
  return ClauseSet(std::move(out), f.dnf());
}

std::vector<TaggedClause> apply_multi(const PartialAssignment &phi,
                                      std::span<const Clause> clauses) {
  std::vector<TaggedClause> out;
  for (std::size_t i = 0; i < clauses.size(); ++i)
    if (auto r = apply(phi, clauses[i]))
      out.push_back({i, std::move(*r)});
  return out;
}

PartialAssignment clause_falsifying_assignment(const Clause &c) {
  return PartialAssignment::falsifying(c);
}

} // namespace repkit
