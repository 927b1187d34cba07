#include "repkit/hardness.hpp"

#include "repkit/error.hpp"
#include "repkit/reductions.hpp"
#include "repkit/sat.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_set>
#include <utility>
#include <vector>

namespace repkit {

const char *measure_name(Measure m) {
  switch (m) {
  case Measure::hd:
    return "hd";
  case Measure::phd:
    return "phd";
  case Measure::whd:
    return "whd";
  }
  return "?";
}

namespace {

// Clause over at most 64 dense variables.
struct Small {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
  friend auto operator<=>(const Small &, const Small &) = default;
};
using State = std::vector<Small>;

struct StateHash {
  std::size_t operator()(const State &s) const {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ s.size();
    for (const Small &c : s) {
      h = (h ^ c.pos) * 0x100000001b3ULL;
      h = (h ^ (c.neg + 0x9e3779b97f4a7c15ULL)) * 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

void normalize(State &s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

State encode(const ClauseSet &f, const std::vector<Var> &vars) {
  State s;
  for (const Clause &c : f) {
    Small m;
    for (Lit x : c) {
      auto i = std::lower_bound(vars.begin(), vars.end(), x.var()) - vars.begin();
      (x.negative() ? m.neg : m.pos) |= std::uint64_t{1} << i;
    }
    s.push_back(m);
  }
  normalize(s);
  return s;
}

ClauseSet decode(const State &s, const std::vector<Var> &vars) {
  std::vector<Clause> out;
  out.reserve(s.size());
  for (const Small &c : s) {
    std::vector<Lit> lits;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      std::uint64_t bit = std::uint64_t{1} << i;
      if (c.pos & bit)
        lits.push_back(Lit::pos(vars[i]));
      else if (c.neg & bit)
        lits.push_back(Lit::neg(vars[i]));
    }
    out.push_back(Clause::from_sorted(std::move(lits)));
  }
  return ClauseSet(std::move(out));
}

State assign(const State &s, unsigned v, bool value) {
  std::uint64_t bit = std::uint64_t{1} << v;
  State out;
  out.reserve(s.size());
  for (const Small &c : s) {
    if ((value ? c.pos : c.neg) & bit)
      continue;
    out.push_back({c.pos & ~bit, c.neg & ~bit});
  }
  normalize(out);
  return out;
}

std::uint64_t occurring(const State &s) {
  std::uint64_t m = 0;
  for (const Small &c : s)
    m |= c.pos | c.neg;
  return m;
}

bool small_sat(const State &s) {
  if (s.empty())
    return true;
  if (s.front().pos == 0 && s.front().neg == 0)
    return false;
  const Small *pick = &s.front();
  int best = 65;
  for (const Small &c : s) {
    int len = std::popcount(c.pos | c.neg);
    if (len < best) {
      best = len;
      pick = &c;
      if (len == 1)
        break;
    }
  }
  std::uint64_t both = pick->pos | pick->neg;
  unsigned v = static_cast<unsigned>(std::countr_zero(both));
  bool first = (pick->pos >> v) & 1U;
  if (best == 1)
    return small_sat(assign(s, v, first));
  return small_sat(assign(s, v, first)) || small_sat(assign(s, v, !first));
}

using Path = std::vector<std::pair<unsigned, bool>>;
// Returns false to stop the whole exploration.
using Visit = std::function<bool(const State &, const Path &, bool sat)>;

struct Exploration {
  bool complete = true;
  bool stopped = false;
};

class Explorer {
public:
  Explorer(std::uint64_t branch_mask, std::size_t budget, Visit visit)
      : branch_(branch_mask), budget_(budget), visit_(std::move(visit)) {}

  Exploration run(const State &root) {
    Exploration r;
    go(root, r);
    return r;
  }

private:
  void go(const State &s, Exploration &r) {
    if (r.stopped || !r.complete)
      return;
    if (!seen_.insert(s).second)
      return;
    if (seen_.size() > budget_) {
      r.complete = false;
      return;
    }
    bool sat = small_sat(s);
    if (!visit_(s, path_, sat)) {
      r.stopped = true;
      return;
    }
    if (!sat)
      return;
    std::uint64_t open = occurring(s) & branch_;
    while (open) {
      unsigned v = static_cast<unsigned>(std::countr_zero(open));
      open &= open - 1;
      for (bool value : {true, false}) {
        path_.emplace_back(v, value);
        go(assign(s, v, value), r);
        path_.pop_back();
        if (r.stopped || !r.complete)
          return;
      }
    }
  }

  std::uint64_t branch_;
  std::size_t budget_;
  Visit visit_;
  std::unordered_set<State, StateHash> seen_;
  Path path_;
};

PartialAssignment to_assignment(const Path &path, const std::vector<Var> &vars) {
  PartialAssignment phi;
  for (auto [v, value] : path)
    phi.set(vars[v], value);
  return phi;
}

std::uint64_t mask_of(std::span<const Var> subset, const std::vector<Var> &vars) {
  std::uint64_t m = 0;
  for (Var v : subset) {
    auto it = std::lower_bound(vars.begin(), vars.end(), v);
    if (it != vars.end() && *it == v)
      m |= std::uint64_t{1} << (it - vars.begin());
  }
  return m;
}

// Least k >= from with pred(k); pred is monotone in k.
template <typename Pred> unsigned least_level(unsigned from, Pred pred) {
  unsigned k = from;
  while (!pred(k))
    ++k;
  return k;
}

// Shared driver for the max-over-instantiations measures. `level` computes
// the local requirement of one instantiated clause-set given the current
// maximum (returning a value <= best when no improvement is possible).
HardnessReport maximize(const ClauseSet &f, Measure kind, bool visit_sat,
                        const Limits &limits,
                        const std::function<unsigned(const ClauseSet &, bool,
                                                     unsigned, bool)> &level) {
  HardnessReport report;
  report.kind = kind;
  std::vector<Var> vars = f.vars();
  if (vars.size() > 64 || vars.size() > limits.brute_force_vars) {
    // Beyond the brute-force limit only an unsatisfiable input is exact:
    // every instantiation of it needs at most the level of F itself.
    if (f.has_empty_clause() || !is_satisfiable(f, limits)) {
      report.value = level(f, false, 0, false);
      report.witness = PartialAssignment{};
    } else {
      report.exact = false;
    }
    return report;
  }
  bool have = false;
  Explorer ex(~std::uint64_t{0}, limits.brute_force_states,
              [&](const State &s, const Path &path, bool sat) {
                if (sat && !visit_sat)
                  return true;
                unsigned v = level(decode(s, vars), sat, report.value, have);
                if (!have || v > report.value) {
                  report.value = v;
                  report.witness = to_assignment(path, vars);
                  have = true;
                }
                return true;
              });
  report.exact = ex.run(encode(f, vars)).complete;
  return report;
}

} // namespace

HardnessReport hd(const ClauseSet &f, const Limits &limits) {
  return maximize(f, Measure::hd, false, limits,
                  [](const ClauseSet &g, bool, unsigned best, bool have) {
                    if (have && r_k_refutes(g, best))
                      return best;
                    return least_level(have ? best + 1 : 0, [&g](unsigned k) {
                      return r_k_refutes(g, k);
                    });
                  });
}

HardnessReport whd(const ClauseSet &f, const Limits &limits) {
  return maximize(f, Measure::whd, false, limits,
                  [&limits](const ClauseSet &g, bool, unsigned best, bool have) {
                    if (have && k_resolution_refutes(g, best, limits))
                      return best;
                    return least_level(have ? best + 1 : 0,
                                       [&g, &limits](unsigned k) {
                                         return k_resolution_refutes(g, k,
                                                                     limits);
                                       });
                  });
}

HardnessReport phd(const ClauseSet &f, const Limits &limits) {
  return maximize(
      f, Measure::phd, true, limits,
      [&limits](const ClauseSet &g, bool sat, unsigned best, bool have) {
        if (!sat) {
          if (have && r_k_refutes(g, best))
            return best;
          return least_level(have ? best + 1 : 0,
                             [&g](unsigned k) { return r_k_refutes(g, k); });
        }
        ClauseSet target = r_inf(g, limits);
        auto complete = [&](unsigned k) { return r_k(g, k) == target; };
        if (have && complete(best))
          return best;
        return least_level(have ? best + 1 : 0, complete);
      });
}

bool hd_at_most(const ClauseSet &f, unsigned k, const Limits &limits) {
  std::vector<Var> vars = f.vars();
  if (vars.size() > 64 || vars.size() > limits.brute_force_vars)
    throw Error(Errc::size_limit_exceeded,
                "hardness check over " + std::to_string(vars.size()) +
                    " variables");
  bool ok = true;
  Explorer ex(~std::uint64_t{0}, limits.brute_force_states,
              [&](const State &s, const Path &, bool sat) {
                if (sat)
                  return true;
                ok = r_k_refutes(decode(s, vars), k);
                return ok;
              });
  Exploration r = ex.run(encode(f, vars));
  if (!r.complete)
    throw Error(Errc::size_limit_exceeded, "hardness check state budget");
  return ok;
}

unsigned hd_relative(const ClauseSet &f, std::span<const Var> v,
                     const Limits &limits) {
  std::vector<Var> vars = f.vars();
  if (vars.size() > 64 || v.size() > limits.brute_force_vars)
    throw Error(Errc::size_limit_exceeded, "relative hardness too large");
  unsigned best = 0;
  bool have = false;
  Explorer ex(mask_of(v, vars), limits.brute_force_states,
              [&](const State &s, const Path &, bool sat) {
                if (sat)
                  return true;
                ClauseSet g = decode(s, vars);
                if (have && r_k_refutes(g, best))
                  return true;
                best = least_level(have ? best + 1 : 0,
                                   [&g](unsigned k) { return r_k_refutes(g, k); });
                have = true;
                return true;
              });
  if (!ex.run(encode(f, vars)).complete)
    throw Error(Errc::size_limit_exceeded, "relative hardness state budget");
  return best;
}

unsigned hd_upper_split(const ClauseSet &f, std::span<const Var> v,
                        const Limits &limits) {
  if (v.size() > 20)
    throw Error(Errc::size_limit_exceeded, "split over too many variables");
  unsigned best = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << v.size()); ++a) {
    PartialAssignment psi;
    for (std::size_t i = 0; i < v.size(); ++i)
      psi.set(v[i], (a >> i) & 1U);
    HardnessReport r = hd(apply(psi, f), limits);
    if (!r.exact)
      throw Error(Errc::size_limit_exceeded, "split branch beyond budget");
    best = std::max(best, r.value);
  }
  return static_cast<unsigned>(v.size()) + best;
}

} // namespace repkit
