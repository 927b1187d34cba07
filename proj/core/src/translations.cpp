#include "repkit/translations.hpp"

#include "repkit/error.hpp"
#include "repkit/hardness.hpp"
#include "repkit/reductions.hpp"
#include "repkit/sat.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>

namespace repkit {

const char *translation_name(TranslationKind k) {
  switch (k) {
  case TranslationKind::cant:
    return "cant";
  case TranslationKind::cantm:
    return "cantm";
  case TranslationKind::xor_chain:
    return "xor";
  }
  return "?";
}

const char *uep_name(Uep u) {
  switch (u) {
  case Uep::neither:
    return "neither";
  case Uep::uep:
    return "uep";
  case Uep::strong_uep:
    return "strong_uep";
  }
  return "?";
}

std::vector<Var> TranslationResult::new_vars() const {
  std::vector<Var> out;
  for (const auto &entry : new_var_map)
    out.push_back(entry.second);
  return out;
}

namespace {

ClauseSet translate(std::span<const Clause> g, std::span<const Var> vs,
                    bool full) {
  if (g.size() != vs.size())
    throw Error(Errc::invalid_input, "one new variable per DNF clause");
  std::vector<Clause> out;
  std::vector<Lit> long_clause;
  for (std::size_t i = 0; i < g.size(); ++i) {
    Var v = vs[i];
    for (Lit x : g[i])
      out.push_back(Clause(std::vector<Lit>{Lit::neg(v), x}));
    if (full) {
      std::vector<Lit> back{Lit::pos(v)};
      for (Lit x : g[i])
        back.push_back(~x);
      out.push_back(Clause(std::move(back)));
    }
    long_clause.push_back(Lit::pos(v));
  }
  out.push_back(Clause(std::move(long_clause)));
  return ClauseSet(std::move(out));
}

TranslationResult translate_set(const ClauseSet &g, TranslationKind kind) {
  TranslationResult r;
  r.kind = kind;
  std::vector<Var> vs;
  Var next = g.max_var() + 1;
  for (const Clause &c : g) {
    r.new_var_map.emplace_back(c, next);
    vs.push_back(next++);
  }
  r.output = translate(g.clauses(), vs, kind == TranslationKind::cant);
  return r;
}

} // namespace

ClauseSet cant_multi(std::span<const Clause> g, std::span<const Var> new_vars) {
  return translate(g, new_vars, true);
}

ClauseSet cantm_multi(std::span<const Clause> g, std::span<const Var> new_vars) {
  return translate(g, new_vars, false);
}

TranslationResult cant(const ClauseSet &g) {
  return translate_set(g, TranslationKind::cant);
}

TranslationResult cantm(const ClauseSet &g) {
  return translate_set(g, TranslationKind::cantm);
}

ClauseSet negate_doped(const DopedClauseSet &d) {
  const ClauseSet &f = d.base;
  for (std::size_t i = 0; i < f.c(); ++i)
    for (std::size_t j = i + 1; j < f.c(); ++j)
      if (!f[i].clashes_with(f[j]))
        throw Error(Errc::not_hitting, "clauses " + to_string(f[i]) + " and " +
                                           to_string(f[j]) + " do not clash");
  // A hitting clause-set is unsatisfiable iff its clauses cover all
  // assignments exactly once: sum of 2^-|C| equals 1.
  using boost::multiprecision::cpp_int;
  std::size_t top = 0;
  for (const Clause &c : f)
    top = std::max(top, c.size());
  cpp_int sum = 0;
  for (const Clause &c : f)
    sum += cpp_int(1) << (top - c.size());
  if (f.empty() || sum != (cpp_int(1) << top))
    throw Error(Errc::not_hitting, "hitting clause-set is satisfiable");
  std::vector<Clause> out;
  out.reserve(d.doping.size());
  for (const auto &[c, u] : d.doping) {
    std::vector<Lit> lits;
    for (Lit x : c)
      lits.push_back(~x);
    lits.push_back(Lit::pos(u));
    out.push_back(Clause(std::move(lits)));
  }
  return ClauseSet(std::move(out), true);
}

ClauseSet xor_chain(std::span<const Lit> xs, Var first_fresh) {
  std::size_t n = xs.size();
  if (n < 3)
    throw Error(Errc::invalid_input, "parity chain needs at least 3 literals");
  std::vector<Var> vs;
  for (Lit x : xs)
    vs.push_back(x.var());
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw Error(Errc::invalid_input, "parity literals need distinct variables");
  Var next = first_fresh ? first_fresh : vs.back() + 1;
  std::vector<Clause> out;
  // All clauses over `lits` with an odd number of flipped literals: the
  // prime implicates of lits[0] ⊕ ... = 0.
  auto parity = [&out](std::vector<Lit> lits) {
    std::size_t m = lits.size();
    for (unsigned mask = 0; mask < (1U << m); ++mask) {
      if (std::popcount(mask) % 2 == 0)
        continue;
      std::vector<Lit> c;
      for (std::size_t i = 0; i < m; ++i)
        c.push_back((mask >> i) & 1U ? ~lits[i] : lits[i]);
      out.push_back(Clause(std::move(c)));
    }
  };
  Lit y = Lit::pos(next);
  parity({xs[0], xs[1], y});
  for (std::size_t i = 2; i + 1 < n; ++i) {
    Lit z = Lit::pos(++next);
    parity({y, xs[i], z});
    y = z;
  }
  parity({y, xs[n - 1]});
  for (Var v = first_fresh ? first_fresh : vs.back() + 1; v <= next; ++v)
    if (std::binary_search(vs.begin(), vs.end(), v))
      throw Error(Errc::invalid_input, "auxiliary variables must be fresh");
  return ClauseSet(std::move(out));
}

ClauseSet two_xor_system(unsigned n) {
  if (n < 3)
    throw Error(Errc::invalid_input, "two-equation system needs n >= 3");
  std::vector<Lit> xs;
  for (Var v = 1; v <= n; ++v)
    xs.push_back(Lit::pos(v));
  ClauseSet a = xor_chain(xs, n + 1);
  xs.back() = Lit::neg(n);
  ClauseSet b = xor_chain(xs, 2 * n - 1);
  return set_union(a, b);
}

ClauseSet kbase(const ClauseSet &p, unsigned k, const Limits &limits) {
  auto good = [&](const ClauseSet &f) {
    return entails_all(f, p, limits) && hd_at_most(f, k, limits);
  };
  std::vector<Clause> order = p.clauses();
  std::stable_sort(order.begin(), order.end(),
                   [](const Clause &a, const Clause &b) {
                     return a.size() < b.size();
                   });
  ClauseSet current = essential_prime_implicates(p, limits);
  for (const Clause &c : order) {
    if (good(current))
      break;
    if (!current.contains(c))
      current = current.with(c);
  }
  if (!good(current))
    throw Error(Errc::invalid_input, "no subset of P meets the target");
  std::stable_sort(order.begin(), order.end(),
                   [](const Clause &a, const Clause &b) {
                     return a.size() > b.size();
                   });
  for (bool changed = true; changed;) {
    changed = false;
    for (const Clause &c : order) {
      if (!current.contains(c))
        continue;
      ClauseSet smaller = current.without(c);
      if (good(smaller)) {
        current = std::move(smaller);
        changed = true;
      }
    }
  }
  return current;
}

Uep has_uep(const ClauseSet &fp, std::span<const Var> original_vars,
            const std::optional<ClauseSet> &dnf, const Limits &limits) {
  std::vector<Var> orig(original_vars.begin(), original_vars.end());
  std::sort(orig.begin(), orig.end());
  std::vector<Var> fresh;
  for (Var v : fp.vars())
    if (!std::binary_search(orig.begin(), orig.end(), v))
      fresh.push_back(v);
  if (orig.size() + fresh.size() > limits.enumeration_vars ||
      orig.size() + fresh.size() > 62)
    throw Error(Errc::size_limit_exceeded, "extension check too large");

  for (std::uint64_t a = 0; a < (std::uint64_t{1} << orig.size()); ++a) {
    PartialAssignment phi;
    for (std::size_t i = 0; i < orig.size(); ++i)
      phi.set(orig[i], (a >> i) & 1U);
    if (count_models(apply(phi, fp), fresh, limits) > 1)
      return Uep::neither;
  }
  if (!dnf)
    return Uep::uep;

  // Partial assignments over the original variables, base 3 digits:
  // 0 unassigned, 1 false, 2 true.
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < orig.size(); ++i) {
    total *= 3;
    if (total > limits.subset_budget)
      throw Error(Errc::size_limit_exceeded, "too many partial assignments");
  }
  for (std::uint64_t code = 0; code < total; ++code) {
    PartialAssignment phi;
    std::uint64_t rest = code;
    for (std::size_t i = 0; i < orig.size(); ++i, rest /= 3)
      if (rest % 3)
        phi.set(orig[i], rest % 3 == 2);
    bool hits = std::any_of(dnf->begin(), dnf->end(), [&](const Clause &c) {
      return std::all_of(c.begin(), c.end(),
                         [&](Lit x) { return phi.value(x) == true; });
    });
    if (!hits)
      continue;
    std::size_t exact = 0;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << fresh.size()); ++b) {
      PartialAssignment beta = phi;
      for (std::size_t i = 0; i < fresh.size(); ++i)
        beta.set(fresh[i], (b >> i) & 1U);
      if (apply(beta, fp).empty())
        ++exact;
    }
    if (exact != 1)
      return Uep::uep;
  }
  return Uep::strong_uep;
}

} // namespace repkit
