// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include "oracles.hpp"

#include "repkit/error.hpp"
#include "repkit/hardness.hpp"
#include "repkit/instances.hpp"
#include "repkit/mps.hpp"
#include "repkit/reductions.hpp"
#include "repkit/sat.hpp"
#include "repkit/smu_tree.hpp"
#include "repkit/translations.hpp"
#include "repkit/trigger.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace repkit;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string &what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 10)
        failures.push_back(what);
    }
  }
};

std::uint64_t binom(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

// Published instance statistics: k, h, alpha, then n, c, l per variant.
struct TableRow {
  unsigned k, h;
  std::uint64_t alpha;
  std::uint64_t v[3][3];
};

const TableRow kTable[] = {
    {2, 22, 254, {{507, 508, 8604}, {761, 4811, 17716}, {761, 4557, 13160}}},
    {2, 32, 529, {{1057, 1058, 24994}, {1586, 13556, 51046}, {1586, 13027, 38020}}},
    {2, 42, 904, {{1807, 1808, 54784}, {2711, 29201, 111376}, {2711, 28297, 83080}}},
    {2, 52, 1379, {{2757, 2758, 101974}, {4136, 53746, 206706}, {4136, 52367, 154340}}},
    {2, 62, 1954, {{3907, 3908, 170564}, {5861, 89191, 345036}, {5861, 87237, 257800}}},
    {2, 72, 2629, {{5257, 5258, 264554}, {7886, 137536, 534366}, {7886, 134907, 399460}}},
    {3, 23, 2048, {{4095, 4096, 80594}, {6143, 44394, 165284}, {6143, 42346, 122939}}},
    {3, 33, 6018, {{12035, 12036, 327384}, {18053, 175729, 666804}, {18053, 169711, 497094}}},
    {3, 43, 13288, {{26575, 26576, 922524}, {39863, 487839, 1871624}, {39863, 474551, 1397074}}},
    {4, 24, 12951, {{25901, 25902, 562542}, {38852, 307174, 1150986}, {38852, 294223, 856764}}},
    {4, 34, 52956, {{105911, 105912, 3150408}, {158867, 1681117, 6406728}, {158867, 1628161, 4778568}}},
    {4, 44, 149986, {{299971, 299972, 11326724}, {449957, 5963335, 22953420}, {449957, 5813349, 17140072}}},
    {5, 25, 68406, {{136811, 136812, 3202912}, {205217, 1738269, 6542636}, {205217, 1669863, 4872774}}},
    {5, 35, 384168, {{768335, 768336, 24413776}, {1152503, 12975225, 49595888}, {1152503, 12591057, 37004832}}},
};

std::string spec_name(unsigned k, unsigned h, unsigned i) {
  return InstanceSpec{k, h, i}.name();
}

Outcome instance_table() {
  Outcome o;
  std::size_t rows = 0, generated = 0;
  for (const TableRow &row : kTable)
    for (unsigned i = 1; i <= 3; ++i) {
      ++rows;
      InstanceSpec spec{row.k, row.h, i};
      StatsRecord s = stats(spec);
      std::string name = spec_name(row.k, row.h, i);
      o.expect(s.alpha == row.alpha, name + " alpha");
      o.expect(s.n == row.v[i - 1][0], name + " n");
      o.expect(s.c == row.v[i - 1][1], name + " c");
      o.expect(s.l == row.v[i - 1][2], name + " l");
      if (s.l <= 1'000'000) {
        ++generated;
        VerifyReport r = verify(spec, VerifyLevel::formulas);
        o.expect(r.ok(), name + " generate disagrees with stats");
      }
    }
  o.expect(rows == benchmark_table_specs().size(), "table size");
  o.detail = std::to_string(rows) + " rows, " + std::to_string(generated) +
             " generated";
  return o;
}

Outcome family_hardness() {
  Outcome o;
  const std::pair<unsigned, unsigned> kh[] = {{2, 3}, {2, 4}, {3, 4}};
  std::string values;
  for (auto [k, h] : kh)
    for (unsigned i = 1; i <= 3; ++i) {
      InstanceSpec spec{k, h, i};
      unsigned want = i == 1 ? k + 1 : 2;
      unsigned got = hd_unsat(generate(spec));
      values += " " + spec.name() + "=" + std::to_string(got);
      o.expect(got == want, spec.name() + " hd_unsat " + std::to_string(got) +
                                " expected " + std::to_string(want));
    }
  o.detail = values.substr(1);
  return o;
}

Outcome doped_tree_hardness() {
  Outcome o;
  std::vector<LabeledBinaryTree> trees;
  for (unsigned leaves = 1; leaves <= 5; ++leaves)
    for (auto &t : oracle::all_trees(leaves))
      trees.push_back(std::move(t));
  trees.push_back(extremal_tree(2, 3));
  std::size_t checked = 0;
  for (const LabeledBinaryTree &t : trees) {
    HardnessReport r = hd(dope(smuo(t)).doped);
    o.expect(r.exact && r.value == hts(t),
             to_string(smuo(t)) + ": hd " + std::to_string(r.value) +
                 " hts " + std::to_string(hts(t)));
    if (t.num_leaves() <= 4) {
      ++checked;
      o.expect(oracle::hd(dope(smuo(t)).doped) == hts(t),
               to_string(smuo(t)) + ": oracle disagrees");
    }
  }
  o.detail = std::to_string(trees.size()) + " trees, " +
             std::to_string(checked) + " also by the definition";
  return o;
}

Outcome prime_implicate_counts() {
  Outcome o;
  std::size_t trees = 0;
  for (unsigned c = 1; c <= 8; ++c)
    for (const LabeledBinaryTree &t : oracle::all_trees(c)) {
      ++trees;
      std::size_t got = prime_implicates(dope(smuo(t)).doped).c();
      o.expect(got == (std::size_t{1} << c) - 1,
               to_string(smuo(t)) + ": " + std::to_string(got) + " primes");
    }
  for (unsigned h = 1; h <= 7; ++h) {
    std::size_t got = prime_implicates(dope(smuo(extremal_tree(1, h))).doped).c();
    o.expect(got == (std::size_t{1} << (h + 1)) - 1,
             "ExT(1," + std::to_string(h) + "): " + std::to_string(got));
  }
  for (unsigned n = 1; n <= 8; ++n) {
    std::vector<Clause> g;
    std::vector<Lit> all;
    for (Var v = 1; v <= n; ++v) {
      g.push_back(Clause(std::vector<Lit>{Lit::pos(v)}));
      all.push_back(Lit::neg(v));
    }
    g.push_back(Clause(all));
    std::size_t got = prime_implicates(dope(ClauseSet(g)).doped).c();
    o.expect(got == (std::size_t{1} << n) + n,
             "G_" + std::to_string(n) + ": " + std::to_string(got));
  }
  o.detail = std::to_string(trees) + " SMU trees, ExT(1,1..7), G_n n<=8";
  return o;
}

ClauseSet g_n(unsigned n) {
  std::vector<Clause> g;
  std::vector<Lit> all;
  for (Var v = 1; v <= n; ++v) {
    g.push_back(Clause(std::vector<Lit>{Lit::pos(v)}));
    all.push_back(Lit::neg(v));
  }
  g.push_back(Clause(all));
  return ClauseSet(g);
}

Outcome mps_bijection() {
  Outcome o;
  std::mt19937 rng(20240501);
  std::size_t total = 0;
  for (int i = 0; i < 100; ++i) {
    unsigned n = std::uniform_int_distribution<unsigned>(2, 5)(rng);
    unsigned c = std::uniform_int_distribution<unsigned>(1, 8)(rng);
    ClauseSet f = oracle::random_clause_set(rng, n, c, 3);
    std::vector<MpsWitness> got = mps_subsets(f);
    auto want = oracle::minimal_premise_sets(f);
    total += want.size();
    bool same = got.size() == want.size();
    for (std::size_t j = 0; same && j < got.size(); ++j)
      same = got[j].subset == want[j].first && got[j].derived == want[j].second;
    o.expect(same, to_string(f) + ": " + std::to_string(got.size()) +
                       " via doping, " + std::to_string(want.size()) +
                       " by enumeration");
  }
  for (unsigned n = 1; n <= 8; ++n) {
    std::size_t got = mps_subsets(g_n(n)).size();
    o.expect(got == (std::size_t{1} << n) + n,
             "G_" + std::to_string(n) + ": " + std::to_string(got));
  }
  o.detail = "100 random clause-sets (" + std::to_string(total) +
             " premise sets), G_n n<=8";
  return o;
}

Outcome translation_laws() {
  Outcome o;
  std::mt19937 rng(7771);
  for (int i = 0; i < 200; ++i) {
    unsigned n = std::uniform_int_distribution<unsigned>(1, 6)(rng);
    unsigned c = std::uniform_int_distribution<unsigned>(1, 12 - n)(rng);
    ClauseSet g = oracle::random_clause_set(rng, n, c, 3).as_dnf();
    TranslationResult tm = cantm(g);
    HardnessReport r = hd(tm.output);
    o.expect(r.exact && r.value <= 1,
             "hd(cantm " + to_string(g) + ") = " + std::to_string(r.value));
    TranslationResult t = cant(g);
    std::vector<Var> orig = g.vars();
    unsigned rel = hd_relative(t.output, orig);
    o.expect(rel <= 1, "relative hd(cant " + to_string(g) +
                           ") = " + std::to_string(rel));
  }
  for (int i = 0; i < 200; ++i) {
    unsigned n = std::uniform_int_distribution<unsigned>(1, 5)(rng);
    unsigned c = std::uniform_int_distribution<unsigned>(1, std::min(12 - n, 7u))(rng);
    ClauseSet u = oracle::random_uhit(rng, n, c);
    std::vector<Clause> kept;
    for (const Clause &cl : u)
      if (std::bernoulli_distribution(0.8)(rng))
        kept.push_back(cl);
    if (kept.empty())
      kept.push_back(u[0]);
    ClauseSet g = ClauseSet(kept).as_dnf();
    HardnessReport r = hd(cant(g).output);
    o.expect(r.exact && r.value <= 1,
             "hd(cant hitting " + to_string(g) + ") = " + std::to_string(r.value));
  }
  // The three-term DNF sharing x1, x2, instantiated at x3 = x4 = x5 = 1 and
  // the third term's variable at 0.
  ClauseSet f = ClauseSet(make_clause_set({{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}).clauses(), true);
  TranslationResult t = cant(f);
  Var v3 = 0;
  for (const auto &[term, v] : t.new_var_map)
    if (term == Clause{1, 2, 5})
      v3 = v;
  PartialAssignment phi{3, 4, 5};
  phi.set(v3, false);
  ClauseSet inst = apply(phi, t.output);
  bool unit_free = std::none_of(inst.begin(), inst.end(),
                                [](const Clause &c) { return c.size() <= 1; });
  o.expect(!is_satisfiable(inst), "instantiated translation is satisfiable");
  o.expect(unit_free, "instantiated translation has a unit clause");
  o.expect(!r_k_refutes(inst, 1) && hd(t.output).value >= 2,
           "instantiated translation refuted by unit propagation");
  o.detail = "200 random DNFs, 200 hitting DNFs, worked instantiation";
  return o;
}

Outcome xor_laws() {
  Outcome o;
  std::string values;
  for (unsigned n = 3; n <= 6; ++n) {
    std::vector<Lit> xs;
    for (Var v = 1; v <= n; ++v)
      xs.push_back(Lit::pos(v));
    HardnessReport r = hd(xor_chain(xs));
    values += " chain" + std::to_string(n) + "=" + std::to_string(r.value);
    o.expect(r.exact && r.value <= 1, "hd(xor_chain " + std::to_string(n) +
                                          ") = " + std::to_string(r.value));
  }
  for (unsigned n : {3u, 4u}) {
    unsigned got = hd_unsat(two_xor_system(n));
    values += " system" + std::to_string(n) + "=" + std::to_string(got);
    o.expect(got == n, "hd_unsat(two_xor_system " + std::to_string(n) +
                           ") = " + std::to_string(got));
  }
  o.detail = values.substr(1);
  return o;
}

Outcome trigger_machinery() {
  Outcome o;
  // C1..C6 of the worked example.
  const Clause c[7] = {Clause{},         Clause{1, -3, -4}, Clause{2, 3, -4},
                       Clause{2, -3, 4}, Clause{-2, 3, 4},  Clause{1, 3, 4},
                       Clause{1, 2}};
  ClauseSet f(std::vector<Clause>(c + 1, c + 7));
  o.expect(prime_implicates(f) == f, "example is not prime");
  auto edge = [&](const TriggerHypergraph &h, int i) {
    std::vector<Clause> e = h.edge_clauses(c[i]);
    std::sort(e.begin(), e.end());
    return e;
  };
  auto set_of = [&](std::initializer_list<int> ids) {
    std::vector<Clause> e;
    for (int i : ids)
      e.push_back(c[i]);
    std::sort(e.begin(), e.end());
    return e;
  };
  std::size_t hypergraphs = 0;
  auto tau_nu = [&](const TriggerHypergraph &h, const std::string &what) {
    ++hypergraphs;
    TransversalResult t = transversal_number(h);
    MatchingResult m = matching_number(h);
    o.expect(t.exact && m.exact, what + ": inexact tau/nu");
    o.expect(is_transversal(h, t.witness), what + ": tau witness");
    o.expect(t.value >= m.value, what + ": tau < nu");
    return t.value;
  };
  const std::vector<std::vector<int>> e1 = {
      {}, {1, 6}, {2, 6}, {3, 6}, {4, 5}, {4, 5, 6}, {6}};
  const std::vector<std::vector<int>> e2 = {
      {}, {1, 6}, {2, 6}, {3, 6}, {4, 5}, {4, 5, 6}, {1, 2, 3, 5, 6}};
  TriggerHypergraph h0 = trigger_hypergraph(f, 0);
  TriggerHypergraph h1 = trigger_hypergraph(f, 1);
  TriggerHypergraph h2 = trigger_hypergraph(f, 2);
  for (int i = 1; i <= 6; ++i) {
    std::string ci = "C" + std::to_string(i);
    o.expect(edge(h0, i) == set_of({i}), "E^0_" + ci);
    std::vector<Clause> want1, want2;
    for (int j : e1[i])
      want1.push_back(c[j]);
    for (int j : e2[i])
      want2.push_back(c[j]);
    std::sort(want1.begin(), want1.end());
    std::sort(want2.begin(), want2.end());
    o.expect(edge(h1, i) == want1, "E^1_" + ci);
    o.expect(edge(h2, i) == want2, "E^2_" + ci);
  }
  for (unsigned k = 3; k <= 5; ++k)
    o.expect(trigger_hypergraph(f, k).edges == h2.edges,
             "T_" + std::to_string(k) + " differs from T_2");
  for (unsigned k = 0; k <= 3; ++k)
    tau_nu(trigger_hypergraph(f, k), "example T_" + std::to_string(k));
  ClauseSet without6 = f.without(c[6]);
  o.expect(oracle::equivalent(without6, f), "F without C6 is not equivalent");
  o.expect(hd(without6).value == 2, "F without C6 not in UC_2 \\ UC_1");
  ClauseSet base2 = kbase(f, 2);
  o.expect(oracle::equivalent(base2, f) && hd(base2).value <= 2,
           "kbase(F, 2) = " + to_string(base2));
  for (std::uint32_t mask = 1; mask < 64; ++mask) {
    std::vector<Clause> sub;
    for (int i = 0; i < 6; ++i)
      if ((mask >> i) & 1U)
        sub.push_back(c[i + 1]);
    ClauseSet s(sub);
    if (oracle::equivalent(s, f) && hd_at_most(s, 1))
      o.expect(s.contains(c[6]), to_string(s) + " is in UC_1 without C6");
  }
  o.expect(is_transversal(h2, base2), "kbase(F, 2) is not a transversal");
  o.expect(base2.c() >= tau_nu(h2, "example kbase"), "kbase below tau");

  std::mt19937 rng(99);
  std::size_t found = 0, instances = 0;
  while (instances < 50) {
    unsigned n = std::uniform_int_distribution<unsigned>(3, 5)(rng);
    unsigned cs = std::uniform_int_distribution<unsigned>(2, 7)(rng);
    ClauseSet g = oracle::random_clause_set(rng, n, cs, 3);
    ClauseSet p = prime_implicates(g);
    if (p.c() > 12)
      continue;
    ++instances;
    for (unsigned k = 0; k <= 2; ++k) {
      TriggerHypergraph h = trigger_hypergraph(p, k);
      std::string what = to_string(g) + " k=" + std::to_string(k);
      std::size_t tau = tau_nu(h, what);
      for (std::uint32_t mask = 1; mask < (1U << p.c()); ++mask) {
        std::vector<Clause> sub;
        for (std::size_t i = 0; i < p.c(); ++i)
          if ((mask >> i) & 1U)
            sub.push_back(p[i]);
        ClauseSet s(sub);
        if (!oracle::equivalent(s, p) || whd(s).value > k)
          continue;
        ++found;
        o.expect(is_transversal(h, s), what + ": " + to_string(s) +
                                           " is not a transversal");
        o.expect(s.c() >= tau, what + ": subset below tau");
      }
      // The primality-reduced original, when it has low w-hardness.
      if (whd(g).value <= k) {
        std::vector<Clause> reduced;
        for (const Clause &cl : g)
          for (const Clause &q : p)
            if (q.subsumes(cl)) {
              reduced.push_back(q);
              break;
            }
        o.expect(is_transversal(h, ClauseSet(reduced)),
                 what + ": reduced original is not a transversal");
      }
    }
  }
  for (unsigned leaves = 2; leaves <= 5; ++leaves)
    for (const LabeledBinaryTree &t : oracle::all_trees(leaves))
      for (unsigned k = 0; k <= 2; ++k)
        tau_nu(trigger_hypergraph(tree_prime_implicates(t), k),
               "doped " + to_string(smuo(t)));
  o.detail = "example edges, " + std::to_string(found) +
             " WC_k subsets over 50 clause-sets, " +
             std::to_string(hypergraphs) + " hypergraphs";
  return o;
}

Outcome separation() {
  Outcome o;
  std::string values;
  for (unsigned h = 3; h <= 5; ++h) {
    LabeledBinaryTree t = extremal_tree(2, h);
    std::string what = "ExT(2," + std::to_string(h) + ")";
    DisjointEdgeCertificate cert = depth_k_incomparable_family(t, 1);
    std::size_t want = binom(h, h / 2);
    o.expect(cert.leaf_sets.size() == want, what + ": certificate size " +
                                                std::to_string(cert.leaf_sets.size()));
    o.expect(cert.edges_checked && cert.edges_disjoint,
             what + ": certificate edges not verified disjoint");
    // Rebuild every edge from the full prime-implicate set.
    ClauseSet p = tree_prime_implicates(t);
    o.expect(p.c() == (std::size_t{1} << t.num_leaves()) - 1, what + ": primes");
    std::vector<std::vector<Clause>> edges;
    for (std::size_t i = 0; i < cert.leaf_sets.size(); ++i) {
      const Clause &cv = cert.clauses[i];
      o.expect(cv == clause_cv(t, cert.leaf_sets[i]), what + ": C_V");
      o.expect(p.contains(cv), what + ": C_V not prime");
      std::vector<Clause> e;
      for (const Clause &q : p)
        if (q.clash_count(cv) == 0 && clause_difference(q, cv).size() <= 1)
          e.push_back(q);
      edges.push_back(e);
      if (cert.edges_checked) {
        std::vector<Clause> theirs = cert.edges[i];
        std::sort(theirs.begin(), theirs.end());
        o.expect(theirs == e, what + ": certificate edge differs");
      }
    }
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j)
        for (const Clause &q : edges[i])
          o.expect(!std::binary_search(edges[j].begin(), edges[j].end(), q),
                   what + ": edges intersect");
    ClauseSet doped = dope(smuo(t)).doped;
    o.expect(doped.c() == alpha(2, h), what + ": c != alpha");
    values += " h=" + std::to_string(h) + ":" + std::to_string(want) + "/" +
              std::to_string(doped.c());
    if (h == 3) {
      TriggerHypergraph t1 = trigger_hypergraph(p, 1);
      MatchingResult m = matching_number(t1);
      o.expect(m.value >= want, what + ": nu below certificate");
      ClauseSet base = kbase(p, 1);
      o.expect(base.c() >= m.value, what + ": 1-base below nu");
      values += " nu=" + std::to_string(m.value) +
                " 1-base=" + std::to_string(base.c());
    }
  }
  o.detail = "bound/clauses" + values;
  return o;
}

Outcome measure_ordering() {
  Outcome o;
  std::mt19937 rng(4242);
  std::size_t unsat = 0, checked = 0;
  for (int i = 0; i < 500; ++i) {
    unsigned n = std::uniform_int_distribution<unsigned>(1, 8)(rng);
    unsigned c = i % 2 == 0 ? std::uniform_int_distribution<unsigned>(1, 2 * n)(rng)
                            : std::uniform_int_distribution<unsigned>(4 * n, 6 * n)(rng);
    ClauseSet f = oracle::random_clause_set(rng, n, c, 3);
    HardnessReport h = hd(f), p = phd(f), w = whd(f);
    std::string what = to_string(f);
    o.expect(h.exact && p.exact && w.exact, what + ": inexact");
    o.expect(w.value <= h.value && h.value <= p.value && p.value <= h.value + 1,
             what + ": whd " + std::to_string(w.value) + " hd " +
                 std::to_string(h.value) + " phd " + std::to_string(p.value));
    std::vector<Var> vars = f.vars();
    if (vars.size() <= 5) {
      ++checked;
      o.expect(h.value == oracle::hd(f) && p.value == oracle::phd(f) &&
                   w.value == oracle::whd(f),
               what + ": oracle disagrees");
    }
    PartialAssignment phi;
    for (Var v : vars) {
      int pick = std::uniform_int_distribution<int>(0, 2)(rng);
      if (pick)
        phi.set(v, pick == 2);
    }
    o.expect(hd(apply(phi, f)).value <= h.value,
             what + ": hd grows under " + to_string(phi));
    if (!is_satisfiable(f) && vars.size() >= 2) {
      ++unsat;
      std::shuffle(vars.begin(), vars.end(), rng);
      Lit x = Lit::make(vars[0], std::bernoulli_distribution(0.5)(rng));
      Lit y = Lit::make(vars[1], std::bernoulli_distribution(0.5)(rng));
      ClauseSet s = substitute(f, x, y);
      o.expect(hd(s).value <= h.value,
               what + ": hd grows under " + to_string(x) + "<-" + to_string(y));
    }
  }
  o.detail = "500 clause-sets, " + std::to_string(unsat) +
             " unsatisfiable, " + std::to_string(checked) +
             " against the definitions";
  return o;
}

} // namespace

int main() {
  const std::pair<const char *, std::function<Outcome()>> criteria[] = {
      {"instance table reproduction", instance_table},
      {"hardness of the instance families", family_hardness},
      {"doped tree hardness", doped_tree_hardness},
      {"prime implicate counts", prime_implicate_counts},
      {"minimal premise set bijection", mps_bijection},
      {"translation laws", translation_laws},
      {"parity chains", xor_laws},
      {"trigger hypergraphs", trigger_machinery},
      {"separation at small height", separation},
      {"measure ordering", measure_ordering},
  };
  int failed = 0, id = 0;
  for (const auto &[name, run] : criteria) {
    ++id;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception &e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("AC%d %s: %s (%s; %.1fs)\n", id, name, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    for (const std::string &f : o.failures)
      std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed;
}
