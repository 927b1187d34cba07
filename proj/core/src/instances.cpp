#include "repkit/instances.hpp"

#include "repkit/error.hpp"
#include "repkit/reductions.hpp"
#include "repkit/sat.hpp"
#include "repkit/smu_tree.hpp"

#include <ostream>
#include <sstream>

namespace repkit {

const char *version() { return REPKIT_VERSION_STRING; }

void InstanceSpec::validate() const {
  if (k < 2 || h < k + 1 || variant < 1 || variant > 3)
    throw Error(Errc::invalid_spec,
                "need k >= 2, h >= k+1 and variant in 1..3, got " + name());
}

std::string InstanceSpec::name() const {
  return "G" + std::to_string(variant) + "_k" + std::to_string(k) + "_h" +
         std::to_string(h);
}

namespace {

using boost::multiprecision::cpp_int;

cpp_int central_binomial(unsigned m) {
  cpp_int r = 1;
  unsigned half = m / 2;
  for (unsigned i = 1; i <= half; ++i)
    r = r * (m - half + i) / i;
  return r;
}

} // namespace

StatsRecord stats(const InstanceSpec &spec) {
  spec.validate();
  StatsRecord s;
  s.spec = spec;
  s.alpha = alpha(spec.k, spec.h);
  s.l_base = extremal_literal_count(spec.k, spec.h);
  std::uint64_t a = s.alpha, lf = s.l_base;
  switch (spec.variant) {
  case 1:
    s.n = 2 * a - 1;
    s.c = 2 * a;
    s.l = 2 * lf;
    break;
  case 2:
    s.n = 3 * a - 1;
    s.c = 1 + 2 * a + lf;
    s.l = 2 * a + 4 * lf;
    break;
  default:
    s.n = 3 * a - 1;
    s.c = 1 + a + lf;
    s.l = a + 3 * lf;
    break;
  }
  unsigned m = spec.h - spec.k;
  s.b_lower = central_binomial(m);
  s.b_m1 = central_binomial(m + 1);
  s.b_nogood = central_binomial(m + 2);
  s.hd_claimed = spec.variant == 1 ? spec.k + 1 : 2;
  return s;
}

void stream_instance(const InstanceSpec &spec,
                     const std::function<void(std::span<const Lit>)> &sink) {
  spec.validate();
  LabeledBinaryTree t = extremal_tree(spec.k, spec.h);
  const auto &nodes = t.nodes();
  Var a = static_cast<Var>(t.num_leaves());
  // Root-to-leaf paths in leaf order. Labels grow along a path, so every
  // path is already sorted.
  std::vector<std::vector<Lit>> paths;
  paths.reserve(a);
  std::vector<Lit> path;
  auto walk = [&](auto &&self, std::size_t w) -> void {
    if (nodes[w].left < 0) {
      paths.push_back(path);
      return;
    }
    path.push_back(Lit::pos(nodes[w].label));
    self(self, static_cast<std::size_t>(nodes[w].left));
    path.back() = Lit::neg(nodes[w].label);
    self(self, static_cast<std::size_t>(nodes[w].right));
    path.pop_back();
  };
  walk(walk, 0);

  std::vector<Lit> clause;
  auto u = [a](std::size_t i) { return a + static_cast<Var>(i); };
  auto w = [a](std::size_t i) { return 2 * a + static_cast<Var>(i); };
  for (std::size_t i = 0; i < paths.size(); ++i) {
    clause = paths[i];
    clause.push_back(Lit::neg(u(i)));
    sink(clause);
  }
  if (spec.variant == 1) {
    for (std::size_t i = 0; i < paths.size(); ++i) {
      clause = paths[i];
      clause.push_back(Lit::pos(u(i)));
      sink(clause);
    }
    return;
  }
  // DNF term of leaf i: the complemented path plus u_i.
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (Lit x : paths[i]) {
      Lit pair[2] = {~x, Lit::neg(w(i))};
      sink(pair);
    }
    Lit pair[2] = {Lit::pos(u(i)), Lit::neg(w(i))};
    sink(pair);
    if (spec.variant == 2) {
      clause = paths[i];
      clause.push_back(Lit::neg(u(i)));
      clause.push_back(Lit::pos(w(i)));
      sink(clause);
    }
  }
  clause.clear();
  for (std::size_t i = 0; i < paths.size(); ++i)
    clause.push_back(Lit::pos(w(i)));
  sink(clause);
}

ClauseSet generate(const InstanceSpec &spec) {
  std::vector<Clause> out;
  stream_instance(spec, [&out](std::span<const Lit> c) {
    out.push_back(Clause::from_sorted(std::vector<Lit>(c.begin(), c.end())));
  });
  return ClauseSet(std::move(out));
}

std::vector<std::string> instance_comments(const StatsRecord &s) {
  const InstanceSpec &p = s.spec;
  std::uint64_t a = s.alpha;
  std::vector<std::string> out;
  out.push_back("instance " + p.name() + " k=" + std::to_string(p.k) +
                " h=" + std::to_string(p.h) +
                " variant=" + std::to_string(p.variant));
  out.push_back(std::string("generator repkit ") + version());
  out.push_back("alpha " + std::to_string(a));
  out.push_back("formulas n=" + std::to_string(s.n) +
                " c=" + std::to_string(s.c) + " l=" + std::to_string(s.l));
  out.push_back("hd_claimed " + std::to_string(s.hd_claimed));
  out.push_back("vars tree 1.." + std::to_string(a - 1) + " doping " +
                std::to_string(a) + ".." + std::to_string(2 * a - 1) +
                (p.variant == 1 ? std::string()
                                : " translation " + std::to_string(2 * a) +
                                      ".." + std::to_string(3 * a - 1)));
  return out;
}

void write_instance(std::ostream &out, const InstanceSpec &spec) {
  StatsRecord s = stats(spec);
  for (const std::string &line : instance_comments(s))
    out << "c " << line << '\n';
  out << "p cnf " << s.n << ' ' << s.c << '\n';
  std::string buf;
  stream_instance(spec, [&](std::span<const Lit> c) {
    buf.clear();
    for (Lit x : c) {
      buf += std::to_string(x.to_dimacs());
      buf += ' ';
    }
    buf += "0\n";
    out << buf;
  });
}

VerifyReport verify(const InstanceSpec &spec, VerifyLevel level,
                    const Limits &limits, std::uint64_t max_literals) {
  VerifyReport r;
  r.spec = spec;
  r.level = level;
  r.expected = stats(spec);
  if (r.expected.l > max_literals)
    throw Error(Errc::budget_exceeded,
                spec.name() + " has " + std::to_string(r.expected.l) +
                    " literal occurrences");
  ClauseSet g = generate(spec);
  r.n = g.n();
  r.c = g.c();
  r.l = g.l();
  auto check = [&r](const char *what, std::uint64_t got, std::uint64_t want) {
    if (got != want)
      r.failures.push_back(std::string(what) + ": generated " +
                           std::to_string(got) + ", formula " +
                           std::to_string(want));
  };
  check("n", r.n, r.expected.n);
  check("max variable", g.max_var(), r.expected.n);
  check("c", r.c, r.expected.c);
  check("l", r.l, r.expected.l);
  if (level == VerifyLevel::hardness) {
    try {
      r.hardness = hd_unsat(g, limits);
      if (*r.hardness != r.expected.hd_claimed)
        r.failures.push_back("hd: measured " + std::to_string(*r.hardness) +
                             ", claimed " +
                             std::to_string(r.expected.hd_claimed));
    } catch (const Error &e) {
      if (e.code() != Errc::not_unsatisfiable)
        throw;
      r.failures.push_back("instance is satisfiable");
    }
  }
  return r;
}

std::vector<InstanceSpec> benchmark_table_specs() {
  const std::pair<unsigned, std::vector<unsigned>> rows[] = {
      {2, {22, 32, 42, 52, 62, 72}},
      {3, {23, 33, 43}},
      {4, {24, 34, 44}},
      {5, {25, 35}},
  };
  std::vector<InstanceSpec> out;
  for (const auto &[k, hs] : rows)
    for (unsigned h : hs)
      for (unsigned variant = 1; variant <= 3; ++variant)
        out.push_back({k, h, variant});
  return out;
}

} // namespace repkit
