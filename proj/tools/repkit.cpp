#include "repkit/dimacs.hpp"
#include "repkit/error.hpp"
#include "repkit/hardness.hpp"
#include "repkit/instances.hpp"
#include "repkit/mps.hpp"
#include "repkit/reductions.hpp"
#include "repkit/smu_tree.hpp"
#include "repkit/translations.hpp"
#include "repkit/trigger.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>

using namespace repkit;
using nlohmann::json;

namespace {

json lits_json(const Clause &c) { return c.to_dimacs(); }

json clauses_json(std::span<const Clause> cs) {
  json out = json::array();
  for (const Clause &c : cs)
    out.push_back(lits_json(c));
  return out;
}

json assignment_json(const PartialAssignment &phi) {
  json out = json::array();
  for (Lit x : phi.true_literals())
    out.push_back(x.to_dimacs());
  return out;
}

// Writes to the file when a path is given, else to stdout.
class Output {
public:
  explicit Output(const std::string &path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_)
        throw Error(Errc::invalid_input, "cannot write " + path);
    }
  }
  std::ostream &stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

void print_json(const json &j) { std::cout << j.dump(2) << '\n'; }

struct LimitOptions {
  Limits limits;
  void add(CLI::App *app) {
    app->add_option("--max-vars", limits.brute_force_vars,
                    "variables allowed for brute-force measures");
    app->add_option("--max-states", limits.brute_force_states,
                    "instantiations visited by brute-force measures");
    app->add_option("--max-resolvents", limits.resolution_clauses,
                    "clauses generated by resolution closures");
    app->add_option("--max-nodes", limits.search_nodes,
                    "search nodes for transversal and matching search");
  }
};

json stats_json(const StatsRecord &s) {
  return {{"instance", s.spec.name()},
          {"k", s.spec.k},
          {"h", s.spec.h},
          {"variant", s.spec.variant},
          {"alpha", s.alpha},
          {"n", s.n},
          {"c", s.c},
          {"l", s.l},
          {"hd_claimed", s.hd_claimed},
          {"b_h_minus_k", s.b_lower.str()},
          {"b_h_minus_k_plus_1", s.b_m1.str()},
          {"b_h_minus_k_plus_2", s.b_nogood.str()}};
}

// Parity constraints from a clause list: every clause is one equation
// x1 ⊕ ... ⊕ xm = 0 over its literals.
ClauseSet parity_translation(const std::vector<Clause> &eqs, Var top) {
  std::vector<Clause> out;
  Var next = top + 1;
  for (const Clause &e : eqs) {
    const auto &xs = e.lits();
    if (xs.size() == 1) {
      out.push_back(Clause(std::vector<Lit>{~xs[0]}));
    } else if (xs.size() == 2) {
      out.push_back(Clause(std::vector<Lit>{xs[0], ~xs[1]}));
      out.push_back(Clause(std::vector<Lit>{~xs[0], xs[1]}));
    } else if (xs.size() >= 3) {
      ClauseSet chain = xor_chain(xs, next);
      next += static_cast<Var>(xs.size() - 2);
      out.insert(out.end(), chain.begin(), chain.end());
    }
  }
  return ClauseSet(std::move(out));
}

int run(int argc, char **argv) {
  CLI::App app{"Representation and hardness toolkit for clause-sets"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);

  // analyze
  std::string measure = "hd", in_path;
  LimitOptions analyze_limits;
  auto *analyze = app.add_subcommand("analyze", "hardness measures of a CNF");
  analyze->add_option("--measure", measure)
      ->check(CLI::IsMember({"hd", "phd", "whd", "hd-unsat", "whd-unsat"}));
  analyze->add_option("file", in_path)->required();
  analyze_limits.add(analyze);

  // mps
  auto *mps = app.add_subcommand("mps", "minimal premise sets of a CNF");
  mps->add_option("file", in_path)->required();
  LimitOptions mps_limits;
  mps_limits.add(mps);

  // dope
  std::string out_path;
  auto *dope_cmd = app.add_subcommand("dope", "add a fresh variable to every clause");
  dope_cmd->add_option("file", in_path)->required();
  dope_cmd->add_option("-o,--output", out_path);

  // tree
  unsigned k = 2, h = 3, variant = 1;
  std::string emit = "cnf";
  auto *tree = app.add_subcommand("tree", "extremal tree and its clause-sets");
  tree->add_option("--k", k)->required();
  tree->add_option("--h", h)->required();
  tree->add_option("--emit", emit)->check(CLI::IsMember({"cnf", "doped-cnf", "dot"}));
  tree->add_option("-o,--output", out_path);

  // translate
  std::string mode = "cant";
  auto *translate = app.add_subcommand("translate", "DNF or parity equations to CNF");
  translate->add_option("--mode", mode)->check(CLI::IsMember({"cant", "cantm", "xor"}));
  translate->add_option("file", in_path)->required();
  translate->add_option("-o,--output", out_path);

  // trigger
  std::vector<unsigned> extremal;
  auto *trigger = app.add_subcommand("trigger", "trigger hypergraph, tau and nu");
  trigger->add_option("--k", k)->required();
  trigger->add_option("file", in_path);
  trigger->add_option("--extremal", extremal,
                      "use the doped extremal tree clause-set K H instead of a file")
      ->expected(2);
  LimitOptions trigger_limits;
  trigger_limits.add(trigger);

  // generate
  auto *gen = app.add_subcommand("generate", "benchmark instance as DIMACS");
  gen->add_option("--k", k)->required();
  gen->add_option("--h", h)->required();
  gen->add_option("--variant", variant)->required()->check(CLI::Range(1, 3));
  gen->add_option("-o,--output", out_path);

  // stats
  bool table = false;
  std::string format = "csv";
  auto *stats_cmd = app.add_subcommand("stats", "closed-form instance statistics");
  stats_cmd->add_flag("--table", table, "every row of the published table");
  stats_cmd->add_option("--k", k);
  stats_cmd->add_option("--h", h);
  stats_cmd->add_option("--variant", variant);
  stats_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  // verify
  std::string level = "formulas";
  std::uint64_t max_literals = 2'000'000;
  auto *verify_cmd = app.add_subcommand("verify", "check generated instances");
  verify_cmd->add_flag("--table", table, "every row of the published table");
  verify_cmd->add_option("--k", k);
  verify_cmd->add_option("--h", h);
  verify_cmd->add_option("--variant", variant);
  verify_cmd->add_option("--level", level)->check(CLI::IsMember({"formulas", "hardness"}));
  verify_cmd->add_option("--max-literals", max_literals);

  CLI11_PARSE(app, argc, argv);

  if (*analyze) {
    DimacsFile file = read_dimacs_file(in_path);
    ClauseSet f = file.clause_set();
    const Limits &lim = analyze_limits.limits;
    json j = {{"file", in_path}, {"n", f.n()}, {"c", f.c()}, {"l", f.l()},
              {"measure", measure}};
    if (measure == "hd-unsat" || measure == "whd-unsat") {
      j["value"] = measure == "hd-unsat" ? hd_unsat(f, lim) : whd_unsat(f, lim);
      j["witness"] = nullptr;
      j["exact"] = true;
    } else {
      HardnessReport r = measure == "hd"    ? hd(f, lim)
                         : measure == "phd" ? phd(f, lim)
                                            : whd(f, lim);
      j["value"] = r.value;
      j["witness"] = r.witness ? assignment_json(*r.witness) : json(nullptr);
      j["exact"] = r.exact;
    }
    print_json(j);
    return 0;
  }

  if (*mps) {
    DimacsFile file = read_dimacs_file(in_path);
    // Indices refer to the first occurrence of each clause in the file.
    std::map<Clause, std::size_t> index;
    for (std::size_t i = 0; i < file.clauses.size(); ++i)
      index.emplace(file.clauses[i], i + 1);
    json out = json::array();
    for (const MpsWitness &w : mps_subsets(file.clause_set(), mps_limits.limits)) {
      std::vector<std::size_t> ids;
      for (const Clause &c : w.subset)
        ids.push_back(index.at(c));
      std::sort(ids.begin(), ids.end());
      out.push_back({{"subset", ids}, {"derived", lits_json(w.derived)}});
    }
    print_json(out);
    return 0;
  }

  if (*dope_cmd) {
    DimacsFile file = read_dimacs_file(in_path);
    std::vector<Clause> order;
    for (const Clause &c : file.clauses)
      if (std::find(order.begin(), order.end(), c) == order.end())
        order.push_back(c);
    DopedClauseSet d = dope_ordered(order);
    std::vector<std::string> comments{"doped " + in_path};
    for (const auto &[c, u] : d.doping)
      comments.push_back("doping " + std::to_string(u) + " " + to_string(c));
    Output out(out_path);
    write_dimacs(out.stream(), d.doped, comments);
    return 0;
  }

  if (*tree) {
    LabeledBinaryTree t = extremal_tree(k, h);
    Output out(out_path);
    std::string head = "extremal tree k=" + std::to_string(k) + " h=" +
                       std::to_string(h) + " leaves=" +
                       std::to_string(t.num_leaves());
    if (emit == "dot") {
      out.stream() << to_dot(t);
    } else if (emit == "cnf") {
      std::vector<std::string> comments{head};
      write_dimacs(out.stream(), smuo(t), comments);
    } else {
      DopedClauseSet d = dope_tree(t);
      std::vector<std::string> comments{head, "doping variables " +
                                                  std::to_string(t.max_label() + 1) +
                                                  ".." +
                                                  std::to_string(d.doping.back().second) +
                                                  " in leaf order"};
      write_dimacs(out.stream(), d.doped, comments);
    }
    return 0;
  }

  if (*translate) {
    DimacsFile file = read_dimacs_file(in_path);
    ClauseSet result;
    std::vector<std::string> comments;
    if (mode == "xor") {
      ClauseSet eqs = file.clause_set();
      result = parity_translation(eqs.clauses(), eqs.max_var());
      comments.push_back("parity chains for " + std::to_string(eqs.c()) +
                         " equations from " + in_path);
    } else {
      if (!file.dnf)
        throw Error(Errc::invalid_input, in_path + " is not a 'p dnf' file");
      ClauseSet g = file.clause_set();
      TranslationResult r = mode == "cant" ? cant(g) : cantm(g);
      result = r.output;
      comments.push_back(std::string(translation_name(r.kind)) + " of " + in_path);
      for (const auto &[c, v] : r.new_var_map)
        comments.push_back("new " + std::to_string(v) + " " + to_string(c));
    }
    Output out(out_path);
    write_dimacs(out.stream(), result, comments);
    return 0;
  }

  if (*trigger) {
    const Limits &lim = trigger_limits.limits;
    ClauseSet p;
    std::optional<LabeledBinaryTree> t;
    if (!extremal.empty()) {
      t = extremal_tree(extremal[0], extremal[1]);
      p = tree_prime_implicates(*t);
    } else {
      if (in_path.empty())
        throw Error(Errc::invalid_input, "need a file or --extremal K H");
      p = prime_implicates(read_dimacs_file(in_path).clause_set(), lim);
    }
    TriggerHypergraph hg = trigger_hypergraph(p, k);
    json edges = json::array();
    for (std::size_t i = 0; i < hg.vertices.size(); ++i) {
      json members = json::array();
      for (std::size_t v : hg.edges[i])
        members.push_back(lits_json(hg.vertices[v]));
      edges.push_back({{"clause", lits_json(hg.vertices[i])}, {"edge", members}});
    }
    json j = {{"k", k}, {"vertices", hg.vertices.size()}, {"edges", edges}};
    json certificate = json::object();
    try {
      TransversalResult tau = transversal_number(hg, lim);
      std::vector<Clause> witness;
      for (std::size_t v : tau.witness)
        witness.push_back(hg.vertices[v]);
      j["tau"] = {{"value", tau.value}, {"exact", tau.exact},
                  {"lower_bound", tau.lower_bound},
                  {"transversal", clauses_json(witness)}};
      MatchingResult nu = matching_number(hg, lim);
      json disjoint = json::array();
      for (std::size_t owner : nu.witness)
        disjoint.push_back({{"clause", lits_json(hg.vertices[owner])},
                            {"edge", clauses_json(hg.edge_clauses(hg.vertices[owner]))}});
      j["nu"] = {{"value", nu.value}, {"exact", nu.exact}};
      certificate["disjoint_edges"] = disjoint;
    } catch (const Error &e) {
      if (e.code() != Errc::size_limit_exceeded)
        throw;
      j["tau"] = nullptr;
      j["nu"] = nullptr;
      certificate["error"] = e.what();
    }
    if (t && k < height(*t)) {
      try {
        DisjointEdgeCertificate c = depth_k_incomparable_family(*t, k);
        json family = json::array();
        for (std::size_t i = 0; i < c.leaf_sets.size(); ++i)
          family.push_back({{"leaves", c.leaf_sets[i]}, {"clause", lits_json(c.clauses[i])}});
        certificate["incomparable_family"] = {{"size", c.leaf_sets.size()},
                                              {"sets", family},
                                              {"edges_checked", c.edges_checked},
                                              {"edges_disjoint", c.edges_disjoint}};
      } catch (const Error &e) {
        if (e.code() != Errc::depth_precondition_violated)
          throw;
        certificate["incomparable_family"] = e.what();
      }
    }
    j["certificate"] = certificate;
    print_json(j);
    return 0;
  }

  if (*gen) {
    Output out(out_path);
    write_instance(out.stream(), {k, h, variant});
    return 0;
  }

  auto selected = [&]() {
    if (table)
      return benchmark_table_specs();
    return std::vector<InstanceSpec>{{k, h, variant}};
  };

  if (*stats_cmd) {
    std::vector<StatsRecord> rows;
    for (const InstanceSpec &s : selected())
      rows.push_back(stats(s));
    if (format == "json") {
      json out = json::array();
      for (const StatsRecord &s : rows)
        out.push_back(stats_json(s));
      print_json(table ? out : out[0]);
    } else {
      std::cout << "instance,k,h,variant,alpha,n,c,l,hd_claimed,"
                   "b_h_minus_k,b_h_minus_k_plus_1,b_h_minus_k_plus_2\n";
      for (const StatsRecord &s : rows)
        std::cout << s.spec.name() << ',' << s.spec.k << ',' << s.spec.h << ','
                  << s.spec.variant << ',' << s.alpha << ',' << s.n << ','
                  << s.c << ',' << s.l << ',' << s.hd_claimed << ','
                  << s.b_lower << ',' << s.b_m1 << ',' << s.b_nogood << '\n';
    }
    return 0;
  }

  if (*verify_cmd) {
    VerifyLevel lv = level == "hardness" ? VerifyLevel::hardness : VerifyLevel::formulas;
    json out = json::array();
    bool ok = true;
    for (const InstanceSpec &s : selected()) {
      json row = {{"instance", s.name()}, {"level", level}};
      try {
        VerifyReport r = verify(s, lv, {}, max_literals);
        row["n"] = r.n;
        row["c"] = r.c;
        row["l"] = r.l;
        if (r.hardness)
          row["hd"] = *r.hardness;
        row["ok"] = r.ok();
        row["failures"] = r.failures;
        ok = ok && r.ok();
      } catch (const Error &e) {
        if (e.code() != Errc::budget_exceeded || !table)
          throw;
        row["skipped"] = e.what();
      }
      out.push_back(row);
    }
    print_json(table ? out : out[0]);
    return ok ? 0 : 1;
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  try {
    return run(argc, argv);
  } catch (const Error &e) {
    std::cerr << "repkit: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "repkit: " << e.what() << '\n';
    return 2;
  }
}
