#pragma once

#include "repkit/cnf.hpp"
#include "repkit/limits.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace repkit {

const char *version();

// G^variant_{k,h}: the negated doped extremal clause-set F' together with
// (1) the doped clause-set itself, (2) cant of its DNF, (3) cantm of it.
struct InstanceSpec {
  unsigned k = 2;
  unsigned h = 3;
  unsigned variant = 1;

  // Errors with invalid-spec unless k >= 2, h >= k+1, variant in 1..3.
  void validate() const;
  std::string name() const;
  friend bool operator==(const InstanceSpec &, const InstanceSpec &) = default;
};

struct StatsRecord {
  InstanceSpec spec;
  std::uint64_t n = 0;
  std::uint64_t c = 0;
  std::uint64_t l = 0;
  std::uint64_t alpha = 0;
  // l of the doped extremal clause-set alone.
  std::uint64_t l_base = 0;
  // binom(m, floor(m/2)) for m = h-k, h-k+1 and h-k+2. The last one is the
  // bound for clause-sets of w-hardness k-1 equivalent to the doped
  // extremal clause-set.
  boost::multiprecision::cpp_int b_lower;
  boost::multiprecision::cpp_int b_m1;
  boost::multiprecision::cpp_int b_nogood;
  unsigned hd_claimed = 0;
};

// Closed-form sizes; no clause is built.
StatsRecord stats(const InstanceSpec &spec);

// Variable layout: tree labels 1..alpha-1 (preorder), doping variables
// alpha..2alpha-1 (leaf order), translation variables 2alpha..3alpha-1
// (leaf order). F' comes first, then the second block, leaf by leaf.
void stream_instance(const InstanceSpec &spec,
                     const std::function<void(std::span<const Lit>)> &sink);
ClauseSet generate(const InstanceSpec &spec);
std::vector<std::string> instance_comments(const StatsRecord &s);
// DIMACS text, byte-identical across runs.
void write_instance(std::ostream &out, const InstanceSpec &spec);

enum class VerifyLevel { formulas, hardness };

struct VerifyReport {
  InstanceSpec spec;
  VerifyLevel level = VerifyLevel::formulas;
  StatsRecord expected;
  std::uint64_t n = 0;
  std::uint64_t c = 0;
  std::uint64_t l = 0;
  std::optional<unsigned> hardness;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// formulas: generated sizes against stats. hardness: additionally
// unsatisfiability and hd against the claim. Errors with budget-exceeded
// when the instance is larger than max_literals.
VerifyReport verify(const InstanceSpec &spec, VerifyLevel level,
                    const Limits &limits = {},
                    std::uint64_t max_literals = 2'000'000);

// The 42 instances of the published statistics table.
std::vector<InstanceSpec> benchmark_table_specs();

} // namespace repkit
