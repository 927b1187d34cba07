#pragma once

#include "repkit/cnf.hpp"
#include "repkit/limits.hpp"

#include <optional>
#include <span>

namespace repkit {

enum class Measure { hd, phd, whd };
const char *measure_name(Measure m);

struct HardnessReport {
  Measure kind = Measure::hd;
  unsigned value = 0;
  // An instantiation at which the reported level is needed.
  std::optional<PartialAssignment> witness;
  // False when the search hit a budget; value is then a lower bound.
  bool exact = true;
};

// Maxima over all partial assignments. Unsatisfiable instantiations are not
// extended further (the measures only drop under instantiation), and equal
// instantiated clause-sets are visited once.
HardnessReport hd(const ClauseSet &f, const Limits &limits = {});
HardnessReport phd(const ClauseSet &f, const Limits &limits = {});
HardnessReport whd(const ClauseSet &f, const Limits &limits = {});

// hd(F) <= k, stopping at the first instantiation that needs more.
bool hd_at_most(const ClauseSet &f, unsigned k, const Limits &limits = {});

// Hardness over assignments restricted to the variables in v.
unsigned hd_relative(const ClauseSet &f, std::span<const Var> v,
                     const Limits &limits = {});

// |V| + max over total assignments psi to V of hd(psi * F); an upper bound
// on hd(F).
unsigned hd_upper_split(const ClauseSet &f, std::span<const Var> v,
                        const Limits &limits = {});

} // namespace repkit
