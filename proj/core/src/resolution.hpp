#pragma once

#include "repkit/cnf.hpp"

#include <cstddef>
#include <limits>

namespace repkit::detail {

inline constexpr unsigned unbounded_width = std::numeric_limits<unsigned>::max();

struct Saturation {
  bool refuted = false;
  // Subsumption-free closure; {⊥} when refuted.
  ClauseSet clauses;
};

// Closure under resolution steps with one parent of length <= width, with
// forward and backward subsumption. Throws budget-exceeded when more than
// `budget` resolvents are generated.
Saturation saturate(const ClauseSet &f, unsigned width, std::size_t budget);

} // namespace repkit::detail
