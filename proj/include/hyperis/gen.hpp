#pragma once

#include <cstdint>

#include "hyperis/formula.hpp"

namespace hyperis {

struct FormulaSpec {
  int n = 10;
  int clauses = 10;       // target; fewer if the degree cap binds
  int arity_min = 2;
  int arity_max = 4;
  int max_degree = 6;     // per-variable occurrence cap
};

// Seeded random monotone formula respecting the degree cap; deterministic.
MonotoneFormula random_formula(const FormulaSpec& spec, std::uint64_t seed);

}  // namespace hyperis
