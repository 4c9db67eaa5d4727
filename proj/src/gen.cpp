#include "hyperis/gen.hpp"

#include <algorithm>
#include <random>

namespace hyperis {

MonotoneFormula random_formula(const FormulaSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> arity_pick(spec.arity_min, spec.arity_max);
  std::vector<int> degree(static_cast<size_t>(spec.n) + 1, 0);
  std::vector<Clause> clauses;
  int attempts = 0;
  while (static_cast<int>(clauses.size()) < spec.clauses &&
         attempts < spec.clauses * 50) {
    ++attempts;
    const int arity = std::min(arity_pick(rng), spec.n);
    std::vector<VarId> pool;
    for (VarId v = 1; v <= spec.n; ++v)
      if (degree[static_cast<size_t>(v)] < spec.max_degree) pool.push_back(v);
    if (static_cast<int>(pool.size()) < arity) break;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<VarId> vars(pool.begin(), pool.begin() + arity);
    Clause cand(std::move(vars));
    bool dup = false;
    for (const Clause& c : clauses)
      if (c == cand) { dup = true; break; }
    if (dup) continue;
    for (VarId v : cand.vars()) ++degree[static_cast<size_t>(v)];
    clauses.push_back(std::move(cand));
  }
  return MonotoneFormula(spec.n, std::move(clauses), /*dedup=*/true);
}

}  // namespace hyperis
