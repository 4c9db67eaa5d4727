#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "hyperis/formula.hpp"

namespace hyperis {

// A computation-tree node: a formula together with a query variable that
// is not forced in it.
struct QueryNode {
  MonotoneFormula formula;
  VarId x = 0;
};

// The clauses of Ctilde containing x, ordered by increasing arity with all
// arity-2 clauses moved to the end; ties keep ascending clause index.
struct OccurrenceOrdering {
  std::vector<int> clause_idx;  // indices into Ctilde's clause list
  std::vector<int> w;           // w_i = arity(c_i) - 1
  int d() const { return static_cast<int>(clause_idx.size()); }
};

// l_w: depth charged when recursing through a clause of arity w+1.
int depth_cost(int w);

OccurrenceOrdering order_occurrences(const MonotoneFormula& ctilde, VarId x);

// Child instance (C_{i,j}, x_{i,j}); i, j are 1-based. The first i-1
// ordered clauses are dropped, x is pinned to 0 in clauses i+1..d, clause i
// is dropped and x_{i,1}..x_{i,j-1} are pinned to 0 everywhere.
QueryNode build_child(const MonotoneFormula& ctilde, VarId x,
                      const OccurrenceOrdering& ord, int i, int j);

struct EvalOptions {
  std::uint64_t node_budget = 0;  // 0 = unlimited
  bool use_memo = true;
  std::ostream* trace = nullptr;  // one line per evaluated node
};

struct EvalStats {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> memo_hits{0};
  std::atomic<std::uint64_t> bound_violations{0};
};

// Evaluator for the message recursion. A single instance may be shared by
// several threads: the memo tables take per-shard locks and races on
// identical keys are benign (values are deterministic).
class TreeEvaluator {
 public:
  explicit TreeEvaluator(EvalOptions opts = {});
  ~TreeEvaluator();

  // Truncated message R(C, x, L) in double precision. If exact_out is
  // non-null it is set iff the recursion bottomed out before any depth
  // truncation, in which case the value equals R(C, x).
  double ratio_truncated(const QueryNode& node, long budget,
                         bool* exact_out = nullptr);

  // Untruncated recursion in exact rational arithmetic;
  // equals Pr(x=0)/Pr(x=1).
  mpq_class ratio_exact(const QueryNode& node);

  const EvalStats& stats() const { return stats_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  EvalStats stats_;
};

// One-shot conveniences.
double ratio_truncated(const QueryNode& node, long budget);
mpq_class ratio_exact(const QueryNode& node,
                      std::uint64_t node_budget = 0);

}  // namespace hyperis
