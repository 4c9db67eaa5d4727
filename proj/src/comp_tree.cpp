#include "hyperis/comp_tree.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cmath>
#include <mutex>
#include <optional>
#include <ostream>
#include <unordered_map>

#include "hyperis/utils.hpp"

namespace hyperis {

int depth_cost(int w) {
  if (w < 1) fail(ErrorKind::IndexOutOfRange, "depth_cost needs w >= 1");
  // smallest l with 6^l >= w+1
  int l = 1;
  long long p = 6;
  while (p < static_cast<long long>(w) + 1) {
    p *= 6;
    ++l;
  }
  return l;
}

OccurrenceOrdering order_occurrences(const MonotoneFormula& ctilde, VarId x) {
  OccurrenceOrdering ord;
  ord.clause_idx = ctilde.occurrences(x);
  if (ord.clause_idx.empty())
    fail(ErrorKind::FreeVariable, "variable occurs in no clause");
  std::stable_sort(ord.clause_idx.begin(), ord.clause_idx.end(),
                   [&ctilde](int a, int b) {
                     const int aa = ctilde.clause(a).arity();
                     const int ab = ctilde.clause(b).arity();
                     const int ka = aa == 2 ? INT_MAX : aa;
                     const int kb = ab == 2 ? INT_MAX : ab;
                     if (ka != kb) return ka < kb;
                     return false;  // stable: ties keep ascending index
                   });
  ord.w.reserve(ord.clause_idx.size());
  for (int idx : ord.clause_idx)
    ord.w.push_back(ctilde.clause(idx).arity() - 1);
  return ord;
}

QueryNode build_child(const MonotoneFormula& ctilde, VarId x,
                      const OccurrenceOrdering& ord, int i, int j) {
  const int d = ord.d();
  if (i < 1 || i > d) fail(ErrorKind::IndexOutOfRange, "clause index i");
  if (j < 1 || j > ord.w[static_cast<size_t>(i - 1)])
    fail(ErrorKind::IndexOutOfRange, "variable index j");

  const Clause& ci = ctilde.clause(ord.clause_idx[static_cast<size_t>(i - 1)]);
  std::vector<VarId> others;  // x_{i,1}..x_{i,w_i}, ascending id
  for (VarId v : ci.vars())
    if (v != x) others.push_back(v);
  const VarId query = others[static_cast<size_t>(j - 1)];

  // position of each occurrence clause in the ordering, -1 otherwise
  std::vector<int> pos(static_cast<size_t>(ctilde.num_clauses()), -1);
  for (int p = 0; p < d; ++p)
    pos[static_cast<size_t>(ord.clause_idx[static_cast<size_t>(p)])] = p;

  std::vector<Clause> out;
  out.reserve(static_cast<size_t>(ctilde.num_clauses()));
  for (int idx = 0; idx < ctilde.num_clauses(); ++idx) {
    const int p = pos[static_cast<size_t>(idx)];
    if (p >= 0 && p < i) continue;  // c_1..c_i dropped
    std::vector<VarId> vars;
    const Clause& c = ctilde.clause(idx);
    vars.reserve(c.vars().size());
    for (VarId v : c.vars()) {
      if (v == x && p >= i) continue;  // x pinned to 0 in c_{i+1}..c_d
      bool pinned = false;
      for (int t = 0; t < j - 1; ++t)
        if (others[static_cast<size_t>(t)] == v) { pinned = true; break; }
      if (!pinned) vars.push_back(v);
    }
    if (vars.empty())
      throw std::logic_error("build_child produced an empty clause");
    out.push_back(Clause(std::move(vars)));
  }
  MonotoneFormula child(ctilde.num_vars(), std::move(out), /*dedup=*/false);
  if (child.is_forced(query))
    throw std::logic_error("build_child produced a forced query variable");
  return QueryNode{std::move(child), query};
}

namespace {

constexpr long kNeverTruncates = LONG_MIN / 4;

struct ExactEntry {
  double value = 1.0;
  long threshold = 1;  // value is R(C,x,L) for every L >= threshold
};

template <typename V>
class ShardedMap {
 public:
  std::optional<V> get(const std::string& key) const {
    auto& s = shard(key);
    std::lock_guard<std::mutex> lock(s.mu);
    auto it = s.map.find(key);
    if (it == s.map.end()) return std::nullopt;
    return it->second;
  }
  void put(const std::string& key, V value) {
    auto& s = shard(key);
    std::lock_guard<std::mutex> lock(s.mu);
    s.map.insert_or_assign(key, std::move(value));
  }

 private:
  struct Shard {
    mutable std::mutex mu;
    std::unordered_map<std::string, V> map;
  };
  Shard& shard(const std::string& key) const {
    return shards_[fnv1a(key) & 15];
  }
  mutable std::array<Shard, 16> shards_;
};

// The message of (C, x) depends only on the connected component of x in
// the clause-variable incidence graph: every other clause multiplies both
// Pr(x=0) and Pr(x=1) alike, and no cross-component subset relations exist.
// Restricting before memoization makes recurring sub-instances identical.
MonotoneFormula restrict_to_component(const MonotoneFormula& f, VarId x) {
  const int m = f.num_clauses();
  std::vector<bool> var_seen(static_cast<size_t>(f.num_vars()) + 1, false);
  std::vector<bool> clause_in(static_cast<size_t>(m), false);
  var_seen[static_cast<size_t>(x)] = true;
  bool grew = true;
  int kept = 0;
  while (grew) {
    grew = false;
    for (int i = 0; i < m; ++i) {
      if (clause_in[static_cast<size_t>(i)]) continue;
      const Clause& c = f.clause(i);
      bool touches = false;
      for (VarId v : c.vars())
        if (var_seen[static_cast<size_t>(v)]) { touches = true; break; }
      if (!touches) continue;
      clause_in[static_cast<size_t>(i)] = true;
      ++kept;
      grew = true;
      for (VarId v : c.vars()) var_seen[static_cast<size_t>(v)] = true;
    }
  }
  if (kept == m) return f;
  std::vector<Clause> out;
  out.reserve(static_cast<size_t>(kept));
  for (int i = 0; i < m; ++i)
    if (clause_in[static_cast<size_t>(i)]) out.push_back(f.clause(i));
  return MonotoneFormula(f.num_vars(), std::move(out), /*dedup=*/false);
}

std::string node_key(const MonotoneFormula& f, VarId x) {
  std::string key = f.serialize_key();
  key.push_back(static_cast<char>(x & 0xff));
  key.push_back(static_cast<char>((x >> 8) & 0xff));
  key.push_back(static_cast<char>((x >> 16) & 0xff));
  return key;
}

std::string with_budget(std::string key, long budget) {
  for (int b = 0; b < 8; ++b)
    key.push_back(static_cast<char>((static_cast<unsigned long>(budget) >> (8 * b)) & 0xff));
  return key;
}

}  // namespace

struct TreeEvaluator::Impl {
  EvalOptions opts;
  ShardedMap<ExactEntry> exact_memo;            // fully-resolved values
  ShardedMap<double> trunc_memo;                // (node, budget) -> value
  ShardedMap<std::string> rational_memo;        // node -> canonical mpq string

  void charge(EvalStats& stats) {
    const std::uint64_t n = stats.nodes.fetch_add(1) + 1;
    if (opts.node_budget != 0 && n > opts.node_budget)
      fail(ErrorKind::BudgetExceeded, "node budget exhausted");
  }

  void trace_line(int depth, const OccurrenceOrdering* ord, long budget,
                  double value) {
    if (!opts.trace) return;
    std::ostream& os = *opts.trace;
    os << "depth=" << depth << " d=" << (ord ? ord->d() : 0) << " w=[";
    if (ord)
      for (int i = 0; i < ord->d(); ++i)
        os << (i ? "," : "") << ord->w[static_cast<size_t>(i)];
    os << "] L=" << budget << " value=" << value << '\n';
  }

  // Returns the message value; *threshold reports the smallest budget at
  // which the value is untruncated (kNeverTruncates for leaves), or
  // LONG_MAX when some subtree was cut off.
  double eval(EvalStats& stats, const MonotoneFormula& c, VarId x, long budget,
              int depth, long* threshold) {
    charge(stats);
    auto [ctilde0, forced] = preprocess(c);
    if (std::binary_search(forced.begin(), forced.end(), x))
      fail(ErrorKind::ForcedQuery, "query variable is forced");
    if (ctilde0.is_free(x)) {
      *threshold = kNeverTruncates;
      trace_line(depth, nullptr, budget, 1.0);
      return 1.0;
    }
    if (budget <= 0) {
      *threshold = LONG_MAX;
      trace_line(depth, nullptr, budget, 1.0);
      return 1.0;
    }
    const MonotoneFormula ctilde = restrict_to_component(ctilde0, x);

    std::string key;
    if (opts.use_memo) {
      key = node_key(ctilde, x);
      if (auto hit = exact_memo.get(key); hit && budget >= hit->threshold) {
        stats.memo_hits.fetch_add(1);
        *threshold = hit->threshold;
        return hit->value;
      }
      if (auto hit = trunc_memo.get(with_budget(key, budget))) {
        stats.memo_hits.fetch_add(1);
        *threshold = LONG_MAX;
        return *hit;
      }
    }

    const OccurrenceOrdering ord = order_occurrences(ctilde, x);
    double value = 1.0;
    long node_threshold = 1;
    bool exact = true;
    for (int i = 1; i <= ord.d(); ++i) {
      const int wi = ord.w[static_cast<size_t>(i - 1)];
      const int cost = depth_cost(wi);
      double prod = 1.0;
      for (int jj = 1; jj <= wi; ++jj) {
        QueryNode child = build_child(ctilde, x, ord, i, jj);
        long child_threshold = 0;
        const double r = eval(stats, child.formula, child.x, budget - cost,
                              depth + 1, &child_threshold);
        prod *= r / (1.0 + r);
        if (child_threshold == LONG_MAX) {
          exact = false;
        } else if (child_threshold != kNeverTruncates) {
          node_threshold = std::max(node_threshold, child_threshold + cost);
        }
      }
      value *= 1.0 - prod;
    }

    // Remark-level sanity: (1/2)^d <= R <= 1 must hold at every node.
    const double lower = std::ldexp(1.0, -ord.d());
    if (!(value >= lower && value <= 1.0)) stats.bound_violations.fetch_add(1);

    if (opts.use_memo) {
      if (exact)
        exact_memo.put(key, ExactEntry{value, node_threshold});
      else
        trunc_memo.put(with_budget(key, budget), value);
    }
    *threshold = exact ? node_threshold : LONG_MAX;
    trace_line(depth, &ord, budget, value);
    return value;
  }

  mpq_class eval_exact(EvalStats& stats, const MonotoneFormula& c, VarId x) {
    charge(stats);
    auto [ctilde0, forced] = preprocess(c);
    if (std::binary_search(forced.begin(), forced.end(), x))
      fail(ErrorKind::ForcedQuery, "query variable is forced");
    if (ctilde0.is_free(x)) return mpq_class(1);
    const MonotoneFormula ctilde = restrict_to_component(ctilde0, x);

    std::string key;
    if (opts.use_memo) {
      key = node_key(ctilde, x);
      if (auto hit = rational_memo.get(key)) {
        stats.memo_hits.fetch_add(1);
        return mpq_class(*hit);
      }
    }

    const OccurrenceOrdering ord = order_occurrences(ctilde, x);
    mpq_class value(1);
    for (int i = 1; i <= ord.d(); ++i) {
      const int wi = ord.w[static_cast<size_t>(i - 1)];
      mpq_class prod(1);
      for (int jj = 1; jj <= wi; ++jj) {
        QueryNode child = build_child(ctilde, x, ord, i, jj);
        const mpq_class r = eval_exact(stats, child.formula, child.x);
        prod *= r / (1 + r);
      }
      value *= 1 - prod;
    }
    value.canonicalize();
    if (opts.use_memo) rational_memo.put(key, value.get_str());
    return value;
  }
};

TreeEvaluator::TreeEvaluator(EvalOptions opts)
    : impl_(std::make_unique<Impl>()) {
  impl_->opts = opts;
}

TreeEvaluator::~TreeEvaluator() = default;

double TreeEvaluator::ratio_truncated(const QueryNode& node, long budget,
                                      bool* exact_out) {
  long threshold = 0;
  const double v =
      impl_->eval(stats_, node.formula, node.x, budget, 0, &threshold);
  if (exact_out) *exact_out = threshold != LONG_MAX;
  return v;
}

mpq_class TreeEvaluator::ratio_exact(const QueryNode& node) {
  return impl_->eval_exact(stats_, node.formula, node.x);
}

double ratio_truncated(const QueryNode& node, long budget) {
  TreeEvaluator ev;
  return ev.ratio_truncated(node, budget);
}

mpq_class ratio_exact(const QueryNode& node, std::uint64_t node_budget) {
  EvalOptions opts;
  opts.node_budget = node_budget;
  TreeEvaluator ev(opts);
  return ev.ratio_exact(node);
}

}  // namespace hyperis
