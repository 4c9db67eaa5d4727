#include "hyperis/counting.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <vector>

#include "hyperis/comp_tree.hpp"
#include "hyperis/utils.hpp"

namespace hyperis {

namespace {

// One telescoping pass at a fixed depth budget. Pins x_1..x_n to 1 in
// ascending id order; pinning deletes satisfied clauses, so intermediate
// formulas keep the root's minimum arity.
long double telescope_log2(const MonotoneFormula& c, long depth,
                           TreeEvaluator& ev, bool* all_exact) {
  const int root_min_arity = c.min_arity();
  long double log2z = 0;
  bool exact_all = true;
  MonotoneFormula cur = c;
  for (VarId x = 1; x <= c.num_vars(); ++x) {
    if (cur.min_arity() < root_min_arity)
      throw std::logic_error("pinning to 1 reduced the minimum arity");
    double r;
    if (cur.is_forced(x)) {
      r = 0.0;  // Pr(x=0) = 0
    } else {
      bool exact = false;
      r = ev.ratio_truncated(QueryNode{cur, x}, depth, &exact);
      exact_all = exact_all && exact;
    }
    log2z += std::log2(1.0L + static_cast<long double>(r));
    cur = cur.pin_true(x);
  }
  if (all_exact) *all_exact = exact_all;
  return log2z;
}

}  // namespace

Estimate approx_count(const MonotoneFormula& c, double eps,
                      const CountOptions& opts) {
  if (!(eps > 0)) fail(ErrorKind::InvalidEps, "eps must be positive");
  const auto t0 = std::chrono::steady_clock::now();

  EvalOptions eopts;
  eopts.node_budget = opts.node_budget;
  eopts.trace = opts.trace;
  TreeEvaluator ev(eopts);

  Estimate est;
  est.eps = eps;
  est.regime = classify_regime(c);

  long double log2z = 0;
  bool exact = false;
  long depth = 0;
  if (opts.policy == DepthPolicy::FixedDepth) {
    depth = opts.fixed_depth;
    log2z = telescope_log2(c, depth, ev, &exact);
  } else {
    // Iterative deepening: stop when two successive estimates agree to
    // eps/4 relative, every factor resolved exactly, or the budget is hit.
    bool have_prev = false;
    long double prev = 0;
    for (depth = 8;; depth *= 2) {
      long double cur;
      try {
        cur = telescope_log2(c, depth, ev, &exact);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::BudgetExceeded && have_prev) {
          log2z = prev;
          depth /= 2;
          exact = false;
          break;
        }
        throw;
      }
      log2z = cur;
      if (exact) break;
      if (have_prev) {
        const long double rel = std::fabs(std::exp2l(cur - prev) - 1.0L);
        if (rel < static_cast<long double>(eps) / 4) break;
      }
      prev = cur;
      have_prev = true;
      if (opts.node_budget != 0 && ev.stats().nodes.load() >= opts.node_budget)
        break;
    }
  }

  est.log2_value = log2z;
  est.value = std::exp2(log2z);
  est.depth_used = depth;
  est.guaranteed = exact;
  est.nodes_visited = ev.stats().nodes.load();
  if (ev.stats().bound_violations.load() != 0)
    throw std::logic_error("message bound violated");
  est.wall_time_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  return est;
}

mpz_class exact_count(const MonotoneFormula& c, const CountOptions& opts) {
  const int n = c.num_vars();
  if (n > opts.exact_limit || n > 63)
    fail(ErrorKind::TooLarge, "exact_count limited to " +
                                  std::to_string(std::min(opts.exact_limit, 63)) +
                                  " variables");
  // clause masks; duplicates are harmless here
  std::vector<std::uint64_t> masks;
  masks.reserve(static_cast<size_t>(c.num_clauses()));
  for (const Clause& cl : c.clauses()) {
    std::uint64_t m = 0;
    for (VarId v : cl.vars()) m |= 1ULL << (v - 1);
    masks.push_back(m);
  }
  const std::uint64_t total = 1ULL << n;
  std::mutex mu;
  mpz_class count = 0;
  parallel_for(0, total, [&](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t local = 0;
    for (std::uint64_t a = lo; a < hi; ++a) {
      bool sat = true;
      for (std::uint64_t m : masks)
        if ((a & m) == 0) { sat = false; break; }
      local += sat;
    }
    std::lock_guard<std::mutex> lock(mu);
    count += mpz_class(static_cast<unsigned long>(local));
  }, /*min_chunk=*/1 << 16);
  return count;
}

mpz_class exact_count_telescoping(const MonotoneFormula& c,
                                  std::uint64_t node_budget) {
  EvalOptions eopts;
  eopts.node_budget = node_budget;
  TreeEvaluator ev(eopts);
  mpq_class z(1);
  MonotoneFormula cur = c;
  for (VarId x = 1; x <= c.num_vars(); ++x) {
    mpq_class r;
    if (cur.is_forced(x)) {
      r = 0;
    } else {
      r = ev.ratio_exact(QueryNode{cur, x});
    }
    z *= 1 + r;
    cur = cur.pin_true(x);
  }
  z.canonicalize();
  if (z.get_den() != 1)
    throw std::logic_error("telescoping product is not an integer");
  return z.get_num();
}

namespace {

mpq_class mpq_pow(const mpq_class& base, unsigned e) {
  mpq_class out(1), b = base;
  while (e) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

}  // namespace

mpq_class hardcore_partition(const Graph& g, const mpq_class& lambda,
                             int limit) {
  if (lambda < 0) fail(ErrorKind::NegativeLambda, "lambda must be >= 0");
  const int n = g.num_vertices();
  if (n > limit || n > 63) fail(ErrorKind::TooLarge, "too many vertices");
  const auto adj = g.adjacency_masks();
  // lambda^k for k = 0..n
  std::vector<mpq_class> pw(static_cast<size_t>(n) + 1);
  pw[0] = 1;
  for (int k = 1; k <= n; ++k) pw[static_cast<size_t>(k)] = pw[static_cast<size_t>(k - 1)] * lambda;
  std::vector<unsigned long> by_size(static_cast<size_t>(n) + 1, 0);
  const std::uint64_t total = 1ULL << n;
  for (std::uint64_t s = 0; s < total; ++s) {
    bool indep = true;
    for (int v = 1; v <= n && indep; ++v)
      if ((s >> (v - 1)) & 1)
        if (adj[static_cast<size_t>(v)] & s) indep = false;
    if (indep) ++by_size[static_cast<size_t>(__builtin_popcountll(s))];
  }
  mpq_class z = 0;
  for (int k = 0; k <= n; ++k)
    z += mpq_class(by_size[static_cast<size_t>(k)]) * pw[static_cast<size_t>(k)];
  return z;
}

mpq_class twospin_partition(const Graph& g, const mpq_class& beta,
                            const mpq_class& gamma, const mpq_class& lambda,
                            int limit) {
  const int n = g.num_vertices();
  if (n > limit || n > 63) fail(ErrorKind::TooLarge, "too many vertices");
  // Bucket configurations by (zeros, edges00, edges11); the exact weight is
  // applied per bucket. 0^0 == 1 by convention, so a zero base with a zero
  // exponent contributes factor 1.
  const auto& edges = g.edges();
  const int m = g.num_edges();
  std::vector<std::vector<std::vector<unsigned long>>> buckets(
      static_cast<size_t>(n) + 1,
      std::vector<std::vector<unsigned long>>(
          static_cast<size_t>(m) + 1,
          std::vector<unsigned long>(static_cast<size_t>(m) + 1, 0)));
  const std::uint64_t total = 1ULL << n;
  for (std::uint64_t sigma = 0; sigma < total; ++sigma) {
    // bit set = spin 1
    int e00 = 0, e11 = 0;
    for (const auto& [u, v] : edges) {
      const bool su = (sigma >> (u - 1)) & 1;
      const bool sv = (sigma >> (v - 1)) & 1;
      if (!su && !sv) ++e00;
      if (su && sv) ++e11;
    }
    const int zeros = n - __builtin_popcountll(sigma);
    ++buckets[static_cast<size_t>(zeros)][static_cast<size_t>(e00)][static_cast<size_t>(e11)];
  }
  mpq_class z = 0;
  for (int zc = 0; zc <= n; ++zc)
    for (int a = 0; a <= m; ++a)
      for (int b = 0; b <= m; ++b) {
        const unsigned long cnt =
            buckets[static_cast<size_t>(zc)][static_cast<size_t>(a)][static_cast<size_t>(b)];
        if (cnt == 0) continue;
        if (beta == 0 && a > 0) continue;   // factor 0
        if (gamma == 0 && b > 0) continue;  // factor 0
        mpq_class w = mpq_pow(lambda, static_cast<unsigned>(zc));
        if (a > 0) w *= mpq_pow(beta, static_cast<unsigned>(a));
        if (b > 0) w *= mpq_pow(gamma, static_cast<unsigned>(b));
        z += mpq_class(cnt) * w;
      }
  return z;
}

mpz_class domsets_bruteforce(const Graph& g, int limit) {
  const int n = g.num_vertices();
  if (n > limit || n > 63) fail(ErrorKind::TooLarge, "too many vertices");
  const auto adj = g.adjacency_masks();
  std::vector<std::uint64_t> closed(static_cast<size_t>(n) + 1);
  for (int v = 1; v <= n; ++v)
    closed[static_cast<size_t>(v)] = adj[static_cast<size_t>(v)] | (1ULL << (v - 1));
  const std::uint64_t total = 1ULL << n;
  std::mutex mu;
  mpz_class count = 0;
  parallel_for(0, total, [&](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t local = 0;
    for (std::uint64_t s = lo; s < hi; ++s) {
      bool dom = true;
      for (int v = 1; v <= n; ++v)
        if ((closed[static_cast<size_t>(v)] & s) == 0) { dom = false; break; }
      local += dom;
    }
    std::lock_guard<std::mutex> lock(mu);
    count += mpz_class(static_cast<unsigned long>(local));
  }, /*min_chunk=*/1 << 16);
  return count;
}

}  // namespace hyperis
