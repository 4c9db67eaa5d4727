#include "hyperis/reductions.hpp"

#include <algorithm>

namespace hyperis {

MonotoneFormula domset_to_hyperis(const Graph& g) {
  const auto deg = g.regular_degree();
  if (!deg || *deg < 1) fail(ErrorKind::NotRegular, "graph is not regular");
  std::vector<Clause> edges;
  edges.reserve(static_cast<size_t>(g.num_vertices()));
  for (int v = 1; v <= g.num_vertices(); ++v) {
    std::vector<VarId> e = g.neighbors(v);
    e.push_back(v);
    edges.push_back(Clause(std::move(e)));
  }
  return MonotoneFormula(g.num_vertices(), std::move(edges), /*dedup=*/false);
}

HardcoreGadget hardcore_gadget(const Graph& g, int k) {
  if (k < 2) fail(ErrorKind::DomainError, "need k >= 2");
  if (k > 60) fail(ErrorKind::TooLarge, "block size overflow");
  const int kp = (k + 1) / 2;
  HardcoreGadget out;
  out.block_size = kp;
  out.lambda = mpq_class(1, (1L << kp) - 1);
  std::vector<Clause> edges;
  edges.reserve(static_cast<size_t>(g.num_edges()));
  for (const auto& [u, v] : g.edges()) {
    std::vector<VarId> e;
    e.reserve(static_cast<size_t>(2 * kp));
    for (int i = 0; i < kp; ++i) e.push_back((u - 1) * kp + i + 1);
    for (int i = 0; i < kp; ++i) e.push_back((v - 1) * kp + i + 1);
    edges.push_back(Clause(std::move(e)));
  }
  out.h = MonotoneFormula(g.num_vertices() * kp, std::move(edges),
                          /*dedup=*/false);
  return out;
}

Graph domset_hardness_gadget(const Graph& g) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(n + 2 * m));
  for (int i = 1; i <= n; ++i) edges.emplace_back(i, n + i);  // pendant u_i
  int t = 0;
  for (const auto& [u, v] : g.edges()) {
    const int w = 2 * n + ++t;  // subdivision vertex w_t
    edges.emplace_back(u, w);
    edges.emplace_back(w, v);
  }
  return Graph(2 * n + m, std::move(edges));
}

Estimate count_regdomset(const Graph& g, double eps, const CountOptions& opts) {
  const auto deg = g.regular_degree();
  if (!deg || *deg < 1) fail(ErrorKind::NotRegular, "graph is not regular");
  if (!(eps > 0)) fail(ErrorKind::InvalidEps, "eps must be positive");
  const MonotoneFormula h = domset_to_hyperis(g).deduplicated();
  Estimate est = approx_count(h, eps, opts);
  est.regime = classify_regime_params(*deg + 1, *deg + 1);
  return est;
}

mpq_class lambda_c(int delta) {
  if (delta < 3) fail(ErrorKind::DomainError, "need Delta >= 3");
  mpz_class num, den;
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(delta - 1),
                static_cast<unsigned long>(delta - 1));
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(delta - 2),
                static_cast<unsigned long>(delta));
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace hyperis
