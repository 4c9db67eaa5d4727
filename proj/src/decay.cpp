#include "hyperis/decay.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "hyperis/comp_tree.hpp"
#include "hyperis/utils.hpp"

namespace hyperis {

double potential(double z, const PotentialParams& p) {
  if (!(z > 0.0) || z > 1.0)
    fail(ErrorKind::DomainError, "potential needs 0 < z <= 1");
  const double zc = std::pow(z, p.chi);
  return std::log(zc / (p.psi - zc)) / (p.chi * p.psi);
}

double potential_derivative(double z, const PotentialParams& p) {
  if (!(z > 0.0) || z > 1.0)
    fail(ErrorKind::DomainError, "potential needs 0 < z <= 1");
  return 1.0 / (z * (p.psi - std::pow(z, p.chi)));
}

RegimeConstants RegimeConstants::k3_delta6() {
  RegimeConstants rc;
  rc.delta = tables::kDelta36;
  rc.eta = std::ldexp(1.0, -5);
  return rc;
}

RegimeConstants RegimeConstants::large_delta(int delta_max_degree) {
  RegimeConstants rc;
  rc.delta = std::pow(rc.c, 1.0 / delta_max_degree);
  rc.eta = std::ldexp(1.0, -(delta_max_degree - 1));
  return rc;
}

namespace tables {

double c5() { return std::pow(kC, 1.0 - 6.0 / 200.0); }

double K_delta(int w) {
  switch (w) {
    case 1: return 1.0;
    case 2: return 1.069;
    case 3: return 1.160;
    case 4: return 1.225;
    default:
      return std::pow(1.0 / kDelta36, (w - 1) * 5.0);
  }
}

double C_delta(int b3) {
  static const double t[6] = {0.0, 1.0, 1.02, 1.03, 1.04, 1.05};
  if (b3 < 0 || b3 > 5) fail(ErrorKind::IndexOutOfRange, "C_delta");
  return t[b3];
}

double tau_b2b3(int b2, int b3) {
  if (b2 < 0 || b3 < 0 || b2 + b3 > 5) fail(ErrorKind::IndexOutOfRange, "tau");
  if (b2 + b3 == 5) return kAlpha;
  static const double t[5][5] = {
      // b3 = 0,        1,        2,        3,        4
      {0.0,      42e-2,    54e-2,    72e-2,    864e-3},  // b2 = 0
      {42e-2,    59e-2,    74e-2,    868e-3,   0},       // b2 = 1
      {63e-2,    76e-2,    876e-3,   0,        0},       // b2 = 2
      {79e-2,    886e-3,   0,        0,        0},       // b2 = 3
      {901e-3,   0,        0,        0,        0},       // b2 = 4
  };
  return t[b2][b3];
}

double eps_B(int B) {
  static const double t[6] = {0.0, 0.6, 0.7, 0.83, 0.91, kAlpha};
  if (B < 0 || B > 5) fail(ErrorKind::IndexOutOfRange, "eps_B");
  return t[B];
}

}  // namespace tables

SuitableVector::SuitableVector(std::vector<int> w) : w_(std::move(w)) {
  if (w_.empty()) fail(ErrorKind::NotSuitable, "empty vector");
  int t = 0;
  while (t < static_cast<int>(w_.size()) && w_[static_cast<size_t>(t)] != 1) ++t;
  t_ = t;
  int prev = 2;  // w_0 = 2
  for (int i = 0; i < t_; ++i) {
    const int wi = w_[static_cast<size_t>(i)];
    if (wi < prev) fail(ErrorKind::NotSuitable, "prefix not nondecreasing");
    prev = wi;
  }
  for (int i = t_; i < static_cast<int>(w_.size()); ++i)
    if (w_[static_cast<size_t>(i)] != 1)
      fail(ErrorKind::NotSuitable, "tail must be all ones");
}

int SuitableVector::sum() const {
  int s = 0;
  for (int wi : w_) s += wi;
  return s;
}

int SuitableVector::b(int ell) const {
  int cnt = 0;
  for (int wi : w_)
    if (wi == ell - 1) ++cnt;
  return cnt;
}

int SuitableVector::bprime(int k) const {
  int cnt = 0;
  for (int wi : w_)
    if (wi >= 2 && wi <= k - 1) ++cnt;
  return cnt;
}

int SuitableVector::s(int i, int k) const {
  if (i < 0 || i > d()) fail(ErrorKind::IndexOutOfRange, "prefix deficit index");
  int acc = 0;
  for (int t = 0; t < i; ++t)
    acc += std::max(0, k - w_[static_cast<size_t>(t)] - 1);
  return acc;
}

DeficitLedger deficit(const MonotoneFormula& c, int k) {
  if (k < 2) fail(ErrorKind::DomainError, "deficit needs k >= 2");
  DeficitLedger ledger;
  ledger.per_clause.reserve(static_cast<size_t>(c.num_clauses()));
  for (const Clause& cl : c.clauses()) {
    const int d = std::max(0, k - cl.arity());
    ledger.per_clause.push_back(d);
    ledger.total += d;
  }
  return ledger;
}

namespace {

struct KappaWork {
  // Everything that does not depend on r, precomputed per vector.
  std::vector<int> w;
  std::vector<int> offset;          // start of clause i in r
  std::vector<double> delta_pow;    // delta^exponent per flat (i,j)
  std::vector<double> alpha_pow;    // alpha^{-l_{w_i}} per clause
  int dim = 0;
};

KappaWork prepare_kappa(int d, const SuitableVector& w, int k, int delta_deg,
                        const RegimeConstants& rc) {
  KappaWork work;
  work.w = w.entries();
  work.offset.resize(static_cast<size_t>(d));
  const int b2 = w.b2();
  const int bpk = w.bprime(k);
  int off = 0;
  for (int i = 1; i <= d; ++i) {
    work.offset[static_cast<size_t>(i - 1)] = off;
    const int wi = w.entry(i);
    work.alpha_pow.push_back(std::pow(rc.alpha, -depth_cost(wi)));
    const int s_cap = w.s(std::min(i, d - b2), k);
    for (int j = 1; j <= wi; ++j) {
      long e = static_cast<long>(b2) * (k - 2) + s_cap - std::max(0, bpk - i);
      if (i <= d - b2) e -= static_cast<long>(j - 1) * (delta_deg - 1);
      work.delta_pow.push_back(std::pow(rc.delta, static_cast<double>(e)));
    }
    off += wi;
  }
  work.dim = off;
  return work;
}

double kappa_eval(const KappaWork& work, const std::vector<double>& r,
                  const PotentialParams& p) {
  const int d = static_cast<int>(work.w.size());
  // F and the per-clause t-products
  double f = 1.0;
  std::vector<double> prod(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    double pr = 1.0;
    const int base = work.offset[static_cast<size_t>(i)];
    for (int j = 0; j < work.w[static_cast<size_t>(i)]; ++j) {
      const double rij = r[static_cast<size_t>(base + j)];
      pr *= rij / (1.0 + rij);
    }
    prod[static_cast<size_t>(i)] = pr;
    f *= 1.0 - pr;
  }
  const double phi_f = potential_derivative(f, p);
  double sum = 0.0;
  int flat = 0;
  for (int i = 0; i < d; ++i) {
    const double ratio = prod[static_cast<size_t>(i)] / (1.0 - prod[static_cast<size_t>(i)]);
    const int base = work.offset[static_cast<size_t>(i)];
    for (int j = 0; j < work.w[static_cast<size_t>(i)]; ++j, ++flat) {
      const double rij = r[static_cast<size_t>(base + j)];
      const double dfd = f * ratio / (rij * (1.0 + rij));  // |dF/dr_{i,j}|
      sum += work.alpha_pow[static_cast<size_t>(i)] *
             work.delta_pow[static_cast<size_t>(flat)] *
             (phi_f / potential_derivative(rij, p)) * dfd;
    }
  }
  return sum;
}

}  // namespace

double kappa_star(int d, const SuitableVector& w, const std::vector<double>& r,
                  int k, int delta_max_degree, const RegimeConstants& rc,
                  const PotentialParams& p) {
  if (d != w.d()) fail(ErrorKind::NotSuitable, "vector length mismatch");
  if (d < 1 || d > delta_max_degree)
    fail(ErrorKind::IndexOutOfRange, "need 1 <= d <= Delta");
  if (static_cast<int>(r.size()) != w.sum())
    fail(ErrorKind::DomainError, "r must have sum(w) entries");
  for (double v : r)
    if (!(v > 0.0) || v > 1.0) fail(ErrorKind::DomainError, "r entries in (0,1]");
  const KappaWork work = prepare_kappa(d, w, k, delta_max_degree, rc);
  return kappa_eval(work, r, p);
}

double kappa_crude_k3d6(int d, const SuitableVector& w,
                        const std::vector<double>& r, const RegimeConstants& rc,
                        const PotentialParams& p) {
  const int delta_deg = 6;
  if (d != w.d()) fail(ErrorKind::NotSuitable, "vector length mismatch");
  if (static_cast<int>(r.size()) != w.sum())
    fail(ErrorKind::DomainError, "r must have sum(w) entries");
  const int b2 = w.b2();
  const int b3 = w.b(3);
  double f = 1.0;
  std::vector<double> prod(static_cast<size_t>(d));
  int off = 0;
  std::vector<int> offs(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    offs[static_cast<size_t>(i)] = off;
    double pr = 1.0;
    for (int j = 0; j < w.entries()[static_cast<size_t>(i)]; ++j) {
      const double rij = r[static_cast<size_t>(off + j)];
      pr *= rij / (1.0 + rij);
    }
    prod[static_cast<size_t>(i)] = pr;
    f *= 1.0 - pr;
    off += w.entries()[static_cast<size_t>(i)];
  }
  double total = 0.0;
  for (int i = 1; i <= d; ++i) {
    const int wi = w.entry(i);
    const double ratio = prod[static_cast<size_t>(i - 1)] / (1.0 - prod[static_cast<size_t>(i - 1)]);
    double rho = 0.0;
    for (int j = 1; j <= wi; ++j) {
      const double rij = r[static_cast<size_t>(offs[static_cast<size_t>(i - 1)] + j - 1)];
      const double dfd = f * ratio / (rij * (1.0 + rij));
      rho += std::pow(1.0 / rc.delta, (j - 1.0) * (delta_deg - 1)) /
             potential_derivative(rij, p) * dfd;
    }
    rho *= std::pow(rc.alpha, -depth_cost(wi));
    const double scale = i <= b3 ? std::pow(1.0 / rc.delta, b3 - i) : 1.0;
    total += scale * rho;
  }
  return potential_derivative(f, p) * std::pow(rc.delta, b2) * total;
}

std::vector<std::vector<int>> enumerate_suitable_vectors(int d_min, int d_max,
                                                         int entry_cap) {
  std::vector<std::vector<int>> out;
  for (int d = d_min; d <= d_max; ++d) {
    for (int prefix = 0; prefix <= d; ++prefix) {
      // nondecreasing sequences of length `prefix` over [2, entry_cap]
      std::vector<int> cur(static_cast<size_t>(prefix), 2);
      while (true) {
        std::vector<int> w = cur;
        w.resize(static_cast<size_t>(d), 1);
        out.push_back(std::move(w));
        int pos = prefix - 1;
        while (pos >= 0 && cur[static_cast<size_t>(pos)] == entry_cap) --pos;
        if (pos < 0) break;
        const int v = ++cur[static_cast<size_t>(pos)];
        for (int q = pos + 1; q < prefix; ++q) cur[static_cast<size_t>(q)] = v;
      }
    }
  }
  return out;
}

namespace {

// Maximise kappa over [lo,1]^dim for a fixed vector: coarse pass (full grid
// when affordable, otherwise seeded random points plus the corners), then
// round-robin single-coordinate ascent from the best starts.
struct VectorMax {
  double value = -1;
  std::vector<double> r;
  std::uint64_t evals = 0;
};

VectorMax maximize_vector(const KappaWork& work, double lo, int grid,
                          int random_starts, int ascent_steps, int top_starts,
                          std::uint64_t seed, const PotentialParams& p) {
  const int dim = work.dim;
  std::vector<double> levels(static_cast<size_t>(grid));
  const double llo = std::log(lo);
  for (int g = 0; g < grid; ++g)
    levels[static_cast<size_t>(g)] =
        std::exp(llo * (1.0 - static_cast<double>(g) / (grid - 1)));
  levels.back() = 1.0;

  VectorMax best;
  auto consider = [&](const std::vector<double>& r) {
    const double v = kappa_eval(work, r, p);
    ++best.evals;
    if (v > best.value) {
      best.value = v;
      best.r = r;
    }
    return v;
  };

  std::vector<std::pair<double, std::vector<double>>> starts;
  auto remember = [&starts, top_starts](double v, const std::vector<double>& r) {
    starts.emplace_back(v, r);
    std::sort(starts.begin(), starts.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    if (static_cast<int>(starts.size()) > top_starts) starts.pop_back();
  };

  double full_grid_cost = 1;
  for (int i = 0; i < dim && full_grid_cost <= 50000; ++i) full_grid_cost *= grid;
  if (full_grid_cost <= 50000) {
    std::vector<int> idx(static_cast<size_t>(dim), 0);
    std::vector<double> r(static_cast<size_t>(dim));
    while (true) {
      for (int i = 0; i < dim; ++i) r[static_cast<size_t>(i)] = levels[static_cast<size_t>(idx[static_cast<size_t>(i)])];
      remember(consider(r), r);
      int pos = dim - 1;
      while (pos >= 0 && idx[static_cast<size_t>(pos)] == grid - 1) idx[static_cast<size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, grid - 1);
    std::vector<double> r(static_cast<size_t>(dim));
    // corners and the uniform mid level first
    for (double level : {lo, 1.0, levels[static_cast<size_t>(grid / 2)]}) {
      std::fill(r.begin(), r.end(), level);
      remember(consider(r), r);
    }
    for (int s = 0; s < random_starts; ++s) {
      for (int i = 0; i < dim; ++i) r[static_cast<size_t>(i)] = levels[static_cast<size_t>(pick(rng))];
      remember(consider(r), r);
    }
  }

  for (auto& [v0, start] : starts) {
    std::vector<double> r = start;
    double cur = kappa_eval(work, r, p);
    ++best.evals;
    for (int step = 0; step < ascent_steps; ++step) {
      const int coord = step % dim;
      const double keep = r[static_cast<size_t>(coord)];
      double bestv = cur, bestx = keep;
      for (double level : levels) {
        r[static_cast<size_t>(coord)] = level;
        const double v = kappa_eval(work, r, p);
        ++best.evals;
        if (v > bestv) {
          bestv = v;
          bestx = level;
        }
      }
      r[static_cast<size_t>(coord)] = bestx;
      cur = bestv;
    }
    if (cur > best.value) {
      best.value = cur;
      best.r = r;
    }
  }
  return best;
}

}  // namespace

KappaSearchReport kappa_star_max_search(int k, int delta_max_degree,
                                        const KappaSearchOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  RegimeConstants rc = (k == 3 && delta_max_degree == 6)
                           ? RegimeConstants::k3_delta6()
                           : RegimeConstants::large_delta(delta_max_degree);
  double lo = rc.eta;
  if (opts.r_floor > 0) lo = opts.r_floor;
  if (!(k == 3 && delta_max_degree == 6))
    lo = std::max(lo, 1e-6);  // large-Delta analysis allows r -> 0

  std::vector<std::vector<int>> vectors =
      enumerate_suitable_vectors(opts.d_min, std::min(opts.d_max, delta_max_degree),
                                 opts.w_entry_cap);
  {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> d_pick(opts.d_min,
                                              std::min(opts.d_max, delta_max_degree));
    for (int s = 0; s < opts.random_vectors; ++s) {
      const int d = d_pick(rng);
      std::uniform_int_distribution<int> prefix_pick(0, d);
      const int prefix = prefix_pick(rng);
      std::uniform_int_distribution<int> entry_pick(2, std::max(3, opts.w_entry_cap * 6));
      std::vector<int> w(static_cast<size_t>(prefix));
      for (int i = 0; i < prefix; ++i) w[static_cast<size_t>(i)] = entry_pick(rng);
      std::sort(w.begin(), w.end());
      w.resize(static_cast<size_t>(d), 1);
      vectors.push_back(std::move(w));
    }
  }

  const PotentialParams p;
  std::vector<VectorMax> results(vectors.size());
  parallel_for(0, vectors.size(), [&](std::uint64_t a, std::uint64_t b) {
    for (std::uint64_t idx = a; idx < b; ++idx) {
      const SuitableVector sv(vectors[idx]);
      const KappaWork work =
          prepare_kappa(sv.d(), sv, k, delta_max_degree, rc);
      results[idx] = maximize_vector(work, lo, opts.grid, opts.random_starts,
                                     opts.ascent_steps, opts.top_starts,
                                     mix_seed(opts.seed, idx), p);
    }
  }, /*min_chunk=*/1);

  KappaSearchReport report;
  report.vectors_checked = vectors.size();
  for (size_t i = 0; i < results.size(); ++i) {
    report.evaluations += results[i].evals;
    if (results[i].value > report.max_found) {
      report.max_found = results[i].value;
      report.argmax_w = vectors[i];
      report.argmax_r = results[i].r;
    }
  }
  report.wall_time_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
  return report;
}

}  // namespace hyperis
