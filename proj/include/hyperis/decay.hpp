#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperis/errors.hpp"
#include "hyperis/formula.hpp"

namespace hyperis {

struct PotentialParams {
  double chi = 0.5;   // 1/2
  double psi = 1.3;   // 13/10
};

// Phi(z) = (1/(chi*psi)) * log(z^chi / (psi - z^chi)) on (0,1].
double potential(double z, const PotentialParams& p = {});
// phi(z) = Phi'(z) = 1 / (z * (psi - z^chi)); positive on (0,1].
double potential_derivative(double z, const PotentialParams& p = {});

// Constants of the two analysed regimes. delta is the deficit discount:
// 9789/10000 for (k=3, Delta=6), c^(1/Delta) with c = 0.7 for the
// large-Delta regime.
struct RegimeConstants {
  double alpha = 1.0 - 1e-4;
  double delta = 0.9789;
  double c = 0.7;
  double eta = 0.03125;  // (1/2)^(Delta-1) lower message bound
  static RegimeConstants k3_delta6();
  static RegimeConstants large_delta(int delta_max_degree);
};

// Named constants used by the inequality registry and its tests.
namespace tables {
inline constexpr double kAlpha = 1.0 - 1e-4;
inline constexpr double kPsi = 1.3;
inline constexpr double kChi = 0.5;
inline constexpr double kC = 0.7;
inline constexpr double kK2 = 1.11614;
inline constexpr double kK3 = 1.03;
inline constexpr double kK4 = 1.01;
inline constexpr double kK5 = 1.0;
inline constexpr double kK6 = 1.0;
inline constexpr double kTau2 = 4.5932;
inline constexpr double kTau6 = 2.7805;
inline constexpr double kY0 = 13997.0 / 15000.0;   // ~0.933133
inline constexpr double kY1 = 64244.0 / 65000.0;   // ~0.988369
inline constexpr double kDelta36 = 0.9789;
inline constexpr double kM = 25.0 / 1000.0;
inline constexpr double kM1 = 1.0 / 410.0;
inline constexpr double kHolderP = 13.5;  // 27/2
double c5();                       // c^(1 - 6/200)
double K_delta(int w);             // K^(w)_delta, w >= 1
double C_delta(int b3);            // C^(b3)_delta upper bounds, 0..5
double tau_b2b3(int b2, int b3);   // b2 + b3 <= 5
double eps_B(int B);               // 0..5
}  // namespace tables

// Clause-arity vector w attached to an occurrence ordering: a nondecreasing
// prefix of entries >= 2 followed by trailing 1s.
class SuitableVector {
 public:
  explicit SuitableVector(std::vector<int> w);  // NotSuitable on bad shape

  int d() const { return static_cast<int>(w_.size()); }
  const std::vector<int>& entries() const { return w_; }
  int entry(int i) const { return w_[static_cast<size_t>(i - 1)]; }  // 1-based
  int sum() const;

  int split_index() const { return t_; }          // prefix length
  int b(int ell) const;                           // #entries equal to ell-1
  int b2() const { return b(2); }
  int bprime(int k) const;                        // b_3 + ... + b_k
  int s(int i, int k) const;                      // prefix deficit sums
 private:
  std::vector<int> w_;
  int t_ = 0;
};

struct DeficitLedger {
  std::vector<int> per_clause;
  long total = 0;  // D(C)
};

// D(C) = sum over clauses of max(0, k - arity); k is the root arity bound.
DeficitLedger deficit(const MonotoneFormula& c, int k);

// Step-wise decay rate kappa_*^{d,w}(r) for the amortised analysis.
// r is indexed clause-major: r[(i,j)] with j fastest, all entries in (0,1].
double kappa_star(int d, const SuitableVector& w, const std::vector<double>& r,
                  int k, int delta_max_degree, const RegimeConstants& rc,
                  const PotentialParams& p = {});

// Cruder per-clause bound used by the (k=3, Delta=6) analysis; dominates
// kappa_star pointwise there.
double kappa_crude_k3d6(int d, const SuitableVector& w,
                        const std::vector<double>& r, const RegimeConstants& rc,
                        const PotentialParams& p = {});

struct KappaSearchReport {
  double max_found = 0;
  std::vector<int> argmax_w;
  std::vector<double> argmax_r;
  std::uint64_t vectors_checked = 0;
  std::uint64_t evaluations = 0;
  double wall_time_ms = 0;
};

struct KappaSearchOptions {
  int d_max = 5;
  int d_min = 1;
  int w_entry_cap = 6;
  int grid = 33;               // log-spaced points per coordinate
  int random_vectors = 0;      // extra random suitable vectors, entries > cap
  int random_starts = 2000;    // random interior points when a full grid is too big
  int ascent_steps = 200;      // single-coordinate updates per start
  int top_starts = 8;
  std::uint64_t seed = 1;
  double r_floor = 0;          // overrides eta when > 0 (large-Delta regime)
};

// Maximises kappa_star over all suitable vectors with d in [d_min, d_max]
// and entries <= w_entry_cap (plus random larger vectors), r in [eta, 1]^|r|.
// Deterministic for a fixed seed.
KappaSearchReport kappa_star_max_search(int k, int delta_max_degree,
                                        const KappaSearchOptions& opts);

// Enumerates the suitable vectors visited by the search (exposed for tests).
std::vector<std::vector<int>> enumerate_suitable_vectors(int d_min, int d_max,
                                                         int entry_cap);

}  // namespace hyperis
