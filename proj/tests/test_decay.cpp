#include "doctest.h"

#include <cmath>
#include <random>

#include "hyperis/decay.hpp"

using namespace hyperis;

namespace {

// Independent transcription of the decay-rate sum, kept deliberately
// separate from the library path: plain loops, long double, no shared
// helpers.
long double kappa_oracle(const std::vector<int>& w, const std::vector<double>& r,
                         int k, int delta_deg, long double delta,
                         long double alpha) {
  const long double chi = 0.5L, psi = 1.3L;
  auto phi = [&](long double z) { return 1.0L / (z * (psi - std::pow(z, chi))); };
  auto lw = [](int wi) {
    int l = 1;
    long long p = 6;
    while (p < wi + 1) { p *= 6; ++l; }
    return l;
  };
  const int d = static_cast<int>(w.size());
  int b2 = 0, bpk = 0;
  for (int wi : w) {
    if (wi == 1) ++b2;
    if (wi >= 2 && wi <= k - 1) ++bpk;
  }
  auto s_of = [&](int i) {
    long s = 0;
    for (int t = 0; t < i; ++t) s += std::max(0, k - w[static_cast<size_t>(t)] - 1);
    return s;
  };
  long double f = 1.0L;
  std::vector<long double> prod(static_cast<size_t>(d), 1.0L);
  int flat = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < w[static_cast<size_t>(i)]; ++j, ++flat) {
      const long double rij = r[static_cast<size_t>(flat)];
      prod[static_cast<size_t>(i)] *= rij / (1 + rij);
    }
    f *= 1 - prod[static_cast<size_t>(i)];
  }
  long double total = 0;
  flat = 0;
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= w[static_cast<size_t>(i - 1)]; ++j, ++flat) {
      const long double rij = r[static_cast<size_t>(flat)];
      long double e = static_cast<long double>(b2) * (k - 2) +
                      s_of(std::min(i, d - b2)) - std::max(0, bpk - i);
      if (i <= d - b2) e -= static_cast<long double>(j - 1) * (delta_deg - 1);
      const long double dF = f * prod[static_cast<size_t>(i - 1)] /
                             (1 - prod[static_cast<size_t>(i - 1)]) /
                             (rij * (1 + rij));
      total += std::pow(alpha, static_cast<long double>(-lw(w[static_cast<size_t>(i - 1)]))) *
               std::pow(delta, e) * phi(f) / phi(rij) * dF;
    }
  }
  return total;
}

std::vector<double> random_r(int dim, double lo, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(std::log(lo), 0.0);
  std::vector<double> r(static_cast<size_t>(dim));
  for (double& v : r) v = std::exp(u(rng));
  return r;
}

}  // namespace

TEST_CASE("potential function values") {
  CHECK(potential_derivative(1.0) == doctest::Approx(10.0 / 3.0).epsilon(1e-12));
  CHECK(potential_derivative(0.25) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK_THROWS_AS(potential(0.0), Error);
  CHECK_THROWS_AS(potential(1.5), Error);
  CHECK_THROWS_AS(potential_derivative(-0.5), Error);
  // Phi strictly increasing on (0,1]
  double prev = potential(0.01);
  for (int i = 2; i <= 100; ++i) {
    const double cur = potential(i / 100.0);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("phi matches finite differences of Phi") {
  const double h = 1e-6;
  for (double z = 0.04; z <= 0.99; z += 0.05) {
    const double fd = (potential(z + h) - potential(z - h)) / (2 * h);
    CHECK(std::fabs(potential_derivative(z) - fd) <= 1e-6);
  }
}

TEST_CASE("deficit ledger") {
  auto F = [](int n, std::vector<std::vector<VarId>> cls) {
    std::vector<Clause> out;
    for (auto& c : cls) out.push_back(Clause(std::move(c)));
    return MonotoneFormula(n, std::move(out));
  };
  CHECK(deficit(F(2, {{1, 2}}), 3).total == 1);
  CHECK(deficit(F(5, {{1, 2, 3, 4, 5}}), 3).total == 0);
  const DeficitLedger lg = deficit(F(5, {{1, 2}, {3, 4}, {1, 4, 5}}), 3);
  CHECK(lg.total == 2);
  CHECK(lg.per_clause == std::vector<int>{1, 1, 0});
  CHECK_THROWS_AS(deficit(F(2, {{1, 2}}), 1), Error);
}

TEST_CASE("suitable vector validation and bookkeeping") {
  CHECK_THROWS_AS(SuitableVector({}), Error);
  CHECK_THROWS_AS(SuitableVector({1, 2}), Error);      // 1 before the tail
  CHECK_THROWS_AS(SuitableVector({3, 2}), Error);      // decreasing prefix
  CHECK_THROWS_AS(SuitableVector({2, 0}), Error);
  const SuitableVector sv({2, 2, 3, 1, 1});
  CHECK(sv.d() == 5);
  CHECK(sv.split_index() == 3);
  CHECK(sv.b2() == 2);
  CHECK(sv.b(3) == 2);
  CHECK(sv.b(4) == 1);
  CHECK(sv.bprime(3) == 2);
  CHECK(sv.bprime(4) == 3);
  CHECK(sv.s(3, 5) == 2 + 2 + 1);  // deficits 5-w-1
  CHECK(sv.sum() == 9);
}

TEST_CASE("kappa_star frozen values at k=3, Delta=6") {
  const RegimeConstants rc = RegimeConstants::k3_delta6();
  CHECK(std::fabs(kappa_star(1, SuitableVector({1}), {1.0}, 3, 6, rc) - 0.248) <=
        0.005);
  CHECK(std::fabs(kappa_star(2, SuitableVector({1, 1}), {1.0, 1.0}, 3, 6, rc) -
                  0.359) <= 0.005);
  CHECK(std::fabs(kappa_star(1, SuitableVector({2}), {1.0, 1.0}, 3, 6, rc) -
                  0.243) <= 0.005);
}

TEST_CASE("kappa_star agrees with the independent transcription") {
  const RegimeConstants rc = RegimeConstants::k3_delta6();
  std::mt19937_64 rng(99);
  const std::vector<std::vector<int>> vectors = {
      {1}, {2}, {2, 1}, {3, 1, 1}, {2, 2, 1, 1}, {4}, {2, 3, 1}, {1, 1, 1, 1, 1}};
  for (const auto& w : vectors) {
    const SuitableVector sv(w);
    for (int rep = 0; rep < 16; ++rep) {
      const std::vector<double> r = random_r(sv.sum(), rc.eta, rng);
      const double got = kappa_star(sv.d(), sv, r, 3, 6, rc);
      const long double want =
          kappa_oracle(w, r, 3, 6, 0.9789L, 1.0L - 1e-4L);
      CHECK(got == doctest::Approx(static_cast<double>(want)).epsilon(1e-10));
      CHECK(got >= 0.0);
    }
  }
  // large-Delta regime spot check
  const RegimeConstants rl = RegimeConstants::large_delta(200);
  const SuitableVector sv({2, 2, 1});
  for (int rep = 0; rep < 8; ++rep) {
    const std::vector<double> r = random_r(sv.sum(), 1e-6, rng);
    const double got = kappa_star(3, sv, r, 200, 200, rl);
    const long double want = kappa_oracle({2, 2, 1}, r, 200, 200,
                                          static_cast<long double>(rl.delta),
                                          1.0L - 1e-4L);
    CHECK(got == doctest::Approx(static_cast<double>(want)).epsilon(1e-9));
  }
}

TEST_CASE("kappa_star input validation") {
  const RegimeConstants rc = RegimeConstants::k3_delta6();
  CHECK_THROWS_AS(kappa_star(2, SuitableVector({1}), {1.0}, 3, 6, rc), Error);
  CHECK_THROWS_AS(kappa_star(1, SuitableVector({2}), {1.0}, 3, 6, rc), Error);
  CHECK_THROWS_AS(kappa_star(1, SuitableVector({1}), {0.0}, 3, 6, rc), Error);
  CHECK_THROWS_AS(kappa_star(1, SuitableVector({1}), {1.5}, 3, 6, rc), Error);
  CHECK_THROWS_AS(kappa_star(7, SuitableVector({1, 1, 1, 1, 1, 1, 1}),
                             std::vector<double>(7, 1.0), 3, 6, rc),
                  Error);
}

TEST_CASE("kappa_star is continuous in r") {
  const RegimeConstants rc = RegimeConstants::k3_delta6();
  const SuitableVector sv({2, 1, 1});
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<double> r = random_r(sv.sum(), rc.eta, rng);
    const double base = kappa_star(3, sv, r, 3, 6, rc);
    for (size_t i = 0; i < r.size(); ++i) {
      std::vector<double> rp = r;
      rp[i] = std::min(1.0, rp[i] + 1e-9);
      CHECK(std::fabs(kappa_star(3, sv, rp, 3, 6, rc) - base) < 1e-6);
    }
  }
}

TEST_CASE("derivative factor matches finite differences of F") {
  // |dF/dr| in closed form vs central differences of the raw product.
  auto F_of = [](const std::vector<int>& w, const std::vector<double>& r) {
    double f = 1;
    int flat = 0;
    for (int wi : w) {
      double p = 1;
      for (int j = 0; j < wi; ++j, ++flat) p *= r[static_cast<size_t>(flat)] / (1 + r[static_cast<size_t>(flat)]);
      f *= 1 - p;
    }
    return f;
  };
  const std::vector<int> w = {2, 3, 1};
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 10; ++rep) {
    std::uniform_real_distribution<double> u(0.1, 0.9);
    std::vector<double> r(6);
    for (double& v : r) v = u(rng);
    const double f = F_of(w, r);
    int flat = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      double p = 1;
      for (int j = 0; j < w[i]; ++j) p *= r[static_cast<size_t>(flat + j)] / (1 + r[static_cast<size_t>(flat + j)]);
      for (int j = 0; j < w[i]; ++j) {
        const size_t idx = static_cast<size_t>(flat + j);
        const double closed = f * p / (1 - p) / (r[idx] * (1 + r[idx]));
        const double h = 1e-6;
        std::vector<double> ra = r, rb = r;
        ra[idx] += h;
        rb[idx] -= h;
        const double fd = (F_of(w, ra) - F_of(w, rb)) / (2 * h);
        CHECK(std::fabs(std::fabs(fd) - closed) <= 1e-6);
        CHECK(fd < 0);  // F decreases in every r
      }
      flat += w[i];
    }
  }
}

TEST_CASE("kappa_star below the crude kappa at k=3, Delta=6") {
  const RegimeConstants rc = RegimeConstants::k3_delta6();
  std::mt19937_64 rng(11);
  for (const auto& w :
       {std::vector<int>{2, 2, 1}, {1, 1}, {2}, {3, 1}, {2, 2, 2, 1, 1}}) {
    const SuitableVector sv(w);
    for (int rep = 0; rep < 12; ++rep) {
      const std::vector<double> r = random_r(sv.sum(), rc.eta, rng);
      const double star = kappa_star(sv.d(), sv, r, 3, 6, rc);
      const double crude = kappa_crude_k3d6(sv.d(), sv, r, rc);
      CHECK(star <= crude * (1 + 1e-12));
    }
  }
}

TEST_CASE("suitable vector enumeration") {
  const auto vecs = enumerate_suitable_vectors(1, 3, 4);
  for (const auto& w : vecs) CHECK_NOTHROW(SuitableVector{w});
  // d=1: (1),(2),(3),(4); d=2: 1+3+6; d=3: 1+3+6+10
  CHECK(vecs.size() == 4 + 10 + 20);
  const auto all5 = enumerate_suitable_vectors(1, 5, 6);
  CHECK(all5.size() == 461);
}

TEST_CASE("large-degree regime stays below 1 on a small sample") {
  KappaSearchOptions opts;
  opts.d_max = 3;
  opts.w_entry_cap = 5;
  opts.grid = 17;
  opts.random_starts = 400;
  opts.ascent_steps = 60;
  opts.random_vectors = 10;
  opts.seed = 3;
  const KappaSearchReport rep = kappa_star_max_search(200, 200, opts);
  CHECK(rep.max_found <= 1.0);
  CHECK(rep.max_found > 0.0);
}

TEST_CASE("max search is deterministic and bounded on a small slice") {
  KappaSearchOptions opts;
  opts.d_max = 2;
  opts.w_entry_cap = 4;
  opts.random_vectors = 5;
  opts.seed = 12345;
  const KappaSearchReport a = kappa_star_max_search(3, 6, opts);
  const KappaSearchReport b = kappa_star_max_search(3, 6, opts);
  CHECK(a.max_found == b.max_found);
  CHECK(a.argmax_w == b.argmax_w);
  CHECK(a.argmax_r == b.argmax_r);
  CHECK(a.max_found <= 1.0 + 1e-9);
  CHECK(a.max_found > 0.3);
}

TEST_CASE("constants tables match the analysis") {
  CHECK(tables::kK2 == 1.11614);
  CHECK(tables::kK3 == 1.03);
  CHECK(tables::kK4 == 1.01);
  CHECK(tables::kK5 == 1.0);
  CHECK(tables::kTau2 == 4.5932);
  CHECK(tables::kTau6 == 2.7805);
  CHECK(tables::kY0 == doctest::Approx(0.933133).epsilon(1e-6));
  CHECK(tables::kY1 == doctest::Approx(0.988369).epsilon(1e-6));
  CHECK(tables::c5() == doctest::Approx(std::pow(0.7, 0.97)).epsilon(1e-15));
  CHECK(tables::K_delta(1) == 1.0);
  CHECK(tables::K_delta(2) == 1.069);
  CHECK(tables::K_delta(3) == 1.160);
  CHECK(tables::K_delta(4) == 1.225);
  CHECK(tables::K_delta(5) ==
        doctest::Approx(std::pow(1 / 0.9789, 20.0)).epsilon(1e-12));
  CHECK(tables::C_delta(0) == 0.0);
  CHECK(tables::C_delta(5) == 1.05);
  CHECK(tables::tau_b2b3(0, 0) == 0.0);
  CHECK(tables::tau_b2b3(1, 0) == 0.42);
  CHECK(tables::tau_b2b3(0, 1) == 0.42);
  CHECK(tables::tau_b2b3(2, 2) == 0.876);
  CHECK(tables::tau_b2b3(4, 0) == 0.901);
  CHECK(tables::tau_b2b3(5, 0) == tables::kAlpha);
  CHECK(tables::tau_b2b3(2, 3) == tables::kAlpha);
  CHECK(tables::eps_B(0) == 0.0);
  CHECK(tables::eps_B(3) == 0.83);
  CHECK(tables::eps_B(5) == tables::kAlpha);
  CHECK(tables::kM == 0.025);
  CHECK(tables::kM1 == doctest::Approx(1.0 / 410).epsilon(1e-15));
}
