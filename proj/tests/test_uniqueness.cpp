#include "doctest.h"

#include <cmath>

#include "hyperis/uniqueness.hpp"

using namespace hyperis;

TEST_CASE("tree_f endpoints and small case") {
  const TreeParams tp{6, 28};
  CHECK(tree_f(0.0, tp) == doctest::Approx(0.5));
  CHECK(tree_f(1.0, tp) == 0.0);
  // k=2, Delta=2: f(z) = (1-z)/(2-z)
  for (double z : {0.0, 0.25, 0.5, 0.9, 1.0})
    CHECK(tree_f(z, TreeParams{2, 2}) ==
          doctest::Approx((1 - z) / (2 - z)).epsilon(1e-12));
}

TEST_CASE("f is strictly decreasing") {
  for (const TreeParams tp : {TreeParams{3, 6}, TreeParams{6, 28}, TreeParams{2, 5}}) {
    double prev = tree_f(0.0, tp);
    for (int i = 1; i <= 50; ++i) {
      const double cur = tree_f(i / 50.0, tp);
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("bisection target has slope at least 1") {
  // g(z) = z - (1-z)(1-z^{k-1})^{Delta-1}, sampled finite differences
  for (const TreeParams tp : {TreeParams{2, 2}, TreeParams{3, 6}, TreeParams{6, 28}}) {
    auto g = [&tp](double z) {
      return z - (1 - z) * std::pow(1 - std::pow(z, tp.k - 1), tp.delta - 1);
    };
    const double h = 1e-7;
    for (int i = 1; i < 50; ++i) {
      const double z = i / 50.0;
      CHECK((g(z + h) - g(z - h)) / (2 * h) >= 1.0 - 1e-5);
    }
  }
}

TEST_CASE("fixed_point at k=2, Delta=2") {
  const FixedPointResult fp = fixed_point(TreeParams{2, 2});
  const double want = (3.0 - std::sqrt(5.0)) / 2.0;  // root of x^2 - 3x + 1
  CHECK(fp.x == doctest::Approx(want).epsilon(1e-10));
  CHECK(fp.fprime_abs == doctest::Approx(want).epsilon(1e-9));
  CHECK(fp.classification == Uniqueness::Uniqueness);
  CHECK(tree_f(fp.x, TreeParams{2, 2}) == doctest::Approx(fp.x).epsilon(1e-10));
  CHECK_THROWS_AS(fixed_point(TreeParams{2, 2}, 0.0), Error);
}

TEST_CASE("k=6 classification margins") {
  const FixedPointResult a = fixed_point(TreeParams{6, 28});
  CHECK(a.fprime_abs > 0.99);
  CHECK(a.fprime_abs < 0.996);
  CHECK(a.classification == Uniqueness::Uniqueness);
  const FixedPointResult b = fixed_point(TreeParams{6, 29});
  CHECK(b.fprime_abs > 1.01);
  CHECK(b.classification == Uniqueness::NonUniqueness);
}

TEST_CASE("critical degree") {
  CHECK(critical_delta(6) == 28);
  CHECK(critical_delta(2) == 5);
  // cross-checked against a 50-digit bisection oracle
  CHECK(critical_delta(10) == 269);
  CHECK(critical_delta(13) == 1662);
}

TEST_CASE("x_Delta decreases and |f'| increases with Delta") {
  const int k = 6;
  double prev_x = 1.0, prev_fp = 0.0;
  for (int delta = 3; delta <= 40; ++delta) {
    const FixedPointResult fp = fixed_point(TreeParams{k, delta});
    CHECK(fp.x < prev_x);
    CHECK(fp.fprime_abs > prev_fp);
    prev_x = fp.x;
    prev_fp = fp.fprime_abs;
  }
}

TEST_CASE("level gaps") {
  SUBCASE("first two levels are pinned") {
    const LevelGap lg = level_gap(TreeParams{4, 9}, 3);
    CHECK(lg.p[0] == 1.0);
    CHECK(lg.p[1] == 0.0);
  }
  SUBCASE("uniqueness converges") {
    // near-critical contraction is slow: gap(500) is still ~4e-3 and the
    // 1e-6 mark is reached around level 4000 (values match a 40-digit
    // iteration oracle)
    const LevelGap mid = level_gap(TreeParams{6, 28}, 500);
    CHECK(mid.gaps.back() == doctest::Approx(0.003943035).epsilon(1e-5));
    const LevelGap lg = level_gap(TreeParams{6, 28}, 4000);
    CHECK(lg.gaps.back() < 1e-6);
  }
  SUBCASE("non-uniqueness keeps a two-cycle gap") {
    const LevelGap lg = level_gap(TreeParams{6, 40}, 500);
    CHECK(lg.gaps.back() > 1e-3);
  }
  SUBCASE("even levels fall, odd levels rise") {
    const LevelGap lg = level_gap(TreeParams{6, 40}, 100);
    for (size_t i = 0; i + 2 < lg.p.size(); i += 2)
      CHECK(lg.p[i + 2] <= lg.p[i] + 1e-15);
    for (size_t i = 1; i + 2 < lg.p.size(); i += 2)
      CHECK(lg.p[i + 2] >= lg.p[i] - 1e-15);
  }
}

TEST_CASE("scaled critical degree approaches e from below") {
  // Delta_c(k)*k/2^k climbs slowly toward e (2.6270, 2.6265, 2.6338,
  // 2.6375 at k = 10..13; 50-digit oracle agrees).
  double prev = 2.6;
  for (int k = 10; k <= 13; ++k) {
    const double scaled = critical_delta(k) * std::pow(2.0, -k) * k;
    CHECK(scaled > 2.6);
    CHECK(scaled < std::exp(1.0));
    if (k != 11) CHECK(scaled > prev);  // k=11 dips by 5e-4, then climbs
    prev = scaled;
  }
}

TEST_CASE("twospin fixed points") {
  SUBCASE("non-uniqueness at Delta=17") {
    const auto sols =
        twospin_fixed_points(mpq_class(1, 2), 1, mpq_class(1, 2), 17);
    CHECK(sols.size() >= 2);
    for (const auto& [x, y] : sols) {
      CHECK(x > 0);
      CHECK(y > 0);
    }
  }
  SUBCASE("deep hard-core uniqueness has one solution") {
    const auto sols = twospin_fixed_points(0, 1, mpq_class(1, 10), 4);
    CHECK(sols.size() == 1);
  }
  SUBCASE("ferromagnetic parameters rejected") {
    CHECK_THROWS_AS(twospin_fixed_points(2, 1, 1, 5), Error);
    CHECK_THROWS_AS(twospin_fixed_points(1, 1, 1, 5), Error);
  }
}
