#pragma once

#include <gmpxx.h>

#include <vector>

#include "hyperis/errors.hpp"

namespace hyperis {

// The infinite (Delta-1)-ary k-uniform hypertree.
struct TreeParams {
  int k = 2;
  int delta = 2;  // max degree Delta
};

enum class Uniqueness { Uniqueness, NonUniqueness, Boundary };

const char* uniqueness_name(Uniqueness u);

struct FixedPointResult {
  double x = 0;           // the fixed point of the level recursion
  double fprime_abs = 0;  // |f'(x)|
  Uniqueness classification = Uniqueness::Boundary;
};

// Level recursion f(z) = (1-z^{k-1})^{Delta-1} / (1 + (1-z^{k-1})^{Delta-1}),
// evaluated in log space so large k and Delta do not underflow.
double tree_f(double z, const TreeParams& tp);

// Unique root of z = f(z) by bisection on g(z) = z - (1-z)(1-z^{k-1})^{Delta-1}
// (g is increasing with g' >= 1, g(0) = -1, g(1) = 1). The classification
// margin around |f'(x)| = 1 is 1e-6; inside it the verdict is Boundary.
FixedPointResult fixed_point(const TreeParams& tp, double tol = 1e-12);

// Largest Delta with a Uniqueness verdict at this k; |f'(x_Delta)| is
// strictly increasing in Delta, so a doubling scan plus binary search works.
int critical_delta(int k);

struct LevelGap {
  std::vector<double> p;     // p_0 .. p_levels
  std::vector<double> gaps;  // |p_{n+1} - p_n|
};

// Iterates p_{n+1} = f(p_n) from p_0 = 1.
LevelGap level_gap(const TreeParams& tp, int levels);

// Positive solutions (x, y) of the antiferromagnetic 2-spin tree system
//   x = lambda ((beta y + 1)/(y + gamma))^{Delta-1},  y = same with x.
// Found by a log-spaced scan for sign changes plus bisection.
std::vector<std::pair<double, double>> twospin_fixed_points(
    const mpq_class& beta, const mpq_class& gamma, const mpq_class& lambda,
    int delta, int grid = 10000);

}  // namespace hyperis
