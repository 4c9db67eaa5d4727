#include "hyperis/uniqueness.hpp"

#include <algorithm>
#include <cmath>

namespace hyperis {

const char* uniqueness_name(Uniqueness u) {
  switch (u) {
    case Uniqueness::Uniqueness: return "Uniqueness";
    case Uniqueness::NonUniqueness: return "NonUniqueness";
    case Uniqueness::Boundary: return "Boundary";
  }
  return "?";
}

namespace {

void validate(const TreeParams& tp) {
  if (tp.k < 2 || tp.delta < 2)
    fail(ErrorKind::DomainError, "need k >= 2 and Delta >= 2");
}

// log of (1 - z^{k-1})^{Delta-1}
double log_a(double z, const TreeParams& tp) {
  if (z <= 0) return 0.0;
  const double zk = (tp.k - 1) * std::log(z);  // log z^{k-1}
  // log(1 - e^zk), stable for zk close to 0
  const double l1m = zk > -37 ? std::log1p(-std::exp(zk)) : -std::exp(zk);
  return (tp.delta - 1) * l1m;
}

}  // namespace

double tree_f(double z, const TreeParams& tp) {
  validate(tp);
  if (z < 0 || z > 1) fail(ErrorKind::DomainError, "z in [0,1]");
  if (z == 1.0) return 0.0;
  const double la = log_a(z, tp);
  // a/(1+a) = 1/(1+e^{-la})
  return 1.0 / (1.0 + std::exp(-la));
}

FixedPointResult fixed_point(const TreeParams& tp, double tol) {
  validate(tp);
  if (!(tol > 0)) fail(ErrorKind::InvalidTolerance, "tol must be positive");
  // g(z) = z - (1-z) (1-z^{k-1})^{Delta-1}
  auto g = [&tp](double z) { return z - (1.0 - z) * std::exp(log_a(z, tp)); };
  double lo = 0.0, hi = 1.0, mid = 0.5;
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double v = g(mid);
    if (std::fabs(v) <= tol) break;
    if (v < 0)
      lo = mid;
    else
      hi = mid;
  }
  FixedPointResult res;
  res.x = mid;
  // |f'(x)| = (Delta-1)(k-1) x^{k-1} (1-x) / (1 - x^{k-1})
  const double lxk = (tp.k - 1) * std::log(mid);
  const double xk = std::exp(lxk);
  res.fprime_abs = (tp.delta - 1.0) * (tp.k - 1.0) * xk * (1.0 - mid) /
                   (1.0 - xk);
  constexpr double kMargin = 1e-6;
  if (res.fprime_abs < 1.0 - kMargin)
    res.classification = Uniqueness::Uniqueness;
  else if (res.fprime_abs > 1.0 + kMargin)
    res.classification = Uniqueness::NonUniqueness;
  else
    res.classification = Uniqueness::Boundary;
  return res;
}

int critical_delta(int k) {
  if (k < 2) fail(ErrorKind::DomainError, "need k >= 2");
  auto unique_at = [k](int delta) {
    return fixed_point(TreeParams{k, delta}).classification ==
           Uniqueness::Uniqueness;
  };
  if (!unique_at(2)) return 1;  // degenerate; does not occur for k >= 2
  int lo = 2, hi = 4;
  while (unique_at(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > (1 << 28)) fail(ErrorKind::TooLarge, "critical degree overflow");
  }
  // invariant: unique at lo, not unique at hi
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (unique_at(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

LevelGap level_gap(const TreeParams& tp, int levels) {
  validate(tp);
  if (levels < 1) fail(ErrorKind::DomainError, "levels >= 1");
  LevelGap out;
  out.p.reserve(static_cast<size_t>(levels) + 1);
  out.p.push_back(1.0);
  for (int n = 0; n < levels; ++n) out.p.push_back(tree_f(out.p.back(), tp));
  for (int n = 0; n < levels; ++n)
    out.gaps.push_back(std::fabs(out.p[static_cast<size_t>(n) + 1] - out.p[static_cast<size_t>(n)]));
  return out;
}

std::vector<std::pair<double, double>> twospin_fixed_points(
    const mpq_class& beta, const mpq_class& gamma, const mpq_class& lambda,
    int delta, int grid) {
  if (gamma <= 0 || lambda <= 0 || beta < 0)
    fail(ErrorKind::DomainError, "need gamma > 0, lambda > 0, beta >= 0");
  if (beta * gamma >= 1)
    fail(ErrorKind::NotAntiferromagnetic, "need beta*gamma < 1");
  if (delta < 2) fail(ErrorKind::DomainError, "need Delta >= 2");
  const double b = beta.get_d(), g = gamma.get_d(), l = lambda.get_d();
  auto next = [&](double x) {
    return l * std::pow((b * x + 1.0) / (x + g), delta - 1.0);
  };
  // root function of the composed map; fixed points of next∘next
  auto t = [&](double x) { return x - next(next(x)); };
  const double lo = 1e-9;
  const double hi = l * std::pow(std::max(1.0, 1.0 / g), delta - 1.0) * 1e3;
  std::vector<std::pair<double, double>> sols;
  const double llo = std::log(lo), lhi = std::log(hi);
  double prev_x = lo, prev_t = t(lo);
  for (int i = 1; i < grid; ++i) {
    const double x = std::exp(llo + (lhi - llo) * i / (grid - 1));
    const double tx = t(x);
    if ((prev_t <= 0 && tx > 0) || (prev_t >= 0 && tx < 0) || tx == 0) {
      double a = prev_x, bb = x;
      for (int it = 0; it < 200 && bb - a > 1e-12; ++it) {
        const double mid = 0.5 * (a + bb);
        const double tm = t(mid);
        if ((tm <= 0) == (prev_t <= 0))
          a = mid;
        else
          bb = mid;
      }
      const double x0 = 0.5 * (a + bb);
      const double y0 = next(x0);
      bool dup = false;
      for (const auto& [sx, sy] : sols)
        if (std::fabs(sx - x0) <= 1e-9 * std::max(1.0, std::fabs(sx))) dup = true;
      if (!dup) sols.emplace_back(x0, y0);
    }
    prev_x = x;
    prev_t = tx;
  }
  return sols;
}

}  // namespace hyperis
