#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hyperis/formula.hpp"
#include "hyperis/graph.hpp"

namespace hyperis {

enum class DepthPolicy {
  IterativeDeepening,  // L = 8, 16, 32, ... until estimates stabilise
  FixedDepth,          // explicit L
};

struct CountOptions {
  DepthPolicy policy = DepthPolicy::IterativeDeepening;
  long fixed_depth = 0;            // used by FixedDepth
  std::uint64_t node_budget = 200'000'000;  // total tree nodes per call
  int exact_limit = 30;            // max n for brute-force enumeration
  std::ostream* trace = nullptr;
};

struct Estimate {
  long double value = 0;      // Zhat
  long double log2_value = 0;
  double eps = 0;
  long depth_used = 0;
  RegimeTag regime = RegimeTag::Unproven;
  bool guaranteed = false;    // every factor resolved exactly
  std::uint64_t nodes_visited = 0;
  double wall_time_ms = 0;
};

// Telescoping-product estimate of the model count Z(C); each factor is a
// truncated message evaluated at the policy's depth.
Estimate approx_count(const MonotoneFormula& c, double eps,
                      const CountOptions& opts = {});

// Exact model count by bitmask enumeration (n <= opts.exact_limit).
mpz_class exact_count(const MonotoneFormula& c, const CountOptions& opts = {});

// Exact model count through the telescoping product of exact message
// ratios; always an integer, compared against exact_count in tests.
mpz_class exact_count_telescoping(const MonotoneFormula& c,
                                  std::uint64_t node_budget = 0);

// Hard-core partition function Z_G(lambda) = sum_I lambda^|I|.
mpq_class hardcore_partition(const Graph& g, const mpq_class& lambda,
                             int limit = 30);

// Two-spin partition function with edge weights (beta, gamma) and vertex
// activity lambda on spin 0; 0^0 == 1.
mpq_class twospin_partition(const Graph& g, const mpq_class& beta,
                            const mpq_class& gamma, const mpq_class& lambda,
                            int limit = 30);

// Exact number of dominating sets.
mpz_class domsets_bruteforce(const Graph& g, int limit = 30);

}  // namespace hyperis
