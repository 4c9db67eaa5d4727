#pragma once

#include <gmpxx.h>

#include "hyperis/counting.hpp"
#include "hyperis/formula.hpp"
#include "hyperis/graph.hpp"

namespace hyperis {

// Hypergraph with one hyperedge {v} u N(v) per vertex of a Delta-regular
// graph, kept as a multiset so every vertex has degree Delta+1 counting
// multiplicity. Its independent sets are exactly the complements of
// dominating sets: Z_H = #DomSets(G).
MonotoneFormula domset_to_hyperis(const Graph& g);

struct HardcoreGadget {
  MonotoneFormula h;   // 2k'-uniform hypergraph on k'*n vertices
  mpq_class lambda;    // 1/(2^k' - 1)
  int block_size = 0;  // k' = ceil(k/2)
};

// Blows each vertex into a block of k' fresh vertices and each edge into
// the union of its endpoint blocks; Z_H = (2^k' - 1)^n * Z_G(lambda).
HardcoreGadget hardcore_gadget(const Graph& g, int k);

// Pendant vertex per vertex, degree-2 vertex per edge (original edges
// deleted); #DomSets(G') = 2^(n+m) * Z_G(1/2, 1, 1/2).
Graph domset_hardness_gadget(const Graph& g);

// Approximate dominating-set count of a Delta-regular graph through the
// hypergraph reduction; the regime tag reflects (k', Delta') = (Delta+1,
// Delta+1).
Estimate count_regdomset(const Graph& g, double eps,
                         const CountOptions& opts = {});

// Hard-core uniqueness threshold (Delta-1)^(Delta-1)/(Delta-2)^Delta,
// exposed for regime reporting.
mpq_class lambda_c(int delta);

}  // namespace hyperis
