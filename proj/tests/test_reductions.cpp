#include "doctest.h"

#include <cmath>

#include "hyperis/reductions.hpp"

using namespace hyperis;

namespace {

mpz_class pow_z(long base, unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
  return out;
}

void check_hardcore_identity(const Graph& g, int k) {
  const HardcoreGadget hg = hardcore_gadget(g, k);
  const mpq_class zh = exact_count(hg.h);
  const mpq_class zg = hardcore_partition(g, hg.lambda);
  const mpz_class mult =
      pow_z((1L << hg.block_size) - 1, static_cast<unsigned long>(g.num_vertices()));
  CHECK(zh == mpq_class(mult) * zg);
}

void check_domset_identity(const Graph& g) {
  const Graph gp = domset_hardness_gadget(g);
  CHECK(gp.num_vertices() == 2 * g.num_vertices() + g.num_edges());
  CHECK(gp.num_edges() == 2 * g.num_edges() + g.num_vertices());
  const mpz_class lhs = domsets_bruteforce(gp);
  const mpq_class rhs =
      mpq_class(pow_z(2, static_cast<unsigned long>(g.num_vertices() + g.num_edges()))) *
      twospin_partition(g, mpq_class(1, 2), 1, mpq_class(1, 2));
  CHECK(mpq_class(lhs) == rhs);
}

}  // namespace

TEST_CASE("domset_to_hyperis structure and identity") {
  SUBCASE("triangle: three copies of the full edge") {
    const MonotoneFormula h = domset_to_hyperis(cycle_graph(3));
    CHECK(h.num_clauses() == 3);
    for (const Clause& c : h.clauses())
      CHECK(c.vars() == std::vector<VarId>{1, 2, 3});
    CHECK(exact_count(h) == domsets_bruteforce(cycle_graph(3)));
    CHECK(exact_count(h) == 7);
  }
  SUBCASE("K4") {
    const MonotoneFormula h = domset_to_hyperis(complete_graph(4));
    CHECK(exact_count(h) == 15);
    CHECK(exact_count(h) == domsets_bruteforce(complete_graph(4)));
  }
  SUBCASE("Petersen") {
    const Graph g = petersen_graph();
    REQUIRE(g.regular_degree() == 3);
    const MonotoneFormula h = domset_to_hyperis(g);
    CHECK(exact_count(h) == domsets_bruteforce(g));
  }
  SUBCASE("uniformity and multiset degree") {
    const Graph g = petersen_graph();
    const MonotoneFormula h = domset_to_hyperis(g);
    for (const Clause& c : h.clauses()) CHECK(c.arity() == 4);  // Delta+1
    for (int v = 1; v <= g.num_vertices(); ++v) CHECK(h.degree(v) == 4);
  }
  SUBCASE("non-regular input rejected") {
    CHECK_THROWS_AS(domset_to_hyperis(path_graph(3)), Error);  // a star
  }
}

TEST_CASE("hardcore gadget identity") {
  SUBCASE("K2 at k=4: one 4-uniform edge") {
    const HardcoreGadget hg = hardcore_gadget(complete_graph(2), 4);
    CHECK(hg.block_size == 2);
    CHECK(hg.lambda == mpq_class(1, 3));
    CHECK(hg.h.num_vars() == 4);
    REQUIRE(hg.h.num_clauses() == 1);
    CHECK(hg.h.clause(0).arity() == 4);
    CHECK(exact_count(hg.h) == 15);
    check_hardcore_identity(complete_graph(2), 4);
  }
  SUBCASE("k=2 blocks are single vertices") {
    const Graph g = cycle_graph(4);
    const HardcoreGadget hg = hardcore_gadget(g, 2);
    CHECK(hg.lambda == 1);
    CHECK(hg.h.num_vars() == g.num_vertices());
    CHECK(mpq_class(exact_count(hg.h)) == hardcore_partition(g, 1));
  }
  SUBCASE("k=6 triangle in exact rationals") {
    check_hardcore_identity(cycle_graph(3), 6);
  }
  SUBCASE("structure: 2k'-uniform, degree preserved") {
    const Graph g = petersen_graph();
    const HardcoreGadget hg = hardcore_gadget(g, 6);
    for (const Clause& c : hg.h.clauses()) CHECK(c.arity() == 6);
    CHECK(hg.h.max_degree() == 3);
  }
  SUBCASE("small corpus, even and odd k") {
    for (int k : {2, 3, 4, 5, 6}) {
      check_hardcore_identity(path_graph(4), k);
      check_hardcore_identity(cycle_graph(4), k);
      check_hardcore_identity(complete_graph(3), k);
    }
  }
}

TEST_CASE("dominating-set gadget identity") {
  SUBCASE("K2 becomes P5") {
    const Graph gp = domset_hardness_gadget(complete_graph(2));
    CHECK(gp.num_vertices() == 5);
    CHECK(gp.num_edges() == 4);
    CHECK(domsets_bruteforce(gp) == 17);
    check_domset_identity(complete_graph(2));
  }
  SUBCASE("triangle sizes") {
    const Graph gp = domset_hardness_gadget(cycle_graph(3));
    CHECK(gp.num_vertices() == 9);
    CHECK(gp.num_edges() == 9);
    check_domset_identity(cycle_graph(3));
  }
  SUBCASE("single isolated vertex gains one pendant edge") {
    const Graph gp = domset_hardness_gadget(Graph(1, {}));
    CHECK(gp.num_vertices() == 2);
    CHECK(gp.num_edges() == 1);
    CHECK(domsets_bruteforce(gp) == 3);  // 2 * (1 + 1/2)
    check_domset_identity(Graph(1, {}));
  }
  SUBCASE("small corpus") {
    check_domset_identity(path_graph(4));
    check_domset_identity(cycle_graph(5));
    check_domset_identity(complete_graph(4));
  }
}

TEST_CASE("count_regdomset") {
  SUBCASE("triangle within 5% of 7") {
    const Estimate est = count_regdomset(cycle_graph(3), 0.05);
    CHECK(std::fabs(static_cast<double>(est.value) - 7.0) / 7.0 <= 0.05);
    CHECK(est.regime == RegimeTag::Covered36);  // k'=3, Delta'=3
  }
  SUBCASE("K4 within 5% of 15") {
    const Estimate est = count_regdomset(complete_graph(4), 0.05);
    CHECK(std::fabs(static_cast<double>(est.value) - 15.0) / 15.0 <= 0.05);
  }
  SUBCASE("non-regular rejected") {
    CHECK_THROWS_AS(count_regdomset(path_graph(4), 0.05), Error);
    CHECK_THROWS_AS(count_regdomset(cycle_graph(3), 0.0), Error);
  }
}

TEST_CASE("lambda_c helper") {
  CHECK(lambda_c(6) == mpq_class(3125, 4096));
  CHECK(lambda_c(3) == mpq_class(4, 1));
  CHECK_THROWS_AS(lambda_c(2), Error);
}
