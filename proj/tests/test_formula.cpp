#include "doctest.h"

#include "hyperis/counting.hpp"
#include "hyperis/formula.hpp"
#include "hyperis/gen.hpp"

using namespace hyperis;

namespace {

MonotoneFormula F(int n, std::vector<std::vector<VarId>> cls) {
  std::vector<Clause> out;
  for (auto& c : cls) out.push_back(Clause(std::move(c)));
  return MonotoneFormula(n, std::move(out));
}

bool clause_in(const Clause& c, const MonotoneFormula& f) {
  for (const Clause& d : f.clauses())
    if (c == d) return true;
  return false;
}

}  // namespace

TEST_CASE("parse_mcnf basic format") {
  const MonotoneFormula f = parse_mcnf("p mcnf 3 1\n1 2 3 0\n");
  CHECK(f.num_vars() == 3);
  CHECK(f.num_clauses() == 1);
  CHECK(f.clause(0).vars() == std::vector<VarId>{1, 2, 3});
}

TEST_CASE("parse_mcnf error cases") {
  auto kind_of = [](const char* text) {
    try {
      parse_mcnf(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::SyntaxError;
  };
  CHECK(kind_of("p mcnf 2 1\n-1 2 0\n") == ErrorKind::NonMonotone);
  CHECK(kind_of("p mcnf 2 1\n0\n") == ErrorKind::EmptyClause);
  CHECK(kind_of("p mcnf 2 1\n1 3 0\n") == ErrorKind::IdOutOfRange);
  CHECK(kind_of("p cnf 2 1\n1 2 0\n") == ErrorKind::SyntaxError);
  CHECK(kind_of("p mcnf 2 2\n1 2 0\n") == ErrorKind::SyntaxError);  // short
  CHECK(kind_of("p mcnf 2 1\n1 2\n") == ErrorKind::SyntaxError);    // no 0
  CHECK(kind_of("p mcnf 2 1\n1 2 0 1\n") == ErrorKind::SyntaxError);
  CHECK_THROWS_AS(parse_mcnf("no header"), Error);
}

TEST_CASE("parse_mcnf comments, hygraph header, duplicate collapse") {
  const MonotoneFormula f =
      parse_mcnf("c a comment\np hygraph 4 3\nc another\n1 2 0\n3 4 0\n1 2 0\n");
  CHECK(f.num_clauses() == 2);  // duplicate collapsed
  CHECK(f.num_vars() == 4);
}

TEST_CASE("parse-serialize round trip is a fixed point") {
  const char* texts[] = {
      "p mcnf 3 1\n1 2 3 0\n",
      "p mcnf 5 3\n1 2 0\n2 3 4 0\n5 1 0\n",
  };
  for (const char* t : texts) {
    const MonotoneFormula a = parse_mcnf(t);
    const MonotoneFormula b = parse_mcnf(to_mcnf_text(a));
    CHECK(a == b);
    CHECK(to_mcnf_text(a) == to_mcnf_text(b));
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    FormulaSpec spec;
    spec.n = 9;
    spec.clauses = 8;
    const MonotoneFormula a = random_formula(spec, seed);
    CHECK(a == parse_mcnf(to_mcnf_text(a)));
  }
}

TEST_CASE("preprocess removes supersets then units") {
  SUBCASE("unit clause absorbs its supersets") {
    const auto [ct, forced] = preprocess(F(2, {{1}, {1, 2}}));
    CHECK(ct.num_clauses() == 0);
    CHECK(forced == std::vector<VarId>{1});
  }
  SUBCASE("strict superset removed") {
    const auto [ct, forced] = preprocess(F(3, {{1, 2}, {1, 2, 3}}));
    CHECK(ct.num_clauses() == 1);
    CHECK(ct.clause(0).vars() == std::vector<VarId>{1, 2});
    CHECK(forced.empty());
  }
  SUBCASE("identity case") {
    const MonotoneFormula c = F(3, {{1, 2}, {2, 3}});
    const auto [ct, forced] = preprocess(c);
    CHECK(ct == c);
    CHECK(forced.empty());
  }
}

TEST_CASE("preprocess is idempotent and count-preserving") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    FormulaSpec spec;
    spec.n = 8;
    spec.clauses = 9;
    spec.arity_min = 1;
    spec.arity_max = 4;
    MonotoneFormula c = random_formula(spec, seed + 1000);
    const auto [ct, forced] = preprocess(c);
    const auto [ct2, forced2] = preprocess(ct);
    CHECK(ct2 == ct);
    CHECK(forced2.empty());
    for (const Clause& cl : ct.clauses()) CHECK(clause_in(cl, c));
    // models of C = models of Ctilde with the forced variables pinned to 1
    mpz_class lhs = exact_count(c);
    lhs <<= forced.size();
    CHECK(lhs == exact_count(ct));
  }
}

TEST_CASE("degrees and arities") {
  const MonotoneFormula c = F(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3, 4}});
  CHECK(c.degree(1) == 3);
  CHECK(c.degree(4) == 2);
  CHECK(c.max_degree() == 3);
  CHECK(c.min_arity() == 2);
  CHECK(c.is_free(1) == false);
  CHECK(MonotoneFormula(2, {}).is_free(1) == true);
}

TEST_CASE("classify_regime") {
  // min arity 3, Delta <= 6
  CHECK(classify_regime(F(4, {{1, 2, 3}, {2, 3, 4}})) == RegimeTag::Covered36);
  CHECK(classify_regime_params(3, 6) == RegimeTag::Covered36);
  CHECK(classify_regime_params(200, 200) == RegimeTag::CoveredLarge);
  CHECK(classify_regime_params(2, 6) == RegimeTag::HardRegion);
  // the blow-up threshold: arity 6 is hard at degree 22 but unproven at 21
  CHECK(classify_regime_params(6, 22) == RegimeTag::HardRegion);
  CHECK(classify_regime_params(6, 21) == RegimeTag::Unproven);
  CHECK(classify_regime_params(2, 5) == RegimeTag::Unproven);
  CHECK(classify_regime_params(7, 7) == RegimeTag::Unproven);
}
