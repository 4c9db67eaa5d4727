#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperis/errors.hpp"

namespace hyperis {

using VarId = int;  // 1-based variable index

// A monotone clause: a nonempty set of positive variables, stored as a
// sorted id list plus a 64-bit occupancy mask when every id fits in one
// word (fast subset tests and model checks).
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<VarId> vars);  // sorts and deduplicates

  int arity() const { return static_cast<int>(vars_.size()); }
  bool empty() const { return vars_.empty(); }
  const std::vector<VarId>& vars() const { return vars_; }
  bool contains(VarId v) const;
  bool has_mask() const { return has_mask_; }
  std::uint64_t mask() const { return mask_; }

  // true iff *this is a superset of other (not necessarily strict)
  bool superset_of(const Clause& other) const;

  bool operator==(const Clause& other) const { return vars_ == other.vars_; }
  bool operator<(const Clause& other) const { return vars_ < other.vars_; }

  // Returns the clause without variable v; no-op copy if v absent.
  Clause without(VarId v) const;

 private:
  std::vector<VarId> vars_;  // sorted, unique
  std::uint64_t mask_ = 0;   // bit (id-1) per variable, valid iff has_mask_
  bool has_mask_ = false;
};

enum class RegimeTag { Covered36, CoveredLarge, HardRegion, Unproven };

const char* regime_name(RegimeTag tag);

// Monotone CNF formula over variables 1..n. Immutable after construction;
// all operations are pure. Clause order is preserved (declaration order for
// parsed formulas, construction order for derived ones); variable ids are
// never renumbered.
class MonotoneFormula {
 public:
  MonotoneFormula() = default;
  // dedup: collapse clauses identical to an earlier one. Gadget
  // constructions that need multiset semantics pass dedup=false.
  MonotoneFormula(int n, std::vector<Clause> clauses, bool dedup = true);

  int num_vars() const { return n_; }
  int num_clauses() const { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(int idx) const { return clauses_[static_cast<size_t>(idx)]; }

  int degree(VarId x) const;      // d_x: number of clauses containing x
  int max_degree() const;         // Delta
  int min_arity() const;          // INT_MAX for the empty formula
  bool has_empty_clause() const;

  bool is_forced(VarId x) const;  // x appears in an arity-1 clause
  bool is_free(VarId x) const;    // x appears in no clause

  // Indices of clauses containing x, ascending.
  std::vector<int> occurrences(VarId x) const;

  MonotoneFormula deduplicated() const;

  // Drops every clause containing x (pinning x to 1).
  MonotoneFormula pin_true(VarId x) const;

  // Compact canonical byte string; clause order is significant. Used as a
  // memoization key together with the query variable.
  std::string serialize_key() const;

  bool operator==(const MonotoneFormula& other) const {
    return n_ == other.n_ && clauses_ == other.clauses_;
  }

 private:
  int n_ = 0;
  std::vector<Clause> clauses_;
};

// MCNF text format: header "p mcnf <n> <m>", then m clause lines of
// positive ints terminated by 0; lines starting with 'c' are comments.
// "p hygraph" headers parse identically (hyperedges are clauses).
MonotoneFormula parse_mcnf(std::string_view text);

std::string to_mcnf_text(const MonotoneFormula& f);

// Preprocessing: (i) remove clauses that are supersets of another clause
// (strict supersets, plus copies of duplicate clauses beyond the first),
// (ii) remove arity-1 clauses, recording their variables as forced.
// Clause order is preserved; every surviving clause appears verbatim in C.
std::pair<MonotoneFormula, std::vector<VarId>> preprocess(const MonotoneFormula& c);

RegimeTag classify_regime(const MonotoneFormula& c);
// Classification from the (min arity, max degree) pair alone.
RegimeTag classify_regime_params(int min_arity, int max_degree);

}  // namespace hyperis
