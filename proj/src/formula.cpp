#include "hyperis/formula.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <sstream>

namespace hyperis {

Clause::Clause(std::vector<VarId> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  if (!vars_.empty() && vars_.back() <= 64) {
    has_mask_ = true;
    for (VarId v : vars_) mask_ |= 1ULL << (v - 1);
  }
}

bool Clause::contains(VarId v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

bool Clause::superset_of(const Clause& other) const {
  if (other.vars_.size() > vars_.size()) return false;
  if (has_mask_ && other.has_mask_)
    return (mask_ & other.mask_) == other.mask_;
  return std::includes(vars_.begin(), vars_.end(), other.vars_.begin(),
                       other.vars_.end());
}

Clause Clause::without(VarId v) const {
  std::vector<VarId> out;
  out.reserve(vars_.size());
  for (VarId u : vars_)
    if (u != v) out.push_back(u);
  return Clause(std::move(out));
}

const char* regime_name(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::Covered36: return "Covered36";
    case RegimeTag::CoveredLarge: return "CoveredLarge";
    case RegimeTag::HardRegion: return "HardRegion";
    case RegimeTag::Unproven: return "Unproven";
  }
  return "?";
}

MonotoneFormula::MonotoneFormula(int n, std::vector<Clause> clauses, bool dedup)
    : n_(n) {
  if (n < 0) fail(ErrorKind::IdOutOfRange, "negative variable count");
  for (const Clause& c : clauses) {
    if (c.empty()) fail(ErrorKind::EmptyClause, "empty clause");
    if (c.vars().front() < 1 || c.vars().back() > n)
      fail(ErrorKind::IdOutOfRange, "variable id outside 1..n");
  }
  if (dedup) {
    clauses_.reserve(clauses.size());
    for (Clause& c : clauses) {
      bool seen = false;
      for (const Clause& prev : clauses_)
        if (prev == c) { seen = true; break; }
      if (!seen) clauses_.push_back(std::move(c));
    }
  } else {
    clauses_ = std::move(clauses);
  }
}

int MonotoneFormula::degree(VarId x) const {
  int d = 0;
  for (const Clause& c : clauses_)
    if (c.contains(x)) ++d;
  return d;
}

int MonotoneFormula::max_degree() const {
  std::vector<int> deg(static_cast<size_t>(n_) + 1, 0);
  int best = 0;
  for (const Clause& c : clauses_)
    for (VarId v : c.vars()) best = std::max(best, ++deg[static_cast<size_t>(v)]);
  return best;
}

int MonotoneFormula::min_arity() const {
  int m = INT_MAX;
  for (const Clause& c : clauses_) m = std::min(m, c.arity());
  return m;
}

bool MonotoneFormula::has_empty_clause() const {
  for (const Clause& c : clauses_)
    if (c.empty()) return true;
  return false;
}

bool MonotoneFormula::is_forced(VarId x) const {
  for (const Clause& c : clauses_)
    if (c.arity() == 1 && c.vars()[0] == x) return true;
  return false;
}

bool MonotoneFormula::is_free(VarId x) const {
  for (const Clause& c : clauses_)
    if (c.contains(x)) return false;
  return true;
}

std::vector<int> MonotoneFormula::occurrences(VarId x) const {
  std::vector<int> idx;
  for (int i = 0; i < num_clauses(); ++i)
    if (clauses_[static_cast<size_t>(i)].contains(x)) idx.push_back(i);
  return idx;
}

MonotoneFormula MonotoneFormula::deduplicated() const {
  return MonotoneFormula(n_, clauses_, /*dedup=*/true);
}

MonotoneFormula MonotoneFormula::pin_true(VarId x) const {
  std::vector<Clause> kept;
  kept.reserve(clauses_.size());
  for (const Clause& c : clauses_)
    if (!c.contains(x)) kept.push_back(c);
  return MonotoneFormula(n_, std::move(kept), /*dedup=*/false);
}

std::string MonotoneFormula::serialize_key() const {
  std::string key;
  key.reserve(clauses_.size() * 8 + 8);
  auto put = [&key](int v) {
    // varint, ids are small positive numbers
    unsigned u = static_cast<unsigned>(v);
    while (u >= 0x80) {
      key.push_back(static_cast<char>(0x80 | (u & 0x7f)));
      u >>= 7;
    }
    key.push_back(static_cast<char>(u));
  };
  put(n_);
  put(num_clauses());
  for (const Clause& c : clauses_) {
    put(c.arity());
    for (VarId v : c.vars()) put(v);
  }
  return key;
}

namespace {

bool is_blank(const std::string& line) {
  for (char ch : line)
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

MonotoneFormula parse_mcnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  long n = -1, m = -1;
  std::vector<Clause> clauses;
  bool header_seen = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok[0] == 'c') continue;  // comment line
    if (!header_seen) {
      if (tok != "p")
        fail(ErrorKind::SyntaxError, "expected header 'p mcnf <n> <m>' at line " +
                                         std::to_string(line_no));
      std::string fmt;
      if (!(ls >> fmt >> n >> m) || (fmt != "mcnf" && fmt != "hygraph") ||
          n < 0 || m < 0 || n > 100000000 || m > 100000000)
        fail(ErrorKind::SyntaxError, "malformed header at line " + std::to_string(line_no));
      std::string extra;
      if (ls >> extra)
        fail(ErrorKind::SyntaxError, "trailing tokens in header at line " +
                                         std::to_string(line_no));
      header_seen = true;
      continue;
    }
    // clause line
    std::vector<VarId> vars;
    long lit;
    std::istringstream cs(line);
    bool terminated = false;
    while (cs >> lit) {
      if (terminated)
        fail(ErrorKind::SyntaxError, "tokens after clause terminator at line " +
                                         std::to_string(line_no));
      if (lit == 0) {
        terminated = true;
        continue;
      }
      if (lit < 0)
        fail(ErrorKind::NonMonotone, "negative literal at line " + std::to_string(line_no));
      if (lit > n)
        fail(ErrorKind::IdOutOfRange, "variable " + std::to_string(lit) +
                                          " exceeds n=" + std::to_string(n));
      vars.push_back(static_cast<VarId>(lit));
    }
    if (!cs.eof())
      fail(ErrorKind::SyntaxError, "non-numeric token at line " + std::to_string(line_no));
    if (!terminated)
      fail(ErrorKind::SyntaxError, "missing clause terminator at line " +
                                       std::to_string(line_no));
    if (vars.empty())
      fail(ErrorKind::EmptyClause, "empty clause at line " + std::to_string(line_no));
    clauses.push_back(Clause(std::move(vars)));
  }
  if (!header_seen) fail(ErrorKind::SyntaxError, "missing header");
  if (static_cast<long>(clauses.size()) != m)
    fail(ErrorKind::SyntaxError, "declared " + std::to_string(m) + " clauses, found " +
                                     std::to_string(clauses.size()));
  return MonotoneFormula(static_cast<int>(n), std::move(clauses), /*dedup=*/true);
}

std::string to_mcnf_text(const MonotoneFormula& f) {
  std::ostringstream out;
  out << "p mcnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
  for (const Clause& c : f.clauses()) {
    for (VarId v : c.vars()) out << v << ' ';
    out << "0\n";
  }
  return out.str();
}

std::pair<MonotoneFormula, std::vector<VarId>> preprocess(const MonotoneFormula& c) {
  const auto& cl = c.clauses();
  const int m = c.num_clauses();
  std::vector<bool> removed(static_cast<size_t>(m), false);
  // step (i): drop strict supersets; exact duplicates collapse to the first
  // copy (a duplicate never changes the model count and a clean formula is
  // what the child construction needs).
  for (int i = 0; i < m; ++i) {
    if (removed[static_cast<size_t>(i)]) continue;
    for (int j = 0; j < m; ++j) {
      if (i == j || removed[static_cast<size_t>(j)]) continue;
      const Clause& a = cl[static_cast<size_t>(i)];
      const Clause& b = cl[static_cast<size_t>(j)];
      if (a == b) {
        if (j > i) removed[static_cast<size_t>(j)] = true;
      } else if (a.superset_of(b)) {
        removed[static_cast<size_t>(i)] = true;
        break;
      }
    }
  }
  // step (ii): drop arity-1 clauses, record forced variables
  std::vector<VarId> forced;
  std::vector<Clause> kept;
  for (int i = 0; i < m; ++i) {
    if (removed[static_cast<size_t>(i)]) continue;
    const Clause& cc = cl[static_cast<size_t>(i)];
    if (cc.arity() == 1) {
      forced.push_back(cc.vars()[0]);
    } else {
      kept.push_back(cc);
    }
  }
  std::sort(forced.begin(), forced.end());
  return {MonotoneFormula(c.num_vars(), std::move(kept), /*dedup=*/false),
          std::move(forced)};
}

RegimeTag classify_regime_params(int min_arity, int max_degree) {
  if (min_arity >= 3 && max_degree <= 6) return RegimeTag::Covered36;
  if (min_arity >= max_degree && max_degree >= 200) return RegimeTag::CoveredLarge;
  // Hardness region: k >= 2, Delta >= 3 and 2^ceil(k/2) - 1 < (D-2)^D/(D-1)^(D-1),
  // i.e. the blow-up gadget lands above the hard-core inapproximability
  // threshold lambda_c(Delta).
  if (min_arity >= 2 && min_arity != INT_MAX && max_degree >= 3) {
    const int kp = (min_arity + 1) / 2;
    if (kp < 60) {  // beyond that the threshold is unreachable anyway
      const double lhs = std::pow(2.0, kp) - 1.0;
      const double d = max_degree;
      const double rhs = std::exp(d * std::log(d - 2.0) - (d - 1.0) * std::log(d - 1.0));
      if (lhs < rhs) return RegimeTag::HardRegion;
    }
  }
  return RegimeTag::Unproven;
}

RegimeTag classify_regime(const MonotoneFormula& c) {
  return classify_regime_params(c.min_arity(), c.max_degree());
}

}  // namespace hyperis
