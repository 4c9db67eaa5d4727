#pragma once

#include <string>
#include <vector>

namespace hyperis {

// One numeric spot check: a closed-form expression maximised over its
// stated domain and compared against its bound. Not a certificate.
struct CheckResult {
  std::string name;
  std::string regime;
  std::string domain;
  double bound = 0;
  double extremal = 0;           // largest value found
  std::vector<double> witness;   // location of the extremum
  bool pass = false;
  long grid = 0;                 // points per coordinate
  std::size_t evaluations = 0;
  double wall_time_ms = 0;
};

std::vector<std::string> registry_names();

// grid = 0 selects per-entry defaults; extended switches evaluation from
// double to long double. UnknownName if the name matches nothing; a name
// that is a prefix of several entries runs all of them.
std::vector<CheckResult> run_inequality_checks(const std::string& name,
                                               long grid = 0,
                                               bool extended = false);
CheckResult inequality_check(const std::string& name, long grid = 0,
                             bool extended = false);
std::vector<CheckResult> run_all_inequalities(long grid = 0,
                                              bool extended = false);

}  // namespace hyperis
