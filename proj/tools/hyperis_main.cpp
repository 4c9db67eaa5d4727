#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperis/comp_tree.hpp"
#include "hyperis/counting.hpp"
#include "hyperis/decay.hpp"
#include "hyperis/formula.hpp"
#include "hyperis/gen.hpp"
#include "hyperis/graph.hpp"
#include "hyperis/reductions.hpp"
#include "hyperis/registry.hpp"
#include "hyperis/uniqueness.hpp"
#include "hyperis/utils.hpp"

using json = nlohmann::ordered_json;
using namespace hyperis;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::SyntaxError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string header_format(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == 'c') continue;
    if (tok == "p") {
      std::string fmt;
      ls >> fmt;
      return fmt;
    }
    break;
  }
  fail(ErrorKind::SyntaxError, "missing 'p' header");
}

MonotoneFormula graph_to_mcnf(const Graph& g) {
  std::vector<Clause> clauses;
  clauses.reserve(static_cast<size_t>(g.num_edges()));
  for (const auto& [u, v] : g.edges()) clauses.push_back(Clause({u, v}));
  return MonotoneFormula(g.num_vertices(), std::move(clauses));
}

// Accepts mcnf, hygraph and graph headers; graphs become 2-uniform formulas.
MonotoneFormula load_formula(const std::string& text) {
  const std::string fmt = header_format(text);
  if (fmt == "graph") return graph_to_mcnf(parse_graph(text));
  return parse_mcnf(text);
}

std::string command_echo(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

double mpz_log2(const mpz_class& z) {
  signed long exp;
  const double d = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log2(d) + static_cast<double>(exp);
}

int cmd_count(const std::string& echo, const std::string& input, double eps,
              bool exact, long proof_depth, std::uint64_t budget,
              std::uint64_t seed, bool trace, int exact_limit) {
  const std::string text = read_file(input);
  const MonotoneFormula f = load_formula(text);
  json rec;
  rec["command"] = echo;
  rec["input"] = input;
  rec["input_digest"] = fnv1a_hex(text);
  rec["n"] = f.num_vars();
  rec["m"] = f.num_clauses();
  rec["regime"] = regime_name(classify_regime(f));
  rec["seed"] = seed;
  CountOptions opts;
  if (budget) opts.node_budget = budget;
  if (exact_limit) opts.exact_limit = exact_limit;
  if (trace) opts.trace = &std::cerr;
  if (exact) {
    const auto t0 = std::chrono::steady_clock::now();
    const mpz_class z = exact_count(f, opts);
    rec["mode"] = "exact";
    rec["count"] = z.get_str();
    rec["log2_value"] = z == 0 ? 0.0 : mpz_log2(z);
    rec["wall_time_ms"] = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
  } else {
    if (proof_depth > 0) {
      opts.policy = DepthPolicy::FixedDepth;
      opts.fixed_depth = proof_depth;
    }
    const Estimate est = approx_count(f, eps, opts);
    rec["mode"] = "estimate";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12Lg", est.value);
    rec["estimate"] = std::string(buf);
    rec["log2_value"] = static_cast<double>(est.log2_value);
    rec["eps"] = est.eps;
    rec["depth_used"] = est.depth_used;
    rec["guaranteed"] = est.guaranteed;
    rec["nodes_visited"] = est.nodes_visited;
    rec["wall_time_ms"] = est.wall_time_ms;
  }
  std::cout << rec.dump() << '\n';
  return 0;
}

int cmd_uniqueness(const std::string& echo, int k, int delta, int critical,
                   int gap_levels, bool twospin, double beta, double gamma,
                   double lambda, int grid) {
  json rec;
  rec["command"] = echo;
  if (critical > 0) {
    rec["k"] = critical;
    rec["critical_delta"] = critical_delta(critical);
  } else if (twospin) {
    auto to_q = [](double v) {
      mpq_class q(v);
      q.canonicalize();
      return q;
    };
    const auto sols =
        twospin_fixed_points(to_q(beta), to_q(gamma), to_q(lambda), delta, grid);
    rec["beta"] = beta;
    rec["gamma"] = gamma;
    rec["lambda"] = lambda;
    rec["delta"] = delta;
    rec["solutions"] = json::array();
    for (const auto& [x, y] : sols) rec["solutions"].push_back({x, y});
    rec["count"] = sols.size();
  } else if (gap_levels > 0) {
    const LevelGap lg = level_gap(TreeParams{k, delta}, gap_levels);
    rec["k"] = k;
    rec["delta"] = delta;
    rec["levels"] = gap_levels;
    rec["p"] = lg.p;
    rec["gaps"] = lg.gaps;
    rec["final_gap"] = lg.gaps.back();
  } else {
    const FixedPointResult fp = fixed_point(TreeParams{k, delta});
    rec["k"] = k;
    rec["delta"] = delta;
    rec["x"] = fp.x;
    rec["fprime_abs"] = fp.fprime_abs;
    rec["classification"] = uniqueness_name(fp.classification);
  }
  std::cout << rec.dump() << '\n';
  return 0;
}

int cmd_kappa(const std::string& echo, int k, int delta, int dmax, int wcap,
              int grid, int samples, std::uint64_t seed) {
  KappaSearchOptions opts;
  opts.d_max = dmax;
  opts.w_entry_cap = wcap;
  opts.grid = grid;
  opts.random_vectors = samples;
  opts.seed = seed;
  const KappaSearchReport rep = kappa_star_max_search(k, delta, opts);
  json rec;
  rec["command"] = echo;
  rec["k"] = k;
  rec["delta"] = delta;
  rec["d_max"] = dmax;
  rec["w_entry_cap"] = wcap;
  rec["grid"] = grid;
  rec["samples"] = samples;
  rec["seed"] = seed;
  rec["vectors_checked"] = rep.vectors_checked;
  rec["evaluations"] = rep.evaluations;
  rec["max_found"] = rep.max_found;
  rec["argmax_w"] = rep.argmax_w;
  rec["argmax_r"] = rep.argmax_r;
  rec["wall_time_ms"] = rep.wall_time_ms;
  std::cout << rec.dump() << '\n';
  return 0;
}

int cmd_verify(const std::string& name, bool all, long grid, bool extended) {
  std::vector<CheckResult> results;
  if (all)
    results = run_all_inequalities(grid, extended);
  else
    results = run_inequality_checks(name, grid, extended);
  std::printf("%-14s %-14s %-36s %10s %14s %5s %6s %9s\n", "name", "regime",
              "domain", "bound", "extremal", "pass", "grid", "time_ms");
  bool ok = true;
  for (const auto& r : results) {
    std::printf("%-14s %-14s %-36s %10.5f %14.6e %5s %6ld %9.1f\n",
                r.name.c_str(), r.regime.c_str(), r.domain.c_str(), r.bound,
                r.extremal, r.pass ? "pass" : "FAIL", r.grid, r.wall_time_ms);
    ok = ok && r.pass;
  }
  std::printf("%zu checks, %s\n", results.size(), ok ? "all pass" : "FAILURES");
  return ok ? 0 : 1;
}

int cmd_reduce(const std::string& echo, const std::string& kind,
               const std::string& input, int k, const std::string& output) {
  const std::string text = read_file(input);
  const Graph g = parse_graph(text);
  json rec;
  rec["command"] = echo;
  rec["kind"] = kind;
  rec["input"] = input;
  rec["input_digest"] = fnv1a_hex(text);
  rec["n"] = g.num_vertices();
  rec["m"] = g.num_edges();
  std::string instance;
  if (kind == "domset-to-hyperis") {
    const MonotoneFormula h = domset_to_hyperis(g);
    instance = to_mcnf_text(h);
    rec["multiplier"] = "1";
    rec["identity"] = "Z_H = #DomSets(G)";
  } else if (kind == "hardcore") {
    const HardcoreGadget hg = hardcore_gadget(g, k);
    instance = to_mcnf_text(hg.h);
    mpz_class mult;
    mpz_ui_pow_ui(mult.get_mpz_t(),
                  static_cast<unsigned long>((1L << hg.block_size) - 1),
                  static_cast<unsigned long>(g.num_vertices()));
    rec["k"] = k;
    rec["block_size"] = hg.block_size;
    rec["lambda"] = hg.lambda.get_str();
    rec["multiplier"] = mult.get_str();
    rec["identity"] = "Z_H = multiplier * Z_G(lambda)";
  } else if (kind == "domset-gadget") {
    const Graph gp = domset_hardness_gadget(g);
    instance = to_graph_text(gp);
    mpz_class mult;
    mpz_ui_pow_ui(mult.get_mpz_t(), 2,
                  static_cast<unsigned long>(g.num_vertices() + g.num_edges()));
    rec["beta"] = "1/2";
    rec["gamma"] = "1";
    rec["lambda"] = "1/2";
    rec["multiplier"] = mult.get_str();
    rec["identity"] = "#DomSets(G') = multiplier * Z_G(1/2,1,1/2)";
  } else {
    fail(ErrorKind::UnknownName, "unknown reduction '" + kind + "'");
  }
  if (!output.empty()) {
    std::ofstream out(output, std::ios::binary);
    if (!out) fail(ErrorKind::SyntaxError, "cannot write " + output);
    out << instance;
    rec["output"] = output;
    std::cout << rec.dump() << '\n';
  } else {
    std::cout << instance;
    std::cerr << rec.dump() << '\n';
  }
  return 0;
}

int cmd_bench(std::uint64_t seed) {
  std::printf("%-22s %4s %4s %12s %12s %10s %12s %6s\n", "instance", "n", "m",
              "exact", "estimate", "rel_err", "nodes", "ms");
  struct Case {
    std::string name;
    MonotoneFormula f;
  };
  std::vector<Case> cases;
  for (int n : {12, 16, 20}) {
    FormulaSpec spec;
    spec.n = n;
    spec.clauses = n;
    spec.arity_min = 3;
    spec.arity_max = 5;
    spec.max_degree = 6;
    cases.push_back({"random(3..5)/n" + std::to_string(n),
                     random_formula(spec, mix_seed(seed, n))});
  }
  cases.push_back({"petersen-domsets", domset_to_hyperis(petersen_graph())});
  for (auto& [name, f] : cases) {
    const mpz_class z = exact_count(f);
    const Estimate est = approx_count(f, 0.05);
    const double zd = z.get_d();
    const double rel = std::fabs(static_cast<double>(est.value) - zd) / zd;
    std::printf("%-22s %4d %4d %12s %12.4Lg %10.2e %12llu %6.0f\n", name.c_str(),
                f.num_vars(), f.num_clauses(), z.get_str().c_str(), est.value,
                rel, static_cast<unsigned long long>(est.nodes_visited),
                est.wall_time_ms);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"approximate and exact counting for hypergraph independent sets"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "cap worker threads (default: cores)");

  const std::string echo = command_echo(argc, argv);

  // count
  auto* count = app.add_subcommand("count", "count satisfying assignments");
  std::string input;
  double eps = 0.05;
  bool exact = false, trace = false;
  long proof_depth = 0;
  std::uint64_t budget = 0, seed = 1;
  count->add_option("--input", input, "mcnf/hygraph/graph file")->required();
  count->add_option("--eps", eps, "relative error target");
  count->add_flag("--exact", exact, "brute-force exact count");
  count->add_option("--proof-depth", proof_depth, "fixed truncation depth L");
  count->add_option("--budget", budget, "node budget");
  count->add_option("--seed", seed, "seed echoed into the run record");
  count->add_flag("--trace", trace, "per-node trace on stderr");
  int exact_limit = 0;
  count->add_option("--exact-limit", exact_limit,
                    "max variables for --exact (default 30)");

  // uniqueness
  auto* uniq = app.add_subcommand("uniqueness", "hypertree fixed-point analysis");
  int uk = 0, udelta = 0, ucritical = 0, ugap = 0, ugrid = 10000;
  bool utwospin = false;
  double ubeta = 0, ugamma = 1, ulambda = 1;
  uniq->add_option("--k", uk, "hyperedge arity");
  uniq->add_option("--delta", udelta, "max degree Delta");
  uniq->add_option("--critical", ucritical, "report the critical Delta for this k");
  uniq->add_option("--gap", ugap, "iterate this many levels and print gaps");
  uniq->add_flag("--twospin", utwospin, "two-spin tree fixed points");
  uniq->add_option("--beta", ubeta, "two-spin beta");
  uniq->add_option("--gamma", ugamma, "two-spin gamma");
  uniq->add_option("--lambda", ulambda, "two-spin lambda");
  uniq->add_option("--grid", ugrid, "scan resolution");

  // kappa
  auto* kappa = app.add_subcommand("kappa", "decay-rate maximisation sweep");
  int kk = 3, kdelta = 6, kdmax = 5, kwcap = 6, kgrid = 33, ksamples = 0;
  std::uint64_t kseed = 1;
  kappa->add_option("--k", kk, "arity lower bound");
  kappa->add_option("--delta", kdelta, "max degree Delta");
  kappa->add_option("--dmax", kdmax, "max occurrence count d");
  kappa->add_option("--wcap", kwcap, "max enumerated entry of w");
  kappa->add_option("--grid", kgrid, "points per coordinate");
  kappa->add_option("--samples", ksamples, "extra random vectors");
  kappa->add_option("--seed", kseed, "search seed");

  // verify
  auto* verify = app.add_subcommand("verify", "numeric inequality spot checks");
  std::string vname;
  bool vall = false, vextended = false;
  long vgrid = 0;
  verify->add_option("--name", vname, "check name (prefix selects a family)");
  verify->add_flag("--all", vall, "run the whole registry");
  verify->add_option("--grid", vgrid, "grid override");
  verify->add_flag("--extended", vextended, "evaluate in extended precision");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "gadget constructions");
  std::string rkind, rinput, routput;
  int rk = 4;
  reduce->add_option("kind", rkind, "domset-to-hyperis | hardcore | domset-gadget")
      ->required();
  reduce->add_option("--input", rinput, "graph file")->required();
  reduce->add_option("--k", rk, "arity parameter for hardcore");
  reduce->add_option("--output", routput, "write the instance here");

  // bench
  auto* bench = app.add_subcommand("bench", "timing table on a fixed corpus");
  std::uint64_t bseed = 1;
  bench->add_option("--seed", bseed, "corpus seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  set_max_threads(threads);

  try {
    if (count->parsed())
      return cmd_count(echo, input, eps, exact, proof_depth, budget, seed,
                       trace, exact_limit);
    if (uniq->parsed()) {
      if (ucritical == 0 && !utwospin && (uk < 2 || udelta < 2))
        fail(ErrorKind::DomainError, "need --k and --delta (or --critical)");
      return cmd_uniqueness(echo, uk, udelta, ucritical, ugap, utwospin, ubeta,
                            ugamma, ulambda, ugrid);
    }
    if (kappa->parsed())
      return cmd_kappa(echo, kk, kdelta, kdmax, kwcap, kgrid, ksamples, kseed);
    if (verify->parsed()) {
      if (!vall && vname.empty())
        fail(ErrorKind::UnknownName, "pass --name NAME or --all");
      return cmd_verify(vname, vall, vgrid, vextended);
    }
    if (reduce->parsed()) return cmd_reduce(echo, rkind, rinput, rk, routput);
    if (bench->parsed()) return cmd_bench(bseed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
