#include "hyperis/graph.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace hyperis {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) fail(ErrorKind::IdOutOfRange, "negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    if (u == v) fail(ErrorKind::SyntaxError, "loop edge");
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n) fail(ErrorKind::IdOutOfRange, "vertex id outside 1..n");
    if (!seen.insert({u, v}).second) continue;  // collapse parallel edge
  }
  edges_.assign(seen.begin(), seen.end());
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> nb;
  for (const auto& [a, b] : edges_) {
    if (a == v) nb.push_back(b);
    if (b == v) nb.push_back(a);
  }
  std::sort(nb.begin(), nb.end());
  return nb;
}

int Graph::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges_)
    if (a == v || b == v) ++d;
  return d;
}

std::optional<int> Graph::regular_degree() const {
  if (n_ == 0) return std::nullopt;
  const int d = degree(1);
  for (int v = 2; v <= n_; ++v)
    if (degree(v) != d) return std::nullopt;
  return d;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (n_ > 64) fail(ErrorKind::TooLarge, "adjacency masks need n <= 64");
  std::vector<std::uint64_t> adj(static_cast<size_t>(n_) + 1, 0);
  for (const auto& [u, v] : edges_) {
    adj[static_cast<size_t>(u)] |= 1ULL << (v - 1);
    adj[static_cast<size_t>(v)] |= 1ULL << (u - 1);
  }
  return adj;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  bool header_seen = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == 'c') continue;
    if (!header_seen) {
      if (tok != "p")
        fail(ErrorKind::SyntaxError, "expected header 'p graph <n> <m>' at line " +
                                         std::to_string(line_no));
      std::string fmt;
      if (!(ls >> fmt >> n >> m) || fmt != "graph" || n < 0 || m < 0 ||
          n > 100000000 || m > 100000000)
        fail(ErrorKind::SyntaxError, "malformed header at line " + std::to_string(line_no));
      header_seen = true;
      continue;
    }
    long u, v;
    std::istringstream es(line);
    if (!(es >> u >> v))
      fail(ErrorKind::SyntaxError, "malformed edge at line " + std::to_string(line_no));
    std::string extra;
    if (es >> extra)
      fail(ErrorKind::SyntaxError, "trailing tokens at line " + std::to_string(line_no));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (!header_seen) fail(ErrorKind::SyntaxError, "missing header");
  if (static_cast<long>(edges.size()) != m)
    fail(ErrorKind::SyntaxError, "declared " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph_text(const Graph& g) {
  std::ostringstream out;
  out << "p graph " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  if (n >= 3) e.emplace_back(n, 1);
  return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i + 1, (i + 1) % 5 + 1);        // outer cycle
    e.emplace_back(i + 1, i + 6);                  // spoke
    e.emplace_back(i + 6, (i + 2) % 5 + 6);        // inner pentagram
  }
  return Graph(10, std::move(e));
}

Graph random_regular_graph(int n, int d, std::uint64_t seed) {
  if (d >= n || (static_cast<long>(n) * d) % 2 != 0)
    fail(ErrorKind::NotRegular, "no d-regular graph on these parameters");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<int> stubs;
    for (int v = 1; v <= n; ++v)
      for (int i = 0; i < d; ++i) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<int, int>> chosen;
    bool ok = true;
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) { ok = false; break; }
      if (u > v) std::swap(u, v);
      if (!chosen.insert({u, v}).second) { ok = false; break; }
    }
    if (ok)
      return Graph(n, std::vector<std::pair<int, int>>(chosen.begin(), chosen.end()));
  }
  fail(ErrorKind::NotRegular, "random regular pairing did not converge");
}

}  // namespace hyperis
