#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperis/errors.hpp"

namespace hyperis {

// Simple undirected graph on vertices 1..n. Edges are stored sorted with
// u < v; loops and parallel edges are rejected at construction.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::vector<int> neighbors(int v) const;
  int degree(int v) const;
  // Degree if the graph is regular, nullopt otherwise.
  std::optional<int> regular_degree() const;

  // Per-vertex adjacency bitmask (n <= 64 required by the caller).
  std::vector<std::uint64_t> adjacency_masks() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

// Text format: header "p graph <n> <m>", then m lines "u v";
// 'c' lines are comments.
Graph parse_graph(std::string_view text);
std::string to_graph_text(const Graph& g);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph petersen_graph();

// Random d-regular simple graph via repeated pairing; deterministic for a
// fixed seed. Requires n*d even and d < n.
Graph random_regular_graph(int n, int d, std::uint64_t seed);

}  // namespace hyperis
