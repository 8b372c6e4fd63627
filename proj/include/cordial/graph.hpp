#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cordial {

// Finite simple undirected graph. Vertices are 0..order-1; edges are stored
// sorted with u < v, no self-loops, no duplicates.
struct Graph {
  int order = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> roles;  // per-vertex role tags set by constructors

  int size() const { return int(edges.size()); }
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  std::vector<std::vector<int>> adjacency() const;
};

// Normalizes (u, v) ordering, validates ranges, rejects loops and duplicates.
Graph make_graph(int order, std::vector<std::pair<int, int>> edges);

Graph path(int n);                            // n >= 1
Graph cycle(int n);                           // n >= 3
Graph star(int n);                            // n >= 2, vertex 0 is the center
Graph complete(int n);                        // n >= 1
Graph empty_graph(int n);                     // n >= 1
Graph ladder(int n);                          // n >= 2, rails 0..n-1 and n..2n-1
Graph kayak_paddle(int n, int m, int k);      // cycles C_n, C_k joined by a path
                                              // with m internal vertices
Graph snake(int n, int m);                    // n copies of C_m chained by bridges

Graph join(const Graph& g, const Graph& h);
Graph corona(const Graph& g, const Graph& h);
Graph tensor(const Graph& g, const Graph& h);

bool connected(const Graph& g);

struct BipartitePartition {
  std::vector<int> v1, v2;  // v1 holds vertex 0
};

// BFS 2-coloring; nullopt when the graph contains an odd cycle.
std::optional<BipartitePartition> bipartite_partition(const Graph& g);

}  // namespace cordial
