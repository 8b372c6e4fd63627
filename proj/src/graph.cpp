#include "cordial/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace cordial {

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

int Graph::degree(int v) const {
  int d = 0;
  for (auto [a, b] : edges)
    if (a == v || b == v) ++d;
  return d;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(order);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

Graph make_graph(int order, std::vector<std::pair<int, int>> edges) {
  if (order < 0) throw std::invalid_argument("make_graph: negative order");
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u == v) throw std::invalid_argument("make_graph: self-loop");
    if (u < 0 || v >= order) throw std::invalid_argument("make_graph: endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("make_graph: duplicate edge");
  Graph g;
  g.order = order;
  g.edges = std::move(edges);
  return g;
}

namespace {

std::vector<std::string> indexed_roles(int n, const std::string& prefix) {
  std::vector<std::string> roles(n);
  for (int i = 0; i < n; ++i) roles[i] = prefix + std::to_string(i + 1);
  return roles;
}

}  // namespace

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path: order must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  Graph g = make_graph(n, std::move(e));
  g.roles = indexed_roles(n, "v");
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: order must be >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  Graph g = make_graph(n, std::move(e));
  g.roles = indexed_roles(n, "v");
  return g;
}

Graph star(int n) {
  if (n < 2) throw std::invalid_argument("star: order must be >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  Graph g = make_graph(n, std::move(e));
  g.roles.assign(n, "");
  g.roles[0] = "center";
  for (int i = 1; i < n; ++i) g.roles[i] = "v" + std::to_string(i);
  return g;
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: order must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  Graph g = make_graph(n, std::move(e));
  g.roles = indexed_roles(n, "v");
  return g;
}

Graph empty_graph(int n) {
  if (n < 1) throw std::invalid_argument("empty: order must be >= 1");
  Graph g = make_graph(n, {});
  g.roles = indexed_roles(n, "v");
  return g;
}

Graph ladder(int n) {
  if (n < 2) throw std::invalid_argument("ladder: order parameter must be >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) {
    e.emplace_back(i, i + 1);          // rail 1
    e.emplace_back(n + i, n + i + 1);  // rail 2
  }
  for (int i = 0; i < n; ++i) e.emplace_back(i, n + i);  // rungs
  Graph g = make_graph(2 * n, std::move(e));
  g.roles.assign(2 * n, "");
  for (int i = 0; i < n; ++i) {
    g.roles[i] = "rail1:v" + std::to_string(i + 1);
    g.roles[n + i] = "rail2:v" + std::to_string(i + 1);
  }
  return g;
}

Graph kayak_paddle(int n, int m, int k) {
  if (n < 3 || k < 3) throw std::invalid_argument("kayak_paddle: cycle sizes must be >= 3");
  if (m < 0) throw std::invalid_argument("kayak_paddle: path length must be >= 0");
  // Cycle 1 occupies 0..n-1, internal path vertices n..n+m-1, cycle 2 the rest.
  // The connecting path runs from cycle-1 vertex n-1 to cycle-2 vertex n+m.
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < k; ++i) e.emplace_back(n + m + i, n + m + (i + 1) % k);
  for (int i = 0; i <= m; ++i) e.emplace_back(i == 0 ? n - 1 : n + i - 1, n + i);
  Graph g = make_graph(n + m + k, std::move(e));
  g.roles.assign(n + m + k, "");
  for (int i = 0; i < n; ++i) g.roles[i] = "c1:v" + std::to_string(i + 1);
  for (int i = 0; i < m; ++i) g.roles[n + i] = "path:v" + std::to_string(i + 1);
  for (int i = 0; i < k; ++i) g.roles[n + m + i] = "c2:v" + std::to_string(i + 1);
  return g;
}

Graph snake(int n, int m) {
  if (n < 1) throw std::invalid_argument("snake: cycle count must be >= 1");
  if (m < 3) throw std::invalid_argument("snake: cycle size must be >= 3");
  std::vector<std::pair<int, int>> e;
  for (int j = 0; j < n; ++j) {
    int base = j * m;
    for (int i = 0; i < m; ++i) e.emplace_back(base + i, base + (i + 1) % m);
    if (j + 1 < n) e.emplace_back(base + m - 1, base + m);  // v_m^j -- v_1^(j+1)
  }
  Graph g = make_graph(n * m, std::move(e));
  g.roles.assign(n * m, "");
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i)
      g.roles[j * m + i] = "c" + std::to_string(j + 1) + ":v" + std::to_string(i + 1);
  return g;
}

namespace {

std::string child_role(const Graph& g, int v) {
  return g.roles.empty() ? "v" + std::to_string(v + 1) : g.roles[v];
}

}  // namespace

Graph join(const Graph& g, const Graph& h) {
  if (g.order < 1 || h.order < 1) throw std::invalid_argument("join: operands must be nonempty");
  std::vector<std::pair<int, int>> e = g.edges;
  for (auto [u, v] : h.edges) e.emplace_back(g.order + u, g.order + v);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < h.order; ++b) e.emplace_back(a, g.order + b);
  Graph out = make_graph(g.order + h.order, std::move(e));
  out.roles.assign(out.order, "");
  for (int v = 0; v < g.order; ++v) out.roles[v] = "g:" + child_role(g, v);
  for (int v = 0; v < h.order; ++v) out.roles[g.order + v] = "h:" + child_role(h, v);
  return out;
}

Graph corona(const Graph& g, const Graph& h) {
  if (g.order < 1 || h.order < 1) throw std::invalid_argument("corona: operands must be nonempty");
  // Base vertices first, then copy i of h at g.order + i*h.order.
  std::vector<std::pair<int, int>> e = g.edges;
  for (int i = 0; i < g.order; ++i) {
    int base = g.order + i * h.order;
    for (auto [u, v] : h.edges) e.emplace_back(base + u, base + v);
    for (int u = 0; u < h.order; ++u) e.emplace_back(i, base + u);
  }
  Graph out = make_graph(g.order * (1 + h.order), std::move(e));
  out.roles.assign(out.order, "");
  for (int v = 0; v < g.order; ++v) out.roles[v] = "g:" + child_role(g, v);
  for (int i = 0; i < g.order; ++i)
    for (int u = 0; u < h.order; ++u)
      out.roles[g.order + i * h.order + u] =
          "copy" + std::to_string(i + 1) + ":" + child_role(h, u);
  return out;
}

Graph tensor(const Graph& g, const Graph& h) {
  if (g.order < 1 || h.order < 1) throw std::invalid_argument("tensor: operands must be nonempty");
  // Vertex (a, b) is a*h.order + b.
  std::vector<std::pair<int, int>> e;
  for (auto [a1, a2] : g.edges)
    for (auto [b1, b2] : h.edges) {
      e.emplace_back(a1 * h.order + b1, a2 * h.order + b2);
      e.emplace_back(a1 * h.order + b2, a2 * h.order + b1);
    }
  Graph out = make_graph(g.order * h.order, std::move(e));
  out.roles.assign(out.order, "");
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < h.order; ++b)
      out.roles[a * h.order + b] =
          "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
  return out;
}

bool connected(const Graph& g) {
  if (g.order == 0) return true;
  auto adj = g.adjacency();
  std::vector<bool> seen(g.order, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
  }
  return count == g.order;
}

std::optional<BipartitePartition> bipartite_partition(const Graph& g) {
  auto adj = g.adjacency();
  std::vector<int> color(g.order, -1);
  for (int root = 0; root < g.order; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  BipartitePartition parts;
  for (int v = 0; v < g.order; ++v)
    (color[v] == 0 ? parts.v1 : parts.v2).push_back(v);
  return parts;
}

}  // namespace cordial
