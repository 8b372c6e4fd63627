#include "cordial/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace cordial {

namespace {

struct Searcher {
  const Graph& g;
  const ArithmeticStructure& s;
  bool prune;
  bool counting;

  std::vector<std::vector<int>> back_edges;  // neighbors u < v for each v
  std::vector<i64> assigned;
  std::vector<bool> used;
  i64 total_edges = 0;
  i64 half_up = 0;  // ceil(|E| / 2)

  i64 e0 = 0, e1 = 0;
  i64 nodes = 0;
  i64 hits = 0;
  std::optional<Labeling> first;

  Searcher(const Graph& graph, const ArithmeticStructure& st, bool do_prune, bool count_mode)
      : g(graph), s(st), prune(do_prune), counting(count_mode) {
    back_edges.assign(g.order, {});
    for (auto [u, v] : g.edges) back_edges[v].push_back(u);
    assigned.assign(g.order, 0);
    used.assign(s.label_set.size(), false);
    total_edges = g.size();
    half_up = (total_edges + 1) / 2;
  }

  // Returns true when the caller should stop (find mode, first hit reached).
  bool dfs(int v) {
    if (v == g.order) {
      if (std::llabs(e0 - e1) <= 1) {
        ++hits;
        if (!first) first = Labeling{assigned};
        if (!counting) return true;
      }
      return false;
    }
    for (size_t idx = 0; idx < s.label_set.size(); ++idx) {
      if (used[idx]) continue;
      i64 label = s.label_set[idx];
      ++nodes;
      i64 add0 = 0, add1 = 0;
      for (int u : back_edges[v]) {
        auto [bit, reason] = induced_edge_label(s, assigned[u], label);
        (void)reason;
        (bit == 0 ? add0 : add1)++;
      }
      e0 += add0;
      e1 += add1;
      if (!prune || (e0 <= half_up && e1 <= half_up)) {
        used[idx] = true;
        assigned[v] = label;
        bool stop = dfs(v + 1);
        used[idx] = false;
        if (stop) {
          e0 -= add0;
          e1 -= add1;
          return true;
        }
      }
      e0 -= add0;
      e1 -= add1;
    }
    return false;
  }
};

}  // namespace

SearchOutcome find_cordial_labeling(const Graph& g, const ArithmeticStructure& s,
                                    SearchOptions options) {
  if (g.order > options.limit)
    throw LimitExceeded("find_cordial_labeling: order " + std::to_string(g.order) +
                        " exceeds limit " + std::to_string(options.limit));
  if (s.label_set.size() != size_t(g.order))
    throw std::invalid_argument("search: label set size must equal graph order");
  Searcher sr(g, s, options.prune, /*count_mode=*/false);
  bool stopped = sr.dfs(0);
  SearchOutcome out;
  out.found = sr.first;
  out.nodes_explored = sr.nodes;
  out.exhausted = !stopped;
  return out;
}

SearchOutcome count_cordial_labelings(const Graph& g, const ArithmeticStructure& s,
                                      SearchOptions options) {
  if (g.order > 9)
    throw LimitExceeded("count_cordial_labelings: order " + std::to_string(g.order) +
                        " exceeds the counting limit 9");
  if (s.label_set.size() != size_t(g.order))
    throw std::invalid_argument("search: label set size must equal graph order");
  Searcher sr(g, s, options.prune, /*count_mode=*/true);
  sr.dfs(0);
  SearchOutcome out;
  out.count = sr.hits;
  out.nodes_explored = sr.nodes;
  out.exhausted = true;
  return out;
}

}  // namespace cordial
