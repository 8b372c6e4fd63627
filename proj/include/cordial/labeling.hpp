#pragma once

#include <utility>
#include <vector>

#include "cordial/graph.hpp"
#include "cordial/structures.hpp"

namespace cordial {

// Vertex labeling: values[v] is the label of vertex v. Must be a bijection
// onto the structure's label set when verified.
struct Labeling {
  std::vector<i64> values;
};

enum class EdgeReason { ZetaZero, NotCoprime, ZetaOne };

const char* to_string(EdgeReason r);

struct EdgeDetail {
  int u = 0, v = 0;
  i64 star_value = 0;  // f(u) star f(v)
  i64 residue = 0;     // star value reduced into [0, eta-1]
  int label = 0;
  EdgeReason reason = EdgeReason::ZetaZero;
};

struct EdgeLabelReport {
  std::vector<EdgeDetail> per_edge;  // lexicographic edge order
  i64 e0 = 0, e1 = 0;
  bool cordial = false;
};

// Induced label of an edge whose endpoints carry labels x and y.
std::pair<int, EdgeReason> induced_edge_label(const ArithmeticStructure& s, i64 x, i64 y);

// Full per-edge report. Throws on a size mismatch between labeling, graph
// order and label set, or when the labeling is not bijective onto S.
EdgeLabelReport verify(const Graph& g, const Labeling& f, const ArithmeticStructure& s);

bool is_cordial(const EdgeLabelReport& r);

}  // namespace cordial
