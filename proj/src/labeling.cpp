#include "cordial/labeling.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace cordial {

const char* to_string(EdgeReason r) {
  switch (r) {
    case EdgeReason::ZetaZero:
      return "ZetaZero";
    case EdgeReason::NotCoprime:
      return "NotCoprime";
    case EdgeReason::ZetaOne:
      return "ZetaOne";
  }
  return "?";
}

std::pair<int, EdgeReason> induced_edge_label(const ArithmeticStructure& s, i64 x, i64 y) {
  i64 star = star_apply(s.star, x, y, s.eta);
  auto z = zeta_eval(s, star);
  if (!z) return {0, EdgeReason::NotCoprime};
  return {*z, *z == 1 ? EdgeReason::ZetaOne : EdgeReason::ZetaZero};
}

EdgeLabelReport verify(const Graph& g, const Labeling& f, const ArithmeticStructure& s) {
  if (int(f.values.size()) != g.order)
    throw std::invalid_argument("verify: size mismatch between labeling and graph order");
  if (s.label_set.size() != size_t(g.order))
    throw std::invalid_argument("verify: size mismatch between label set and graph order");
  std::vector<i64> sorted = f.values;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != s.label_set)
    throw std::invalid_argument("verify: labeling is not bijective onto the label set");

  EdgeLabelReport report;
  report.per_edge.reserve(g.edges.size());
  for (auto [u, v] : g.edges) {
    EdgeDetail d;
    d.u = u;
    d.v = v;
    d.star_value = star_apply(s.star, f.values[u], f.values[v], s.eta);
    d.residue = mod_reduce(d.star_value, s.eta);
    auto [label, reason] = induced_edge_label(s, f.values[u], f.values[v]);
    d.label = label;
    d.reason = reason;
    (label == 0 ? report.e0 : report.e1)++;
    report.per_edge.push_back(d);
  }
  report.cordial = std::llabs(report.e0 - report.e1) <= 1;
  return report;
}

bool is_cordial(const EdgeLabelReport& r) { return std::llabs(r.e0 - r.e1) <= 1; }

}  // namespace cordial
