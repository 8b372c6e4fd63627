#pragma once

#include <optional>
#include <stdexcept>

#include "cordial/labeling.hpp"

namespace cordial {

struct LimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchOptions {
  int limit = 12;     // maximum graph order accepted by find
  bool prune = true;  // abandon branches that can no longer balance
};

struct SearchOutcome {
  std::optional<Labeling> found;     // lexicographically smallest success
  std::optional<i64> count;          // counting mode only
  i64 nodes_explored = 0;
  bool exhausted = false;            // the full space was covered
};

// Depth-first search over bijections S -> V in vertex order, trying labels in
// ascending order; returns the lexicographically smallest cordial assignment
// vector, or exhausted with none. Throws LimitExceeded above options.limit.
SearchOutcome find_cordial_labeling(const Graph& g, const ArithmeticStructure& s,
                                    SearchOptions options = {});

// Exact count of cordial bijections; order must be <= 9.
SearchOutcome count_cordial_labelings(const Graph& g, const ArithmeticStructure& s,
                                      SearchOptions options = {});

}  // namespace cordial
