#pragma once

#include <optional>
#include <string>
#include <variant>

#include "cordial/labeling.hpp"

namespace cordial {

// Output of a constructive labeler: the graph, the structure the construction
// prescribes, the labeling, and the edge-count prediction it guarantees.
struct ConstructionResult {
  Graph graph;
  ArithmeticStructure structure;
  Labeling labeling;
  std::optional<std::pair<i64, i64>> predicted;  // (e0, e1)
  std::string provenance;
};

// Star with m*phi(eta)+1 vertices under the Jacobi zeta and sum star: the
// center gets c*eta, the leaves get the coprime residues of m blocks.
// Requires eta odd, not a perfect square, m >= 1, c >= 1.
ConstructionResult label_star_jacobi(i64 eta, int m, int c);

// Certificate that the edge star-values form a disjoint union of full
// coprime-residue blocks {j + i*eta : gcd(j, eta) = 1, 0 < j < eta}, i in T.
// Such a labeling yields e0 = e1 = |T| * phi(eta) / 2 under any zeta that is
// residue-invariant and balanced.
struct SufficientCertificate {
  std::vector<i64> block_indices;  // T, ascending
};
struct SufficientFail {
  int condition;  // 1 = not a block union (or wrong edge count), 2 = collision
  std::string detail;
};
using SufficientResult = std::variant<SufficientCertificate, SufficientFail>;

SufficientResult check_sufficient_condition(const Graph& g, const Labeling& f, i64 eta,
                                            const StarOp& star);

// Ladder on 2p vertices, sum star, S = {1..2p}; default zeta is Legendre.
// Yields e0 = 3(p-1)/2 + 1 and e1 = e0 - 1.
ConstructionResult label_ladder(i64 p, std::optional<ZetaSpec> zeta = {});

// Chain of n cycles C_p, sum star, S = {1..np}; requires zeta(1) = 1.
// Yields e0 = n(p-1)/2 + n and e1 = e0 - 1.
ConstructionResult label_snake(int n, i64 p, std::optional<ZetaSpec> zeta = {});

// corona(G, path(p-1)) for connected G of order n and size n + eps,
// eps in {-1, 0, 1}; sum star, S = {1..np}. The labeling is cordial exactly
// when zeta(1) = 1 and zeta(2) = 0 (for Legendre: p = +-3 mod 8), giving
// e0 = n(p-1) and e1 = n(p-1) + eps. Pass enforce_hypothesis = false to build
// the labeling anyway, e.g. for negative controls.
ConstructionResult label_corona_path(const Graph& g, i64 p,
                                     std::optional<ZetaSpec> zeta = {},
                                     bool enforce_hypothesis = true);

// tensor(complete(p), G) for connected bipartite G; sum star, S = {1..np}.
// Yields e0 = e1 = size(G) * p(p-1)/2.
ConstructionResult label_tensor_complete(const Graph& g, i64 p,
                                         std::optional<ZetaSpec> zeta = {});

// join(empty(p), kayak_paddle((p-1)/2, 0, (p-1)/2)) under the Legendre
// product structure, S = {1..2p-1}; requires p >= 7.
// Yields e0 = 1 + (p-1)(p+1)/2 and e1 = (p-1)(p+1)/2.
ConstructionResult label_join_kayak(i64 p);

// Balance equation for joins of two graphs of order (p-1)/2 labeled
// bijectively with {1..p-1} under the product star:
//   |O1+| + |O2+| = |O1-| + |O2-| + (2|B| - (p-1)/2)^2 + epsilon
// where Oi^j collects edges of Gi whose endpoint-label product has chi = j
// and B the G1 vertices with chi = 1. When the equation holds for an epsilon
// in {-1, 0, 1}, verify on join(G1, G2) reports e0 - e1 = -epsilon.
struct JoinConditionReport {
  i64 omega1_pos = 0, omega1_neg = 0;
  i64 omega2_pos = 0, omega2_neg = 0;
  i64 b_size = 0;
  std::optional<int> epsilon;  // set iff the equation balances
  std::optional<i64> predicted_imbalance() const {
    if (!epsilon) return std::nullopt;
    return -*epsilon;  // e0 - e1
  }
};

JoinConditionReport check_join_condition(const Graph& g1, const Graph& g2, const Labeling& f,
                                         i64 p);

// join(path((p-1)/2), cycle((p-1)/2)) for (p-1)/2 = 0 mod 4, p >= 17, under
// the Legendre product structure; certified with epsilon = 1.
ConstructionResult label_join_path_cycle(i64 p);

// corona(G, K1) for connected G of order (p-1)/2 and size (p-1)/2 + eps;
// Legendre product structure, S = {1..p-1}. Yields e0 = (p-1)/2 and
// e1 = (p-1)/2 + eps.
ConstructionResult label_corona_k1(const Graph& g, i64 p);

// corona(G, H) for connected G of order p-1 and size m(p-1) + eps and H of
// order p-1 and size p-1+m; Legendre product structure, S = {1..p(p-1)}.
// Yields e0 = m(p-1) + eps + (p-1)^2 and e1 = (p-1)(p-1+m).
ConstructionResult label_corona_gh(const Graph& g, const Graph& h, i64 p, int m);

}  // namespace cordial
