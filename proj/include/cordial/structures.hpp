#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cordial/numtheory.hpp"

namespace cordial {

// Binary combiner applied to a pair of vertex labels.
struct StarOp {
  enum class Kind { Sum, Product, FibSum };
  Kind kind = Kind::Sum;
  FibParams fib{};

  static StarOp sum() { return {Kind::Sum, {}}; }
  static StarOp product() { return {Kind::Product, {}}; }
  static StarOp fib_sum(FibParams p) { return {Kind::FibSum, p}; }
};

// The zeta function: a map from integers coprime to eta into {0, 1}.
//
//   LegendreChi          (1 + (a/eta)) / 2, eta an odd prime
//   NegatedLegendreChi   (1 - (a/eta)) / 2, eta an odd prime
//   JacobiChi            (1 + (a/eta)) / 2 with the Jacobi symbol, eta odd
//   JacobiFactor         (1 + (a/d)) / 2 for a fixed odd divisor d of eta
//   IndexParity          ind(a) mod 2 for a fixed primitive root
//   IndexChi             (1 + (-1)^ind(a)) / 2 for a fixed primitive root
//   EulerQuotientParity  parity of (a^phi(eta) - 1) / eta on the canonical
//                        representative of a in [1, eta-1]
//   Table                explicit map on the coprime residues of [1, eta-1]
struct ZetaSpec {
  enum class Kind {
    LegendreChi,
    NegatedLegendreChi,
    JacobiChi,
    JacobiFactor,
    IndexParity,
    IndexChi,
    EulerQuotientParity,
    Table,
  };
  Kind kind = Kind::LegendreChi;
  i64 factor = 0;            // JacobiFactor: the divisor d
  i64 root = 0;              // IndexParity / IndexChi: primitive root (0 = smallest)
  std::map<i64, int> table;  // Table: residue -> {0, 1}
  std::string table_source;  // Table: where it was loaded from, for printing

  static ZetaSpec legendre() { return {Kind::LegendreChi, 0, 0, {}, {}}; }
  static ZetaSpec negated_legendre() { return {Kind::NegatedLegendreChi, 0, 0, {}, {}}; }
  static ZetaSpec jacobi() { return {Kind::JacobiChi, 0, 0, {}, {}}; }
  static ZetaSpec jacobi_factor(i64 d) { return {Kind::JacobiFactor, d, 0, {}, {}}; }
  static ZetaSpec index_parity(i64 w = 0) { return {Kind::IndexParity, 0, w, {}, {}}; }
  static ZetaSpec index_chi(i64 w = 0) { return {Kind::IndexChi, 0, w, {}, {}}; }
  static ZetaSpec euler() { return {Kind::EulerQuotientParity, 0, 0, {}, {}}; }
  static ZetaSpec from_table(std::map<i64, int> t, std::string source = {}) {
    return {Kind::Table, 0, 0, std::move(t), std::move(source)};
  }
};

// The labeling rulebook <S, zeta_eta, star>.
struct ArithmeticStructure {
  i64 eta = 0;
  std::vector<i64> label_set;  // S, ascending; may be empty until bound
  StarOp star{};
  ZetaSpec zeta{};
};

// Validates the zeta spec against eta (primality, primitive roots, table
// totality) and returns the assembled structure. Throws std::invalid_argument
// on configuration errors.
ArithmeticStructure make_structure(i64 eta, ZetaSpec zeta, StarOp star,
                                   std::vector<i64> labels = {});

// Same structure with S replaced (sorted, duplicates rejected).
ArithmeticStructure with_labels(ArithmeticStructure s, std::vector<i64> labels);

// x star y. FibSum combines F_x + F_y modulo eta and requires x, y >= 0.
i64 star_apply(const StarOp& star, i64 x, i64 y, i64 eta);

// zeta_eta(x) in {0, 1}, or nullopt when gcd(x, eta) != 1. The argument is
// reduced to its canonical residue before evaluation.
std::optional<int> zeta_eval(const ArithmeticStructure& s, i64 x);

// chi = 2*zeta - 1 in {-1, 1}; throws when x is not coprime to eta.
int chi_eval(const ArithmeticStructure& s, i64 x);

// Classification of [1, eta]: a0/a1 are the coprime residues with zeta value
// 0/1, nc the residues sharing a factor with eta (eta itself last).
struct ResidueClasses {
  std::vector<i64> a0, a1, nc;
};
ResidueClasses residue_classes(const ArithmeticStructure& s);

// zeta depends only on the residue class of its argument: compares each
// zeta kind's own formula at r and r + k*eta over a window of offsets.
bool check_prop_congruence(const ArithmeticStructure& s, int window = 8);

// Same check against a caller-supplied evaluation at raw integers; used to
// exercise deliberately non-invariant evaluations.
bool check_congruence_of(i64 eta, const std::function<std::optional<int>(i64)>& zeta_at,
                         int window = 8);

// |A0| == |A1| == phi(eta) / 2.
bool check_prop_balance(const ArithmeticStructure& s);

// chi(a*b) == chi(a) * chi(b) over all coprime residue pairs, exhaustively.
bool check_prop_multiplicative(const ArithmeticStructure& s);

// Structure spec strings: "<zeta>[:<params>]@<eta>:<star>", e.g.
// "legendre@7:sum", "jacobi-factor:3@15:product", "index-parity:w=3@7:sum",
// "table:classes.json@9:sum", "legendre@5:fibsum(1,1)".
ArithmeticStructure parse_structure(const std::string& text);
ZetaSpec parse_zeta_spec(const std::string& text);
StarOp parse_star_op(const std::string& text);
std::string to_string(const ZetaSpec& z);
std::string to_string(const StarOp& s);
std::string to_string(const ArithmeticStructure& s);  // without the label set

}  // namespace cordial
