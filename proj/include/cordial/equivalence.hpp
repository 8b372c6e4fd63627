#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "cordial/labeling.hpp"

namespace cordial {

// Bijection psi : S1 -> S2 certifying that two arithmetic structures induce
// the same edge labels.
struct EquivalenceWitness {
  std::map<i64, i64> psi;
};

// Thrown by build_psi when a structure fails one of the three property
// checks its construction depends on.
struct PropertyViolation : std::invalid_argument {
  std::string property;  // "congruence" | "balance" | "multiplicative"
  int structure_index;   // 1 or 2

  PropertyViolation(std::string prop, int index)
      : std::invalid_argument("build_psi: structure " + std::to_string(index) +
                              " fails the " + prop + " property"),
        property(std::move(prop)),
        structure_index(index) {}
};

struct EquivalenceCheck {
  bool pass = false;
  std::optional<std::pair<i64, i64>> counterexample;  // first violating pair
  std::string detail;
};

// Exhaustively checks, over all unordered pairs a != b of S1, that psi
// preserves coprimality of a*1 b and the zeta value whenever coprime.
// Throws when psi is not a bijection S1 -> S2.
EquivalenceCheck verify_equivalence(const ArithmeticStructure& s1,
                                    const ArithmeticStructure& s2,
                                    const EquivalenceWitness& w);

// Constructive witness for two product structures over S = {1..eta*m+variant}
// (variant -1 or 0): pairs the ascending enumerations of the zeta classes
// block by block and fixes the non-coprime residues and multiples of eta.
// Requires both structures to pass the congruence, balance and
// multiplicativity checks; throws PropertyViolation otherwise.
EquivalenceWitness build_psi(i64 eta, int m, int variant, const ArithmeticStructure& s1,
                             const ArithmeticStructure& s2);

// g = psi of f; rejects labels outside psi's domain.
Labeling transfer(const Labeling& f, const EquivalenceWitness& w);

EquivalenceWitness inverse(const EquivalenceWitness& w);

}  // namespace cordial
