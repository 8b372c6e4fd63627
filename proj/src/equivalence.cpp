#include "cordial/equivalence.hpp"

#include <algorithm>
#include <set>

namespace cordial {

EquivalenceCheck verify_equivalence(const ArithmeticStructure& s1,
                                    const ArithmeticStructure& s2,
                                    const EquivalenceWitness& w) {
  if (s1.label_set.size() != s2.label_set.size())
    throw std::invalid_argument("verify_equivalence: label sets differ in size");
  if (w.psi.size() != s1.label_set.size())
    throw std::invalid_argument("verify_equivalence: psi domain does not match S1");
  std::set<i64> image;
  for (i64 a : s1.label_set) {
    auto it = w.psi.find(a);
    if (it == w.psi.end())
      throw std::invalid_argument("verify_equivalence: psi undefined at " + std::to_string(a));
    image.insert(it->second);
  }
  std::set<i64> target(s2.label_set.begin(), s2.label_set.end());
  if (image != target)
    throw std::invalid_argument("verify_equivalence: psi is not a bijection onto S2");

  for (size_t i = 0; i < s1.label_set.size(); ++i) {
    for (size_t j = i + 1; j < s1.label_set.size(); ++j) {
      i64 a = s1.label_set[i], b = s1.label_set[j];
      i64 lhs = star_apply(s1.star, a, b, s1.eta);
      i64 rhs = star_apply(s2.star, w.psi.at(a), w.psi.at(b), s2.eta);
      bool lhs_coprime = gcd(lhs, s1.eta) == 1;
      bool rhs_coprime = gcd(rhs, s2.eta) == 1;
      if (lhs_coprime != rhs_coprime)
        return {false, {{a, b}}, "coprimality differs on pair"};
      if (lhs_coprime && zeta_eval(s1, lhs) != zeta_eval(s2, rhs))
        return {false, {{a, b}}, "zeta values differ on pair"};
    }
  }
  return {true, std::nullopt, ""};
}

EquivalenceWitness build_psi(i64 eta, int m, int variant, const ArithmeticStructure& s1,
                             const ArithmeticStructure& s2) {
  if (eta < 3) throw std::invalid_argument("build_psi: eta must be >= 3");
  if (m < 1) throw std::invalid_argument("build_psi: m must be >= 1");
  if (variant != -1 && variant != 0)
    throw std::invalid_argument("build_psi: variant must be -1 or 0");
  if (s1.star.kind != StarOp::Kind::Product || s2.star.kind != StarOp::Kind::Product)
    throw std::invalid_argument("build_psi: both structures must use the product star");
  if (s1.eta != eta || s2.eta != eta)
    throw std::invalid_argument("build_psi: structures must share the modulus eta");

  i64 top = eta * m + variant;
  const ArithmeticStructure* structs[2] = {&s1, &s2};
  for (int idx = 0; idx < 2; ++idx) {
    const auto& s = *structs[idx];
    if (i64(s.label_set.size()) != top || s.label_set.front() != 1 || s.label_set.back() != top)
      throw std::invalid_argument("build_psi: label set must be {1.." + std::to_string(top) + "}");
    if (!check_prop_congruence(s)) throw PropertyViolation("congruence", idx + 1);
    if (!check_prop_balance(s)) throw PropertyViolation("balance", idx + 1);
    if (!check_prop_multiplicative(s)) throw PropertyViolation("multiplicative", idx + 1);
  }

  auto c1 = residue_classes(s1);
  auto c2 = residue_classes(s2);
  // The non-coprime residues below eta are shared; eta itself maps last.
  EquivalenceWitness w;
  for (int k = 0; k < m; ++k) {
    i64 shift = i64(k) * eta;
    for (size_t i = 0; i < c1.a0.size(); ++i) w.psi[c1.a0[i] + shift] = c2.a0[i] + shift;
    for (size_t i = 0; i < c1.a1.size(); ++i) w.psi[c1.a1[i] + shift] = c2.a1[i] + shift;
    for (size_t i = 0; i + 1 < c1.nc.size(); ++i) w.psi[c1.nc[i] + shift] = c2.nc[i] + shift;
    i64 multiple = eta + shift;  // eta + (k-1)eta in 1-based block terms
    if (multiple <= top) w.psi[multiple] = multiple;
  }
  return w;
}

Labeling transfer(const Labeling& f, const EquivalenceWitness& w) {
  Labeling g;
  g.values.reserve(f.values.size());
  for (i64 v : f.values) {
    auto it = w.psi.find(v);
    if (it == w.psi.end())
      throw std::invalid_argument("transfer: label " + std::to_string(v) +
                                  " is outside psi's domain");
    g.values.push_back(it->second);
  }
  return g;
}

EquivalenceWitness inverse(const EquivalenceWitness& w) {
  EquivalenceWitness out;
  for (auto [a, b] : w.psi) {
    if (!out.psi.emplace(b, a).second)
      throw std::invalid_argument("inverse: psi is not injective");
  }
  return out;
}

}  // namespace cordial
