#include "cordial/structures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cordial {

namespace {

void validate_zeta(i64 eta, ZetaSpec& z) {
  using Kind = ZetaSpec::Kind;
  switch (z.kind) {
    case Kind::LegendreChi:
    case Kind::NegatedLegendreChi:
      if (eta % 2 == 0 || !is_prime(eta))
        throw std::invalid_argument("zeta: legendre requires an odd prime modulus");
      break;
    case Kind::JacobiChi:
      if (eta < 3 || eta % 2 == 0)
        throw std::invalid_argument("zeta: jacobi requires an odd modulus >= 3");
      break;
    case Kind::JacobiFactor:
      if (z.factor < 1 || z.factor % 2 == 0)
        throw std::invalid_argument("zeta: jacobi-factor requires an odd factor >= 1");
      if (eta % z.factor != 0)
        throw std::invalid_argument("zeta: jacobi-factor must divide the modulus");
      break;
    case Kind::IndexParity:
    case Kind::IndexChi: {
      auto smallest = primitive_root(eta);
      if (!smallest)
        throw std::invalid_argument("zeta: modulus has no primitive root");
      if (z.root == 0) {
        z.root = *smallest;
      } else {
        i64 phi = euler_phi(eta);
        bool primitive = gcd(z.root, eta) == 1;
        for (auto [q, e] : factorize(phi)) {
          (void)e;
          if (!primitive || pow_mod(z.root, phi / q, eta) == 1) primitive = false;
        }
        if (!primitive)
          throw std::invalid_argument("zeta: base is not a primitive root");
      }
      break;
    }
    case Kind::EulerQuotientParity:
      if (eta < 3 || eta % 2 == 0)
        throw std::invalid_argument("zeta: euler requires an odd modulus >= 3");
      break;
    case Kind::Table: {
      for (i64 r = 1; r < eta; ++r) {
        if (gcd(r, eta) != 1) continue;
        auto it = z.table.find(r);
        if (it == z.table.end())
          throw std::invalid_argument("zeta: table missing coprime residue " + std::to_string(r));
        if (it->second != 0 && it->second != 1)
          throw std::invalid_argument("zeta: table values must be 0 or 1");
      }
      for (auto& [r, v] : z.table) {
        (void)v;
        if (r < 1 || r >= eta || gcd(r, eta) != 1)
          throw std::invalid_argument("zeta: table key " + std::to_string(r) +
                                      " is not a coprime residue");
      }
      break;
    }
  }
}

// Evaluate the defining formula at an arbitrary integer. Character kinds are
// evaluated at the raw argument; index, Euler and table kinds are modular by
// definition and reduce first.
int zeta_formula(const ZetaSpec& z, i64 eta, i64 x) {
  using Kind = ZetaSpec::Kind;
  switch (z.kind) {
    case Kind::LegendreChi:
      return (1 + legendre_symbol(x, eta)) / 2;
    case Kind::NegatedLegendreChi:
      return (1 - legendre_symbol(x, eta)) / 2;
    case Kind::JacobiChi:
      return (1 + jacobi_symbol(x, eta)) / 2;
    case Kind::JacobiFactor:
      return (1 + jacobi_symbol(x, z.factor)) / 2;
    case Kind::IndexParity:
      return int(discrete_log(mod_reduce(x, eta), z.root, eta) % 2);
    case Kind::IndexChi:
      return 1 - int(discrete_log(mod_reduce(x, eta), z.root, eta) % 2);
    case Kind::EulerQuotientParity:
      return euler_quotient_parity(mod_reduce(x, eta), eta);
    case Kind::Table:
      return z.table.at(mod_reduce(x, eta));
  }
  throw std::logic_error("zeta_formula: unknown kind");
}

std::map<i64, int> load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("zeta: cannot open table file " + path);
  nlohmann::json j;
  in >> j;
  const nlohmann::json& t = j.contains("table") ? j.at("table") : j;
  std::map<i64, int> table;
  for (auto it = t.begin(); it != t.end(); ++it)
    table[std::stoll(it.key())] = it.value().get<int>();
  return table;
}

}  // namespace

ArithmeticStructure make_structure(i64 eta, ZetaSpec zeta, StarOp star,
                                   std::vector<i64> labels) {
  if (eta < 2) throw std::invalid_argument("structure: modulus must be >= 2");
  validate_zeta(eta, zeta);
  ArithmeticStructure s;
  s.eta = eta;
  s.star = star;
  s.zeta = std::move(zeta);
  return with_labels(std::move(s), std::move(labels));
}

ArithmeticStructure with_labels(ArithmeticStructure s, std::vector<i64> labels) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw std::invalid_argument("structure: label set has duplicates");
  s.label_set = std::move(labels);
  return s;
}

i64 star_apply(const StarOp& star, i64 x, i64 y, i64 eta) {
  switch (star.kind) {
    case StarOp::Kind::Sum:
      return x + y;
    case StarOp::Kind::Product:
      return x * y;
    case StarOp::Kind::FibSum: {
      if (x < 0 || y < 0)
        throw std::invalid_argument("star: fibsum labels must be nonnegative");
      return mod_reduce(fib_ab(x, star.fib, eta) + fib_ab(y, star.fib, eta), eta);
    }
  }
  throw std::logic_error("star_apply: unknown kind");
}

std::optional<int> zeta_eval(const ArithmeticStructure& s, i64 x) {
  i64 r = mod_reduce(x, s.eta);
  if (gcd(r, s.eta) != 1) return std::nullopt;
  return zeta_formula(s.zeta, s.eta, r);
}

int chi_eval(const ArithmeticStructure& s, i64 x) {
  auto z = zeta_eval(s, x);
  if (!z) throw std::invalid_argument("chi_eval: argument not coprime to modulus");
  return 2 * *z - 1;
}

ResidueClasses residue_classes(const ArithmeticStructure& s) {
  ResidueClasses c;
  for (i64 a = 1; a <= s.eta; ++a) {
    if (gcd(a, s.eta) != 1) {
      c.nc.push_back(a);
    } else if (zeta_formula(s.zeta, s.eta, a) == 0) {
      c.a0.push_back(a);
    } else {
      c.a1.push_back(a);
    }
  }
  return c;
}

bool check_congruence_of(i64 eta, const std::function<std::optional<int>(i64)>& zeta_at,
                         int window) {
  for (i64 r = 1; r < eta; ++r) {
    if (gcd(r, eta) != 1) continue;
    auto base = zeta_at(r);
    if (!base) return false;
    for (int k = -window; k <= window; ++k) {
      if (k == 0) continue;
      if (zeta_at(r + k * eta) != base) return false;
    }
  }
  return true;
}

bool check_prop_congruence(const ArithmeticStructure& s, int window) {
  return check_congruence_of(
      s.eta, [&](i64 x) -> std::optional<int> { return zeta_formula(s.zeta, s.eta, x); },
      window);
}

bool check_prop_balance(const ArithmeticStructure& s) {
  auto c = residue_classes(s);
  return c.a0.size() == c.a1.size();
}

bool check_prop_multiplicative(const ArithmeticStructure& s) {
  std::vector<i64> coprime;
  for (i64 a = 1; a < s.eta; ++a)
    if (gcd(a, s.eta) == 1) coprime.push_back(a);
  for (i64 a : coprime)
    for (i64 b : coprime)
      if (chi_eval(s, a * b) != chi_eval(s, a) * chi_eval(s, b)) return false;
  return true;
}

ZetaSpec parse_zeta_spec(const std::string& text) {
  std::string name = text, params;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    name = text.substr(0, colon);
    params = text.substr(colon + 1);
  }
  if (name == "legendre") return ZetaSpec::legendre();
  if (name == "negated-legendre") return ZetaSpec::negated_legendre();
  if (name == "jacobi") return ZetaSpec::jacobi();
  if (name == "euler") return ZetaSpec::euler();
  if (name == "jacobi-factor") {
    if (params.empty()) throw std::invalid_argument("zeta: jacobi-factor needs a divisor");
    return ZetaSpec::jacobi_factor(std::stoll(params));
  }
  if (name == "index-parity" || name == "index-chi") {
    i64 w = 0;
    if (!params.empty()) {
      if (params.rfind("w=", 0) != 0)
        throw std::invalid_argument("zeta: expected w=<root> after " + name);
      w = std::stoll(params.substr(2));
    }
    return name == "index-parity" ? ZetaSpec::index_parity(w) : ZetaSpec::index_chi(w);
  }
  if (name == "table") {
    if (params.empty()) throw std::invalid_argument("zeta: table needs a file path");
    return ZetaSpec::from_table(load_table_file(params), params);
  }
  throw std::invalid_argument("zeta: unknown kind '" + name + "'");
}

StarOp parse_star_op(const std::string& text) {
  if (text == "sum") return StarOp::sum();
  if (text == "product") return StarOp::product();
  if (text.rfind("fibsum(", 0) == 0 && text.back() == ')') {
    std::string inner = text.substr(7, text.size() - 8);
    auto comma = inner.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("star: fibsum needs two parameters");
    FibParams p{std::stoll(inner.substr(0, comma)), std::stoll(inner.substr(comma + 1))};
    return StarOp::fib_sum(p);
  }
  throw std::invalid_argument("star: unknown operation '" + text + "'");
}

ArithmeticStructure parse_structure(const std::string& text) {
  auto at = text.find('@');
  if (at == std::string::npos)
    throw std::invalid_argument("structure: expected '<zeta>@<eta>:<star>'");
  std::string zeta_part = text.substr(0, at);
  std::string rest = text.substr(at + 1);
  auto colon = rest.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("structure: expected ':<star>' after the modulus");
  i64 eta = 0;
  try {
    eta = std::stoll(rest.substr(0, colon));
  } catch (const std::exception&) {
    throw std::invalid_argument("structure: bad modulus '" + rest.substr(0, colon) + "'");
  }
  return make_structure(eta, parse_zeta_spec(zeta_part), parse_star_op(rest.substr(colon + 1)));
}

std::string to_string(const ZetaSpec& z) {
  using Kind = ZetaSpec::Kind;
  switch (z.kind) {
    case Kind::LegendreChi:
      return "legendre";
    case Kind::NegatedLegendreChi:
      return "negated-legendre";
    case Kind::JacobiChi:
      return "jacobi";
    case Kind::JacobiFactor:
      return "jacobi-factor:" + std::to_string(z.factor);
    case Kind::IndexParity:
      return "index-parity:w=" + std::to_string(z.root);
    case Kind::IndexChi:
      return "index-chi:w=" + std::to_string(z.root);
    case Kind::EulerQuotientParity:
      return "euler";
    case Kind::Table:
      return "table:" + (z.table_source.empty() ? std::string("<inline>") : z.table_source);
  }
  return "?";
}

std::string to_string(const StarOp& s) {
  switch (s.kind) {
    case StarOp::Kind::Sum:
      return "sum";
    case StarOp::Kind::Product:
      return "product";
    case StarOp::Kind::FibSum:
      return "fibsum(" + std::to_string(s.fib.a) + "," + std::to_string(s.fib.b) + ")";
  }
  return "?";
}

std::string to_string(const ArithmeticStructure& s) {
  return to_string(s.zeta) + "@" + std::to_string(s.eta) + ":" + to_string(s.star);
}

}  // namespace cordial
