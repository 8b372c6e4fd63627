#include "cordial/numtheory.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cordial {

i64 gcd(i64 x, i64 y) {
  x = x < 0 ? -x : x;
  y = y < 0 ? -y : y;
  while (y != 0) {
    i64 t = x % y;
    x = y;
    y = t;
  }
  return x;
}

i64 mod_reduce(i64 x, i64 m) {
  if (m < 1) throw std::invalid_argument("mod_reduce: modulus must be >= 1");
  i64 r = x % m;
  return r < 0 ? r + m : r;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (i64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1");
  std::vector<std::pair<i64, int>> out;
  for (i64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

i64 euler_phi(i64 n) {
  if (n < 1) throw std::invalid_argument("euler_phi: argument must be >= 1");
  i64 phi = n;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    phi -= phi / p;
  }
  return phi;
}

i64 pow_mod(i64 base, i64 exp, i64 m) {
  if (m < 1) throw std::invalid_argument("pow_mod: modulus must be >= 1");
  if (exp < 0) throw std::invalid_argument("pow_mod: exponent must be >= 0");
  i64 b = mod_reduce(base, m);
  i64 r = 1 % m;
  while (exp > 0) {
    if (exp & 1) r = i64((__int128)r * b % m);
    b = i64((__int128)b * b % m);
    exp >>= 1;
  }
  return r;
}

int legendre_symbol(i64 a, i64 p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::invalid_argument("legendre_symbol: modulus must be an odd prime");
  i64 r = mod_reduce(a, p);
  if (r == 0) return 0;
  i64 e = pow_mod(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

int jacobi_symbol(i64 a, i64 n) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("jacobi_symbol: modulus must be odd and >= 1");
  if (n == 1) return 1;
  int result = 1;
  for (auto [p, e] : factorize(n)) {
    int s = legendre_symbol(a, p);
    if (s == 0) return 0;
    if (e % 2 == 1 && s == -1) result = -result;
  }
  return result;
}

namespace {

// Multiplicative order of g equals phi iff g^(phi/q) != 1 for every prime q | phi.
bool is_primitive_root(i64 g, i64 eta, i64 phi) {
  if (gcd(g, eta) != 1) return false;
  for (auto [q, e] : factorize(phi)) {
    (void)e;
    if (pow_mod(g, phi / q, eta) == 1) return false;
  }
  return true;
}

}  // namespace

std::optional<i64> primitive_root(i64 eta) {
  if (eta < 2) throw std::invalid_argument("primitive_root: modulus must be >= 2");
  i64 phi = euler_phi(eta);
  for (i64 g = 1; g < eta; ++g)
    if (is_primitive_root(g, eta, phi)) return g;
  return std::nullopt;
}

i64 discrete_log(i64 a, i64 root, i64 eta) {
  if (eta < 2) throw std::invalid_argument("discrete_log: modulus must be >= 2");
  i64 r = mod_reduce(a, eta);
  if (gcd(r, eta) != 1)
    throw std::invalid_argument("discrete_log: argument not coprime to modulus");
  i64 phi = euler_phi(eta);
  if (!is_primitive_root(mod_reduce(root, eta), eta, phi))
    throw std::invalid_argument("discrete_log: base is not a primitive root");
  i64 pw = 1 % eta;
  for (i64 k = 0; k < phi; ++k) {
    if (pw == r) return k;
    pw = i64((__int128)pw * mod_reduce(root, eta) % eta);
  }
  throw std::logic_error("discrete_log: exhausted group without a match");
}

i64 fib_ab(i64 i, FibParams params, i64 eta) {
  if (i < 0) throw std::invalid_argument("fib_ab: index must be >= 0");
  if (eta < 1) throw std::invalid_argument("fib_ab: modulus must be >= 1");
  i64 a = mod_reduce(params.a, eta);
  i64 b = mod_reduce(params.b, eta);
  i64 prev = 0, cur = 1 % eta;
  if (i == 0) return 0;
  for (i64 k = 2; k <= i; ++k) {
    i64 next = i64(((__int128)a * cur + (__int128)b * prev) % eta);
    prev = cur;
    cur = next;
  }
  return cur;
}

int euler_quotient_parity(i64 a, i64 eta) {
  if (eta < 3 || eta % 2 == 0)
    throw std::invalid_argument("euler_quotient_parity: modulus must be odd and >= 3");
  i64 r = mod_reduce(a, eta);
  if (gcd(r, eta) != 1)
    throw std::invalid_argument("euler_quotient_parity: argument not coprime to modulus");
  i64 phi = euler_phi(eta);

  // Exact r^phi over 32-bit limbs, little-endian.
  std::vector<std::uint64_t> limbs{1};
  for (i64 e = 0; e < phi; ++e) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs) {
      std::uint64_t v = limb * std::uint64_t(r) + carry;
      limb = v & 0xffffffffULL;
      carry = v >> 32;
    }
    while (carry) {
      limbs.push_back(carry & 0xffffffffULL);
      carry >>= 32;
    }
  }
  // Subtract 1; r^phi >= 1 so no global borrow.
  for (auto& limb : limbs) {
    if (limb > 0) {
      --limb;
      break;
    }
    limb = 0xffffffffULL;
  }
  // Divide by eta most-significant-first; Euler's theorem makes this exact.
  std::uint64_t rem = 0;
  std::vector<std::uint64_t> quot(limbs.size(), 0);
  for (size_t idx = limbs.size(); idx-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs[idx];
    quot[idx] = cur / std::uint64_t(eta);
    rem = cur % std::uint64_t(eta);
  }
  if (rem != 0)
    throw std::logic_error("euler_quotient_parity: quotient was not exact");
  return int(quot[0] & 1);
}

}  // namespace cordial
