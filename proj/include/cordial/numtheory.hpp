#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cordial {

using i64 = std::int64_t;

// Greatest common divisor of |x| and |y|; gcd(0, 0) = 0.
i64 gcd(i64 x, i64 y);

// Canonical residue of x in [0, m-1]; requires m >= 1.
i64 mod_reduce(i64 x, i64 m);

bool is_prime(i64 n);

// Prime factorization of n >= 1 as (prime, exponent) pairs, ascending.
std::vector<std::pair<i64, int>> factorize(i64 n);

// Euler phi: count of integers in [1, n] coprime to n; requires n >= 1.
i64 euler_phi(i64 n);

// base^exp mod m for exp >= 0, m >= 1.
i64 pow_mod(i64 base, i64 exp, i64 m);

// Legendre symbol (a/p), computed by Euler's criterion; p must be an odd prime.
int legendre_symbol(i64 a, i64 p);

// Jacobi symbol (a/n) as the product of Legendre symbols over the prime
// factorization of n; n must be odd and >= 1. Zero iff gcd(a, n) != 1.
int jacobi_symbol(i64 a, i64 n);

// Smallest positive primitive root of eta >= 2, or nullopt when the
// multiplicative group mod eta is not cyclic.
std::optional<i64> primitive_root(i64 eta);

// The unique k in [0, phi(eta)-1] with root^k = a (mod eta). Requires
// gcd(a, eta) = 1 and root a primitive root of eta.
i64 discrete_log(i64 a, i64 root, i64 eta);

struct FibParams {
  i64 a = 1;
  i64 b = 1;
};

// i-th (a,b)-Fibonacci number mod eta, with F0 = 0, F1 = 1 and
// Fi = a*F(i-1) + b*F(i-2). Requires i >= 0, eta >= 1.
i64 fib_ab(i64 i, FibParams params, i64 eta);

// Parity of the exact integer quotient (a^phi(eta) - 1) / eta, evaluated on
// the canonical representative of a in [1, eta-1]. Requires eta odd >= 3 and
// gcd(a, eta) = 1.
int euler_quotient_parity(i64 a, i64 eta);

}  // namespace cordial
