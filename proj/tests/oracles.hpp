#pragma once

// Independent brute-force oracles for the test suites. These deliberately
// avoid the library's computation paths: quadratic residues come from a
// squares table, phi from a gcd count, edge counts from a direct loop.

#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cordial/graph.hpp"
#include "cordial/labeling.hpp"

namespace oracle {

using cordial::i64;

inline i64 gcd(i64 a, i64 b) { return std::gcd(std::llabs(a), std::llabs(b)); }

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d < n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline i64 phi(i64 n) {
  i64 count = 0;
  for (i64 a = 1; a <= n; ++a)
    if (gcd(a, n) == 1) ++count;
  return count;
}

// Quadratic residue test by enumerating squares.
inline bool is_qr(i64 a, i64 p) {
  a %= p;
  if (a < 0) a += p;
  for (i64 x = 1; x < p; ++x)
    if (x * x % p == a) return true;
  return false;
}

inline int legendre(i64 a, i64 p) {
  i64 r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  return is_qr(r, p) ? 1 : -1;
}

inline int jacobi(i64 a, i64 n) {
  int result = 1;
  for (i64 d = 3; n > 1; d += 2) {
    while (n % d == 0) {
      n /= d;
      result *= legendre(a, d);
    }
  }
  return result;
}

// Multiplicative order of a mod n, or 0 when not coprime.
inline i64 order(i64 a, i64 n) {
  if (gcd(a, n) != 1) return 0;
  i64 v = a % n;
  if (v < 0) v += n;
  i64 pw = v, k = 1;
  while (pw != 1) {
    pw = pw * v % n;
    ++k;
  }
  return k;
}

// Edge label counts computed directly from a zeta callback; the callback
// gets the star value and returns 0/1 (not-coprime handled here).
inline std::pair<i64, i64> edge_counts(const cordial::Graph& g,
                                       const std::vector<i64>& labels, i64 eta,
                                       const std::function<i64(i64, i64)>& star,
                                       const std::function<int(i64)>& zeta) {
  i64 e0 = 0, e1 = 0;
  for (auto [u, v] : g.edges) {
    i64 s = star(labels[u], labels[v]);
    if (gcd(s, eta) != 1 || zeta(s) == 0)
      ++e0;
    else
      ++e1;
  }
  return {e0, e1};
}

}  // namespace oracle
