#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace circis {

using i64 = long long;

// least nonnegative residue, works for negative x too
inline i64 mod_norm(i64 x, i64 m) {
  i64 r = x % m;
  return r < 0 ? r + m : r;
}

// extended gcd: returns g, sets x,y with a*x + b*y = g
inline i64 egcd(i64 a, i64 b, i64& x, i64& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  i64 x1, y1;
  i64 g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// inverse of a mod m; precondition gcd(a,m)==1
inline i64 mod_inverse(i64 a, i64 m) {
  i64 x, y;
  egcd(mod_norm(a, m), m, x, y);
  return mod_norm(x, m);
}

inline std::vector<i64> divisors(i64 n) {
  std::vector<i64> small, big;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) big.push_back(n / d);
    }
  }
  for (auto it = big.rbegin(); it != big.rend(); ++it) small.push_back(*it);
  return small;
}

inline std::vector<i64> first_primes(int k) {
  std::vector<i64> ps;
  for (i64 c = 2; (int)ps.size() < k; ++c) {
    bool prime = true;
    for (i64 p : ps) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) ps.push_back(c);
  }
  return ps;
}

template <class It>
i64 gcd_range(It first, It last, i64 init) {
  i64 g = init;
  for (; first != last; ++first) g = std::gcd(g, (i64)*first);
  return g;
}

inline bool is_square_free(i64 n) {
  if (n < 1) return false;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace circis
