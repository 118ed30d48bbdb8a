#pragma once
// Elementary number theory: Kronecker symbol, fundamental discriminants,
// multiplicative splittings of a discriminant, square roots modulo 4N,
// divisor enumeration and modular inverses.

#include <algorithm>
#include <map>
#include <vector>

#include "heegner/base.hpp"

namespace heegner {

// Kronecker symbol (a|n), full domain: multiplicative in n, with
// (a|0) = 1 if a = +-1 else 0, (a|-1) = sign convention for a < 0,
// (a|2) = 0 for even a and (-1)^((a^2-1)/8) otherwise.
inline int kronecker(Int a, Int n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && n % 2 == 0) return 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  // Strip factors of two from n.
  while (n % 2 == 0) {
    n /= 2;
    Int am8 = mod_pos(a, Int(8));
    if (am8 == 3 || am8 == 5) result = -result;
  }
  // Now n is odd and positive; standard Jacobi with reciprocity.
  a = mod_pos(a, n);
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      Int nm8 = mod_pos(n, Int(8));
      if (nm8 == 3 || nm8 == 5) result = -result;
    }
    std::swap(a, n);
    if (mod_pos(a, Int(4)) == 3 && mod_pos(n, Int(4)) == 3) result = -result;
    a = mod_pos(a, n);
  }
  return (n == 1) ? result : 0;
}

inline bool is_square(const Int& x) {
  if (x < 0) return false;
  Int r = sqrt(x);
  return r * r == x;
}

inline bool is_squarefree(Int x) {
  if (x == 0) return false;
  if (x < 0) x = -x;
  for (Int p = 2; p * p <= x; ++p) {
    if (x % (p * p) == 0) return false;
    while (x % p == 0) x /= p;
  }
  return true;
}

// Fundamental discriminant: 1, or d = 1 mod 4 squarefree, or d = 4m with
// m = 2,3 mod 4 squarefree.
inline bool is_fundamental(const Int& d) {
  if (d == 1) return true;
  if (d == 0) return false;
  Int m4 = mod_pos(d, Int(4));
  if (m4 == 1) return is_squarefree(d);
  if (m4 == 0) {
    Int m = d / 4;
    Int mm4 = mod_pos(m, Int(4));
    return (mm4 == 2 || mm4 == 3) && is_squarefree(m);
  }
  return false;
}

inline std::map<Int, int> factorize(Int x) {
  HG_DOMAIN_CHECK(x != 0, "factorize: zero input");
  std::map<Int, int> f;
  if (x < 0) x = -x;
  for (Int p = 2; p * p <= x; ++p) {
    while (x % p == 0) {
      ++f[p];
      x /= p;
    }
  }
  if (x > 1) ++f[x];
  return f;
}

// Prime discriminants dividing a fundamental discriminant D:
// -4, +-8, p* = (-1)^((p-1)/2) p for odd primes p. Their product is D and
// the factorization is unique.
inline std::vector<Int> prime_discriminants(const Int& D) {
  HG_DOMAIN_CHECK(is_fundamental(D), "prime_discriminants: not a fundamental discriminant");
  std::vector<Int> out;
  if (D == 1) return out;
  Int rest = D;
  // 2-part: D = -4, 8 or -8 times odd prime discriminants.
  if (mod_pos(D, Int(4)) == 0) {
    Int m = D / 4;  // m = 2,3 mod 4 squarefree
    Int mm4 = mod_pos(m, Int(4));
    if (mm4 == 3) {
      out.push_back(Int(-4));
      rest = -m;
    } else {
      // m even: two-part is +-8.
      Int m2 = m / 2;  // odd squarefree
      Int two_part = (mod_pos(m2, Int(4)) == 1) ? Int(8) : Int(-8);
      out.push_back(two_part);
      rest = D / two_part;
    }
  }
  for (auto& [p, e] : factorize(rest)) {
    HG_LOGIC_CHECK(e == 1 && p % 2 == 1, "prime_discriminants: unexpected factor");
    Int pstar = (mod_pos(p, Int(4)) == 1) ? p : -p;
    out.push_back(pstar);
  }
  Int prod = 1;
  for (auto& q : out) prod *= q;
  HG_LOGIC_CHECK(prod == D, "prime_discriminants: product mismatch");
  return out;
}

// All ordered factorizations D = D1 * D2 into two (fundamental)
// discriminants, as pairs (D1, D2). For D = 1 the only pair is (1, 1).
inline std::vector<std::pair<Int, Int>> discriminant_splittings(const Int& D) {
  std::vector<Int> primes = prime_discriminants(D);
  size_t k = primes.size();
  HG_DOMAIN_CHECK(k < 30, "discriminant_splittings: too many prime factors");
  std::vector<std::pair<Int, Int>> out;
  for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
    Int d1 = 1, d2 = 1;
    for (size_t i = 0; i < k; ++i) {
      if (mask & (size_t(1) << i)) d1 *= primes[i];
      else d2 *= primes[i];
    }
    out.emplace_back(d1, d2);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Sorted list of r in [0, 2N) with r^2 = D mod 4N.
inline std::vector<Int> sqrts_mod_4N(const Int& D, const Int& N) {
  HG_DOMAIN_CHECK(N > 0, "sqrts_mod_4N: N must be positive");
  std::vector<Int> out;
  Int twoN = 2 * N;
  for (Int r = 0; r < twoN; ++r) {
    if (mod_pos(r * r - D, 4 * N) == 0) out.push_back(r);
  }
  return out;
}

inline std::vector<Int> divisors(Int x) {
  HG_DOMAIN_CHECK(x != 0, "divisors: zero input");
  if (x < 0) x = -x;
  std::vector<Int> out;
  for (Int d = 1; d * d <= x; ++d) {
    if (x % d == 0) {
      out.push_back(d);
      if (d * d != x) out.push_back(x / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

// Inverse of a mod m (m > 0), requires gcd(a, m) = 1.
inline Int inv_mod(const Int& a, const Int& m) {
  HG_DOMAIN_CHECK(m > 0, "inv_mod: modulus must be positive");
  Int old_r = mod_pos(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  HG_DOMAIN_CHECK(old_r == 1, "inv_mod: arguments not coprime");
  return mod_pos(old_s, m);
}

// Dedekind sum s(d, c) for c > 0: sum_{n=1}^{c-1} ((n/c))((dn/c)).
inline Rat dedekind_sum(const Int& d, const Int& c) {
  HG_DOMAIN_CHECK(c > 0, "dedekind_sum: c must be positive");
  auto saw = [](const Rat& x) -> Rat {
    if (is_integer(x)) return Rat(0);
    return frac_part(x) - Rat(1, 2);
  };
  Rat acc(0);
  for (Int n = 1; n < c; ++n) {
    acc += saw(Rat(n, c)) * saw(Rat(d * n, c));
  }
  return acc;
}

}  // namespace heegner
