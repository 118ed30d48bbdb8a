#include <catch2/catch_amalgamated.hpp>

#include "heegner/arith.hpp"

using namespace heegner;

namespace {

// Independent Kronecker oracle: factor n, use Euler's criterion for odd
// primes, the mod-8 rule at 2 and the sign rule at -1.
int kronecker_oracle(const Int& a, const Int& n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  Int nn = n;
  if (nn < 0) {
    nn = -nn;
    if (a < 0) result = -result;
  }
  for (auto& [p, e] : factorize(nn)) {
    int s;
    if (p == 2) {
      if (a % 2 == 0) return 0;
      Int am8 = mod_pos(a, Int(8));
      s = (am8 == 1 || am8 == 7) ? 1 : -1;
    } else {
      Int r = mod_pos(a, p);
      if (r == 0) return 0;
      // Euler: a^((p-1)/2) mod p.
      Int ex = (p - 1) / 2;
      Int acc = 1, base = r;
      while (ex > 0) {
        if (ex % 2 == 1) acc = acc * base % p;
        base = base * base % p;
        ex /= 2;
      }
      s = (acc == 1) ? 1 : -1;
    }
    for (int i = 0; i < e; ++i) result *= s;
  }
  return result;
}

}  // namespace

TEST_CASE("kronecker agrees with factorization oracle") {
  for (long a = -60; a <= 60; ++a) {
    for (long n = -60; n <= 60; ++n) {
      CAPTURE(a, n);
      REQUIRE(kronecker(Int(a), Int(n)) == kronecker_oracle(Int(a), Int(n)));
    }
  }
}

TEST_CASE("kronecker frozen values") {
  REQUIRE(kronecker(Int(5), Int(7)) == -1);
  REQUIRE(kronecker(Int(5), Int(11)) == 1);
  REQUIRE(kronecker(Int(5), Int(37)) == -1);
  REQUIRE(kronecker(Int(5), Int(407)) == -1);
  REQUIRE(kronecker(Int(5), Int(1001)) == 1);
  REQUIRE(kronecker(Int(5), Int(2)) == -1);
  REQUIRE(kronecker(Int(5), Int(4)) == 1);
  REQUIRE(kronecker(Int(-3), Int(7)) == 1);
  REQUIRE(kronecker(Int(-4), Int(21)) == 1);
  REQUIRE(kronecker(Int(1), Int(0)) == 1);
  REQUIRE(kronecker(Int(-1), Int(0)) == 1);
  REQUIRE(kronecker(Int(5), Int(0)) == 0);
  REQUIRE(kronecker(Int(8), Int(3)) == -1);
  REQUIRE(kronecker(Int(12), Int(5)) == -1);
}

TEST_CASE("kronecker complete multiplicativity in bottom argument") {
  for (long a : {-11L, -4L, 1L, 5L, 8L, 13L}) {
    for (long m = -20; m <= 20; ++m) {
      for (long n = -20; n <= 20; ++n) {
        if (m == 0 || n == 0) continue;
        CAPTURE(a, m, n);
        REQUIRE(kronecker(Int(a), Int(m) * Int(n)) ==
                kronecker(Int(a), Int(m)) * kronecker(Int(a), Int(n)));
      }
    }
  }
}

TEST_CASE("fundamental discriminants") {
  for (long d : {1L, 5L, -4L, 8L, -8L, -7L, 12L, -3L, -20L, 13L, 21L, -24L}) {
    CAPTURE(d);
    REQUIRE(is_fundamental(Int(d)));
  }
  for (long d : {0L, 45L, 9L, 25L, -12L, 2L, 3L, -9L, 16L, -25L, 4L, -100L}) {
    CAPTURE(d);
    REQUIRE(!is_fundamental(Int(d)));
  }
}

TEST_CASE("prime discriminant factorization") {
  auto check = [](long D, std::vector<long> expect) {
    auto got = prime_discriminants(Int(D));
    std::vector<Int> want;
    for (long x : expect) want.push_back(Int(x));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    REQUIRE(got == want);
  };
  check(5, {5});
  check(-4, {-4});
  check(8, {8});
  check(-8, {-8});
  check(-20, {-4, 5});
  check(12, {-4, -3});
  check(-24, {8, -3});
  check(-35, {5, -7});
  check(105, {5, -3, -7});
  check(1, {});
}

TEST_CASE("discriminant splittings") {
  auto s5 = discriminant_splittings(Int(5));
  REQUIRE(s5 == std::vector<std::pair<Int, Int>>{{Int(1), Int(5)}, {Int(5), Int(1)}});
  auto s1 = discriminant_splittings(Int(1));
  REQUIRE(s1 == std::vector<std::pair<Int, Int>>{{Int(1), Int(1)}});
  auto s20 = discriminant_splittings(Int(-20));
  REQUIRE(s20 == std::vector<std::pair<Int, Int>>{
                     {Int(-20), Int(1)}, {Int(-4), Int(5)}, {Int(1), Int(-20)}, {Int(5), Int(-4)}});
  // Every splitting multiplies back and consists of fundamental discriminants.
  for (long D : {-3L, -4L, 5L, 8L, -20L, 12L, -24L, 105L}) {
    for (auto& [d1, d2] : discriminant_splittings(Int(D))) {
      REQUIRE(d1 * d2 == D);
      REQUIRE(is_fundamental(d1));
      REQUIRE(is_fundamental(d2));
    }
  }
}

TEST_CASE("square roots mod 4N") {
  REQUIRE(sqrts_mod_4N(Int(5), Int(11)) == std::vector<Int>{Int(7), Int(15)});
  REQUIRE(sqrts_mod_4N(Int(1), Int(1)) == std::vector<Int>{Int(1)});
  REQUIRE(sqrts_mod_4N(Int(2), Int(1)) == std::vector<Int>{});
  REQUIRE(sqrts_mod_4N(Int(1), Int(11)) == std::vector<Int>{Int(1), Int(21)});
  REQUIRE(sqrts_mod_4N(Int(-3), Int(1)) == std::vector<Int>{Int(1)});
  REQUIRE(sqrts_mod_4N(Int(-4), Int(1)) == std::vector<Int>{Int(0)});
  for (auto& r : sqrts_mod_4N(Int(-20), Int(30)))
    REQUIRE(mod_pos(r * r + 20, Int(120)) == 0);
}

TEST_CASE("divisors and inverse") {
  REQUIRE(divisors(Int(12)) ==
          std::vector<Int>{Int(1), Int(2), Int(3), Int(4), Int(6), Int(12)});
  REQUIRE(divisors(Int(-11)) == std::vector<Int>{Int(1), Int(11)});
  for (long m : {2L, 7L, 22L, 44L, 55L}) {
    for (long a = 1; a < m; ++a) {
      if (gcd_int(Int(a), Int(m)) != 1) continue;
      Int inv = inv_mod(Int(a), Int(m));
      REQUIRE(mod_pos(Int(a) * inv, Int(m)) == 1);
    }
  }
}

TEST_CASE("rational helpers") {
  REQUIRE(floor_rat(Rat(7, 2)) == 3);
  REQUIRE(floor_rat(Rat(-7, 2)) == -4);
  REQUIRE(ceil_rat(Rat(-7, 2)) == -3);
  REQUIRE(round_rat(Rat(5, 2)) == 3);
  REQUIRE(round_rat(Rat(-5, 2)) == -2);
  REQUIRE(frac_part(Rat(-1, 4)) == Rat(3, 4));
  REQUIRE(is_integer(Rat(44, 11)));
}

TEST_CASE("dedekind sums") {
  // s(1,3) = 1/18, s(1,5) = 1/5, s(2,5) = 0 by direct evaluation;
  // reciprocity s(d,c) + s(c,d) = -1/4 + (c/d + d/c + 1/(cd))/12.
  REQUIRE(dedekind_sum(Int(1), Int(3)) == Rat(1, 18));
  REQUIRE(dedekind_sum(Int(1), Int(5)) == Rat(1, 5));
  REQUIRE(dedekind_sum(Int(2), Int(5)) == Rat(0));
  for (long c = 1; c <= 12; ++c) {
    for (long d = 1; d <= 12; ++d) {
      if (gcd_int(Int(c), Int(d)) != 1) continue;
      Rat lhs = dedekind_sum(Int(d), Int(c)) + dedekind_sum(Int(c), Int(d));
      Rat rhs = Rat(-1, 4) + (Rat(c, d) + Rat(d, c) + Rat(1, c * d)) / 12;
      CAPTURE(c, d);
      REQUIRE(lhs == rhs);
    }
  }
}
