#include <doctest.h>

#include <numeric>
#include <set>
#include <tuple>

#include "quartica/parametrize.hpp"

#include "../common/brute.hpp"

using quartica::ConicParam;
using quartica::ConicParity;
using quartica::ConicPoint;
using quartica::ExactInt;

TEST_SUITE("parametrize") {

TEST_CASE("primitive_pythagorean examples") {
  const auto t1 = quartica::primitive_pythagorean(2, 1);
  CHECK(t1.leg_odd == ExactInt(3));
  CHECK(t1.leg_even == ExactInt(4));
  CHECK(t1.hyp == ExactInt(5));
  const auto t2 = quartica::primitive_pythagorean(3, 2);
  CHECK(t2.leg_odd == ExactInt(5));
  CHECK(t2.leg_even == ExactInt(12));
  CHECK(t2.hyp == ExactInt(13));
  CHECK_THROWS_AS((void)quartica::primitive_pythagorean(3, 1),
                  quartica::ParameterError);  // both odd
  CHECK_THROWS_AS((void)quartica::primitive_pythagorean(1, 2),
                  quartica::ParameterError);  // m < n
  CHECK_THROWS_AS((void)quartica::primitive_pythagorean(4, 2),
                  quartica::ParameterError);  // not coprime
}

TEST_CASE("pythagorean_decompose examples") {
  const auto t1 = quartica::pythagorean_decompose(3, 4, 5);
  CHECK(t1.gen_m == ExactInt(2));
  CHECK(t1.gen_n == ExactInt(1));
  const auto t2 = quartica::pythagorean_decompose(5, 12, 13);
  CHECK(t2.gen_m == ExactInt(3));
  CHECK(t2.gen_n == ExactInt(2));
  const auto t3 = quartica::pythagorean_decompose(4, 3, 5);  // even leg first
  CHECK(t3.gen_m == ExactInt(2));
  CHECK(t3.gen_n == ExactInt(1));
  CHECK_THROWS_AS((void)quartica::pythagorean_decompose(6, 8, 10),
                  quartica::DecompositionError);
  CHECK_THROWS_AS((void)quartica::pythagorean_decompose(2, 3, 4),
                  quartica::DecompositionError);
  CHECK_THROWS_AS((void)quartica::pythagorean_decompose(9, 12, 15),
                  quartica::DecompositionError);
}

TEST_CASE("generator round trip for every primitive triple with hyp <= 1000") {
  for (long m = 2; m * m <= 1000; ++m) {
    for (long n = 1; n < m; ++n) {
      if (std::gcd(m, n) != 1 || (m - n) % 2 == 0) continue;
      if (m * m + n * n > 1000) continue;
      const auto t = quartica::primitive_pythagorean(m, n);
      const auto back = quartica::pythagorean_decompose(t.leg_odd, t.leg_even, t.hyp);
      REQUIRE(back.gen_m == ExactInt(m));
      REQUIRE(back.gen_n == ExactInt(n));
    }
  }
}

TEST_CASE("primitive triples are complete up to hyp 1000") {
  // Oracle: brute-force scan over legs, independent of the generators.
  std::set<std::tuple<long, long, long>> generated;
  for (long m = 2; m * m <= 1000; ++m) {
    for (long n = 1; n < m; ++n) {
      if (std::gcd(m, n) != 1 || (m - n) % 2 == 0) continue;
      if (m * m + n * n > 1000) continue;
      const auto t = quartica::primitive_pythagorean(m, n);
      const long lo = static_cast<long>(t.leg_odd);
      const long le = static_cast<long>(t.leg_even);
      generated.insert({std::min(lo, le), std::max(lo, le),
                        static_cast<long>(t.hyp)});
    }
  }
  std::set<std::tuple<long, long, long>> brute_set;
  for (long a = 1; a <= 1000; ++a) {
    for (long b = a + 1; a * a + b * b <= 1000 * 1000; ++b) {
      const unsigned __int128 c2 =
          static_cast<unsigned __int128>(a) * a + static_cast<unsigned __int128>(b) * b;
      std::uint64_t c = 0;
      if (!brute::is_square_u128(c2, &c)) continue;
      if (std::gcd(a, b) != 1) continue;
      brute_set.insert({a, b, static_cast<long>(c)});
    }
  }
  CHECK(generated == brute_set);
  CHECK(generated.size() == 158);
}

TEST_CASE("four_split examples") {
  const auto s1 = quartica::four_split(6, 35, 10, 21);
  CHECK(s1.a == ExactInt(2));
  CHECK(s1.b == ExactInt(7));
  CHECK(s1.c == ExactInt(3));
  CHECK(s1.d == ExactInt(5));
  const auto s2 = quartica::four_split(5, 7, 5, 7);
  CHECK(s2.a == ExactInt(5));
  CHECK(s2.b == ExactInt(7));
  CHECK(s2.c == ExactInt(1));
  CHECK(s2.d == ExactInt(1));
  CHECK_THROWS_AS((void)quartica::four_split(2, 3, 5, 7), quartica::ParameterError);
  CHECK_THROWS_AS((void)quartica::four_split(0, 3, 0, 3), quartica::ParameterError);
}

TEST_CASE("four_split reconstructs every x*y = z*t with entries <= 200") {
  for (long x = 1; x <= 200; ++x) {
    for (long y = 1; y <= 200; ++y) {
      const long p = x * y;
      for (long z = 1; z <= 200; ++z) {
        if (p % z != 0) continue;
        const long t = p / z;
        if (t > 200) continue;
        const auto s = quartica::four_split(x, y, z, t);
        REQUIRE(s.a * s.c == ExactInt(x));
        REQUIRE(s.b * s.d == ExactInt(y));
        REQUIRE(s.a * s.d == ExactInt(z));
        REQUIRE(s.b * s.c == ExactInt(t));
        if (std::gcd(x, y) == 1 && std::gcd(z, t) == 1) {
          const ExactInt parts[4] = {s.a, s.b, s.c, s.d};
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              REQUIRE(quartica::gcd(parts[i], parts[j]) == ExactInt(1));
        }
      }
    }
  }
}

TEST_CASE("conic_generate examples") {
  const auto p1 = ConicPoint{7, 6, 11};
  CHECK(quartica::conic_generate(
            ConicParam{2, 1, 2, 3, 1, ConicParity::dy_even}) == p1);
  const auto p2 = ConicPoint{11, 5, 14};
  CHECK(quartica::conic_generate(
            ConicParam{3, 1, 3, 5, 1, ConicParity::dy_odd}) == p2);
  CHECK_THROWS_AS((void)quartica::conic_generate(
                      ConicParam{3, 1, 3, 2, 1, ConicParity::dy_odd}),
                  quartica::ParameterError);  // 4 - 3 odd, x non-integral
  CHECK_THROWS_AS((void)quartica::conic_generate(
                      ConicParam{6, 2, 3, 1, 1, ConicParity::dy_odd}),
                  quartica::ParameterError);  // D*m*n even
  CHECK_THROWS_AS((void)quartica::conic_generate(
                      ConicParam{4, 2, 2, 2, 1, ConicParity::dy_even}),
                  quartica::ParameterError);  // gcd(pm, qn) != 1
  CHECK_THROWS_AS((void)quartica::conic_generate(
                      ConicParam{6, 2, 2, 1, 1, ConicParity::dy_even}),
                  quartica::ParameterError);  // p*q != D
}

TEST_CASE("conic_decompose examples") {
  const auto r1 = quartica::conic_decompose(2, 7, 6, 11);
  bool has1 = false;
  for (const auto& p : r1) {
    if (p.p == 1 && p.q == 2 && p.m == 3 && p.n == 1 &&
        p.parity == ConicParity::dy_even)
      has1 = true;
  }
  CHECK(has1);

  const auto r2 = quartica::conic_decompose(3, 11, 5, 14);
  bool has2 = false;
  for (const auto& p : r2) {
    if (p.p == 1 && p.q == 3 && p.m == 5 && p.n == 1 &&
        p.parity == ConicParity::dy_odd)
      has2 = true;
  }
  CHECK(has2);

  const auto r3 = quartica::conic_decompose(3, 1, 4, 7);
  bool has3 = false;
  for (const auto& p : r3) {
    if (p.p == 1 && p.q == 3 && p.m == 2 && p.n == 1 &&
        p.parity == ConicParity::dy_even)
      has3 = true;
  }
  CHECK(has3);

  CHECK_THROWS_AS((void)quartica::conic_decompose(3, 2, 4, 7),
                  quartica::DecompositionError);  // not on the conic
  CHECK_THROWS_AS((void)quartica::conic_decompose(5, 10, 15, 35),
                  quartica::DecompositionError);  // gcd hypothesis fails
}

TEST_CASE("decompose/generate round trip for D in {2,3}, z <= 300") {
  for (long d = 2; d <= 3; ++d) {
    for (long z = 1; z <= 300; ++z) {
      for (long y = 1; d * y * y < z * z; ++y) {
        const long x2 = z * z - d * y * y;
        std::uint64_t xr = 0;
        if (!brute::is_square_u128(static_cast<unsigned __int128>(x2), &xr)) continue;
        const long x = static_cast<long>(xr);
        if (x == 0) continue;
        if (std::gcd(x, d * y) != 1 && std::gcd(z, d * y) != 1) continue;
        const auto params = quartica::conic_decompose(d, x, y, z);
        REQUIRE(!params.empty());
        for (const auto& p : params) {
          const auto point = quartica::conic_generate(p);
          REQUIRE(point == ConicPoint{x, y, z});
        }
      }
    }
  }
}

TEST_CASE("every conic solution with z <= 500 is reachable, D in {2,3}") {
  // Oracle: exhaustive generator scan with p, q, m, n <= 40.
  for (long d = 2; d <= 3; ++d) {
    std::set<std::tuple<long, long, long>> reachable;
    for (long p = 1; p <= d; ++p) {
      if (d % p != 0) continue;
      const long q = d / p;
      for (long m = 1; m <= 40; ++m) {
        for (long n = 1; n <= 40; ++n) {
          if (std::gcd(p * m, q * n) != 1) continue;
          const long pm2 = p * m * m, qn2 = q * n * n;
          if ((d * m * n) % 2 == 1) {
            if ((pm2 - qn2) % 2 == 0) {
              reachable.insert({(pm2 - qn2) / 2, m * n, (pm2 + qn2) / 2});
            }
          }
          reachable.insert({pm2 - qn2, 2 * m * n, pm2 + qn2});
        }
      }
    }
    for (long z = 1; z <= 500; ++z) {
      for (long y = 1; d * y * y < z * z; ++y) {
        const long x2 = z * z - d * y * y;
        std::uint64_t xr = 0;
        if (!brute::is_square_u128(static_cast<unsigned __int128>(x2), &xr)) continue;
        const long x = static_cast<long>(xr);
        if (x == 0) continue;
        if (std::gcd(x, d * y) != 1) continue;
        CAPTURE(d);
        CAPTURE(x);
        CAPTURE(y);
        CAPTURE(z);
        REQUIRE(reachable.count({x, y, z}) == 1);
      }
    }
  }
}

}  // TEST_SUITE
