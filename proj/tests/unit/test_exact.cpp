#include <doctest.h>

#include <random>
#include <vector>

#include "quartica/exact.hpp"

using quartica::ExactInt;
using quartica::ExactRational;

TEST_SUITE("exact_core") {

TEST_CASE("isqrt_exact examples") {
  CHECK(quartica::isqrt_exact(0) == ExactInt(0));
  CHECK(quartica::isqrt_exact(1) == ExactInt(1));
  CHECK_FALSE(quartica::isqrt_exact(15184).has_value());
  CHECK(quartica::isqrt_exact(9409) == ExactInt(97));
  CHECK(quartica::isqrt_exact(121) == ExactInt(11));
  CHECK_THROWS_AS((void)quartica::isqrt_exact(-4), quartica::DomainError);
}

TEST_CASE("isqrt agrees with a brute-force square table up to 10^6") {
  std::vector<bool> square(1'000'001, false);
  for (std::uint64_t r = 0; r <= 1000; ++r) square[r * r] = true;
  long long first_bad = -1;
  for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
    const auto got = quartica::isqrt_exact(ExactInt(n));
    if (got.has_value() != square[n]) {
      first_bad = static_cast<long long>(n);
      break;
    }
    if (got && (*got) * (*got) != ExactInt(n)) {
      first_bad = static_cast<long long>(n);
      break;
    }
  }
  CHECK_MESSAGE(first_bad == -1, "first mismatch at n = ", first_bad);
}

TEST_CASE("isqrt handles 300-bit magnitudes exactly") {
  const ExactInt r = (ExactInt(1) << 150) + 12345;
  const ExactInt n = r * r;
  CHECK(quartica::isqrt_exact(n) == r);
  CHECK_FALSE(quartica::isqrt_exact(n + 1).has_value());
  CHECK_FALSE(quartica::isqrt_exact(n - 1).has_value());
  CHECK(quartica::isqrt_floor(n + 1) == r);
  CHECK(quartica::isqrt_floor(n - 1) == r - 1);
}

TEST_CASE("gcd examples and sign conventions") {
  CHECK(quartica::gcd(6, 35) == ExactInt(1));
  CHECK(quartica::gcd(2, 4) == ExactInt(2));
  CHECK(quartica::gcd(0, 7) == ExactInt(7));
  CHECK(quartica::gcd(7, 0) == ExactInt(7));
  CHECK(quartica::gcd(0, 0) == ExactInt(0));
  CHECK(quartica::gcd(-6, 4) == ExactInt(2));
  CHECK(quartica::gcd(6, -4) == ExactInt(2));
  CHECK(quartica::gcd(-6, -4) == ExactInt(2));
}

TEST_CASE("gcd divides both arguments over the full [-500,500] grid") {
  long long bad = 0;
  for (int a = -500; a <= 500; ++a) {
    for (int b = -500; b <= 500; ++b) {
      const ExactInt g = quartica::gcd(a, b);
      if (g == 0) {
        if (a != 0 || b != 0) ++bad;
        continue;
      }
      if (ExactInt(a) % g != 0 || ExactInt(b) % g != 0) ++bad;
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("every common divisor divides the gcd (sampled)") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 20000; ++i) {
    const int a = static_cast<int>(rng() % 1001) - 500;
    const int b = static_cast<int>(rng() % 1001) - 500;
    const ExactInt g = quartica::gcd(a, b);
    const int la = a < 0 ? -a : a, lb = b < 0 ? -b : b;
    const int limit = std::min(la == 0 ? lb : la, lb == 0 ? la : lb);
    for (int d = 1; d <= limit; ++d) {
      if (a % d == 0 && b % d == 0) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(d);
        REQUIRE(g % d == 0);
      }
    }
  }
}

TEST_CASE("rational_square_root examples") {
  CHECK_FALSE(quartica::rational_square_root(ExactRational(97, 4)).has_value());
  CHECK(quartica::rational_square_root(ExactRational(16, 1)) == ExactRational(4));
  CHECK(quartica::rational_square_root(ExactRational(9409, 4)) ==
        ExactRational(97, 2));
  CHECK(quartica::rational_square_root(ExactRational(0)) == ExactRational(0));
  CHECK_THROWS_AS((void)quartica::rational_square_root(ExactRational(-1, 4)),
                  quartica::DomainError);
}

TEST_CASE("rational_square_root round-trips 10^4 squared fractions") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 10000; ++i) {
    const std::int64_t p = static_cast<std::int64_t>(rng() % 100000) + 1;
    const std::int64_t q = static_cast<std::int64_t>(rng() % 100000) + 1;
    const ExactRational root(p, q);
    const ExactRational sq = root * root;
    const auto got = quartica::rational_square_root(sq);
    REQUIRE(got.has_value());
    CHECK(*got * *got == sq);
    CHECK(*got == ExactRational(p, q));
  }
}

TEST_CASE("fixed-width isqrt matches the arbitrary-precision root") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100000; ++i) {
    const std::uint64_t n = rng();
    const std::uint64_t r = quartica::isqrt_floor_u64(n);
    CHECK(quartica::isqrt_floor(ExactInt(n)) == ExactInt(r));
  }
  for (int i = 0; i < 20000; ++i) {
    const unsigned __int128 n =
        (static_cast<unsigned __int128>(rng()) << 64) | rng();
    const unsigned __int128 r = quartica::isqrt_floor_u128(n);
    const ExactInt big = (ExactInt(static_cast<std::uint64_t>(n >> 64)) << 64) +
                         static_cast<std::uint64_t>(n);
    const ExactInt want = quartica::isqrt_floor(big);
    const ExactInt got = (ExactInt(static_cast<std::uint64_t>(r >> 64)) << 64) +
                         static_cast<std::uint64_t>(r);
    CHECK(want == got);
  }
  CHECK(quartica::isqrt_floor_u64(0) == 0);
  CHECK(quartica::isqrt_floor_u64(~std::uint64_t(0)) == 4294967295ull);
}

TEST_CASE("parse_exact_int accepts signs and rejects garbage") {
  CHECK(quartica::parse_exact_int("-5", "t") == ExactInt(-5));
  CHECK(quartica::parse_exact_int("+7", "t") == ExactInt(7));
  CHECK(quartica::parse_exact_int("123456789012345678901234567890", "t") ==
        ExactInt("123456789012345678901234567890"));
  CHECK_THROWS_AS((void)quartica::parse_exact_int("", "t"), quartica::FormatError);
  CHECK_THROWS_AS((void)quartica::parse_exact_int("12x", "t"), quartica::FormatError);
  CHECK_THROWS_AS((void)quartica::parse_exact_int("0x12", "t"), quartica::FormatError);
  CHECK_THROWS_AS((void)quartica::parse_exact_int("-", "t"), quartica::FormatError);
}

TEST_CASE("decimal rendering") {
  CHECK(quartica::to_decimal(ExactInt(-42)) == "-42");
  CHECK(quartica::to_decimal(ExactRational(6)) == "6");
  CHECK(quartica::to_decimal(ExactRational(73, 4)) == "73/4");
}

}  // TEST_SUITE
