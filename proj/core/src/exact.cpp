#include "quartica/exact.hpp"

#include <bit>

#include <boost/multiprecision/integer.hpp>

namespace quartica {

ExactInt gcd(const ExactInt& a, const ExactInt& b) {
  ExactInt g = boost::multiprecision::gcd(a, b);
  if (g < 0) g = -g;
  return g;
}

ExactInt isqrt_floor(const ExactInt& n) {
  if (n < 0) throw DomainError("isqrt of negative value " + n.str());
  if (n < 2) return n;
  // Initial guess 2^ceil(bits/2) >= sqrt(n); Newton descends monotonically.
  const std::size_t bits = boost::multiprecision::msb(n) + 1;
  ExactInt x = ExactInt(1) << ((bits + 1) / 2);
  for (;;) {
    ExactInt y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = y;
  }
}

std::optional<ExactInt> isqrt_exact(const ExactInt& n) {
  ExactInt r = isqrt_floor(n);
  if (r * r == n) return r;
  return std::nullopt;
}

bool is_perfect_square(const ExactInt& n) {
  if (n < 0) return false;
  return isqrt_exact(n).has_value();
}

std::optional<ExactRational> rational_square_root(const ExactRational& q) {
  if (q < 0) throw DomainError("rational square root of negative value");
  auto num = isqrt_exact(boost::multiprecision::numerator(q));
  if (!num) return std::nullopt;
  auto den = isqrt_exact(boost::multiprecision::denominator(q));
  if (!den) return std::nullopt;
  return ExactRational(*num, *den);
}

std::uint64_t isqrt_floor_u64(std::uint64_t n) {
  if (n == 0) return 0;
  const unsigned bits = std::bit_width(n);
  std::uint64_t x = std::uint64_t(1) << ((bits + 1) / 2);
  for (;;) {
    std::uint64_t y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = y;
  }
}

unsigned __int128 isqrt_floor_u128(unsigned __int128 n) {
  if (n == 0) return 0;
  const auto hi = static_cast<std::uint64_t>(n >> 64);
  const unsigned bits =
      hi ? 64 + std::bit_width(hi) : std::bit_width(static_cast<std::uint64_t>(n));
  unsigned __int128 x = static_cast<unsigned __int128>(1) << ((bits + 1) / 2);
  for (;;) {
    unsigned __int128 y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = y;
  }
}

ExactInt parse_exact_int(const std::string& text, const std::string& what) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size())
    throw FormatError(what, "expected a decimal integer, got '" + text + "'");
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw FormatError(what, "expected a decimal integer, got '" + text + "'");
  }
  return ExactInt(text[0] == '+' ? text.substr(1) : text);
}

std::string to_decimal(const ExactInt& n) { return n.str(); }

std::string to_decimal(const ExactRational& q) {
  const ExactInt num = boost::multiprecision::numerator(q);
  const ExactInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace quartica
