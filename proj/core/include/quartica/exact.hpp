#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "quartica/errors.hpp"

namespace quartica {

// Arbitrary-precision signed integer. All arithmetic in the library is
// exact; there is no floating point anywhere in core logic.
using ExactInt = boost::multiprecision::cpp_int;

// Exact fraction, always kept in lowest terms with a positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;

// Nonnegative greatest common divisor; sign-agnostic, gcd(0,0) = 0.
ExactInt gcd(const ExactInt& a, const ExactInt& b);

// Floor of the square root, computed by Newton iteration on integers.
// Throws DomainError for negative input.
ExactInt isqrt_floor(const ExactInt& n);

// Exact integer square root: the root when n is a perfect square, nullopt
// otherwise. Never approximates.
std::optional<ExactInt> isqrt_exact(const ExactInt& n);

bool is_perfect_square(const ExactInt& n);

// Exact rational square root: exists iff numerator and denominator of the
// reduced fraction are both perfect squares. Throws DomainError if q < 0.
std::optional<ExactRational> rational_square_root(const ExactRational& q);

// Fixed-width companions used by the search kernels. Same contract as
// isqrt_floor, integer-only Newton with a bit-length initial guess.
std::uint64_t isqrt_floor_u64(std::uint64_t n);
unsigned __int128 isqrt_floor_u128(unsigned __int128 n);

// Parses an optionally signed decimal string of unbounded magnitude.
// `what` names the value in the FormatError raised on malformed input.
ExactInt parse_exact_int(const std::string& text, const std::string& what);

std::string to_decimal(const ExactInt& n);

// Canonical rendering of a rational: "p" when the denominator is 1,
// otherwise "p/q".
std::string to_decimal(const ExactRational& q);

}  // namespace quartica
