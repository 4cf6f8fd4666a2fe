#pragma once

#include <cstdint>
#include <functional>

#include "quartica/exact.hpp"

namespace quartica {

// Rational-sided triangle. Positivity and the strict triangle inequality
// are checked by validate() / metrics().
struct Triangle {
  ExactRational a;
  ExactRational b;
  ExactRational c;
};

// Throws ValidationError when the sides are not positive or the strict
// triangle inequality fails.
void validate(const Triangle& t);

struct TriangleMetrics {
  ExactRational median_sq_a;  // (2b^2 + 2c^2 - a^2) / 4, and cyclic
  ExactRational median_sq_b;
  ExactRational median_sq_c;
  ExactRational area_sq_times16;  // 2a^2b^2 + 2b^2c^2 + 2c^2a^2 - a^4 - b^4 - c^4
  int rational_median_count = 0;
  bool area_rational = false;
  bool isosceles = false;
  bool perfect = false;  // all three medians rational and area rational
};

TriangleMetrics metrics(const Triangle& t);

// Exact area when it is rational: sqrt(area_sq_times16) / 4.
std::optional<ExactRational> rational_area(const TriangleMetrics& m);

// Generator pair for an isosceles triangle with one rational median:
// legs |m^2 - 2n^2|, base 2mn, and twice the leg median w = m^2 + 2n^2
// satisfying w^2 = 2*base^2 + leg^2. The square of the median to the base
// is height_sq = leg^2 - (base/2)^2 = (m^2-2n^2)^2 - (mn)^2.
struct IsoscelesParams {
  ExactInt m;
  ExactInt n;
  ExactInt leg;              // m^2 - 2n^2, stored signed
  ExactInt base;             // 2mn
  ExactInt twice_leg_median; // m^2 + 2n^2
  ExactInt height_sq;        // m^4 + 4n^4 - 5 m^2 n^2
};

// m^4 + 4n^4 - 5 m^2 n^2, identically (m^2 - 2n^2)^2 - (mn)^2. Total.
ExactInt height_square(const ExactInt& m, const ExactInt& n);

// Strict constructor: requires m > 0, n > 0, gcd(m, n) = 1, m odd
// (ParameterError), a positive leg and a valid triangle (DegeneracyError).
IsoscelesParams isosceles_from_params(const ExactInt& m, const ExactInt& n);

struct IsoscelesCandidate {
  IsoscelesParams params;
  bool degenerate = false;      // height_sq == 0
  bool valid_triangle = false;  // height_sq > 0, i.e. base < 2*|leg|
  bool witness = false;         // height_sq a positive perfect square
};

struct IsoscelesScan {
  std::uint64_t candidates = 0;
  std::uint64_t valid_triangles = 0;
  std::uint64_t witnesses = 0;
};

// Streams every coprime pair (m, n) with m odd and 1 <= m, n <= bound.
// Pairs with a negative leg value are kept (their triangle realization uses
// |leg|); a witness would be a perfect isosceles triangle.
IsoscelesScan enumerate_isosceles_candidates(
    const ExactInt& bound,
    const std::function<void(const IsoscelesCandidate&)>& visit = {});

// Streams every integer-sided triangle a <= b <= c with perimeter at most
// max_perimeter and rational area, with full metrics. Returns the number of
// triangles visited. Values below 3 yield an empty stream.
std::uint64_t enumerate_heron(
    const ExactInt& max_perimeter,
    const std::function<void(const Triangle&, const TriangleMetrics&)>& visit);

}  // namespace quartica
