#include "quartica/triangle.hpp"

#include <algorithm>
#include <numeric>

namespace quartica {

namespace {

constexpr std::uint32_t kMaxEnumeration = 0x7fffffffu;

std::uint32_t small_bound(const ExactInt& v, const char* what) {
  if (v > kMaxEnumeration)
    throw ParameterError(std::string(what) + " is capped at 2^31-1");
  if (v < 0) throw ParameterError(std::string(what) + " must be nonnegative");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

void validate(const Triangle& t) {
  if (t.a <= 0 || t.b <= 0 || t.c <= 0)
    throw ValidationError("triangle sides must be positive");
  if (t.a >= t.b + t.c || t.b >= t.a + t.c || t.c >= t.a + t.b)
    throw ValidationError("strict triangle inequality fails");
}

TriangleMetrics metrics(const Triangle& t) {
  validate(t);
  const ExactRational a2 = t.a * t.a, b2 = t.b * t.b, c2 = t.c * t.c;
  TriangleMetrics m;
  m.median_sq_a = (2 * b2 + 2 * c2 - a2) / 4;
  m.median_sq_b = (2 * a2 + 2 * c2 - b2) / 4;
  m.median_sq_c = (2 * a2 + 2 * b2 - c2) / 4;
  m.area_sq_times16 =
      2 * a2 * b2 + 2 * b2 * c2 + 2 * c2 * a2 - a2 * a2 - b2 * b2 - c2 * c2;
  m.rational_median_count = 0;
  for (const auto* med : {&m.median_sq_a, &m.median_sq_b, &m.median_sq_c}) {
    if (rational_square_root(*med)) ++m.rational_median_count;
  }
  m.area_rational = rational_square_root(m.area_sq_times16).has_value();
  m.isosceles = (t.a == t.b) || (t.b == t.c) || (t.a == t.c);
  m.perfect = (m.rational_median_count == 3) && m.area_rational;
  return m;
}

std::optional<ExactRational> rational_area(const TriangleMetrics& m) {
  auto root = rational_square_root(m.area_sq_times16);
  if (!root) return std::nullopt;
  return *root / 4;
}

ExactInt height_square(const ExactInt& m, const ExactInt& n) {
  const ExactInt m2 = m * m, n2 = n * n;
  return m2 * m2 + 4 * n2 * n2 - 5 * m2 * n2;
}

IsoscelesParams isosceles_from_params(const ExactInt& m, const ExactInt& n) {
  if (m <= 0 || n <= 0) throw ParameterError("generators must be positive");
  if (gcd(m, n) != 1) throw ParameterError("generators must be coprime");
  if (m % 2 == 0) throw ParameterError("generator m must be odd");
  IsoscelesParams p;
  p.m = m;
  p.n = n;
  p.leg = m * m - 2 * n * n;
  p.base = 2 * m * n;
  p.twice_leg_median = m * m + 2 * n * n;
  p.height_sq = height_square(m, n);
  if (p.leg <= 0) throw DegeneracyError("leg m^2 - 2n^2 is not positive");
  if (p.base >= 2 * p.leg)
    throw DegeneracyError("triangle inequality fails: base >= 2*leg");
  return p;
}

IsoscelesScan enumerate_isosceles_candidates(
    const ExactInt& bound,
    const std::function<void(const IsoscelesCandidate&)>& visit) {
  if (bound < 1) throw ParameterError("bound must be >= 1");
  const std::uint32_t limit = small_bound(bound, "bound");
  IsoscelesScan scan;
  for (std::uint64_t m = 1; m <= limit; m += 2) {
    for (std::uint64_t n = 1; n <= limit; ++n) {
      if (std::gcd(m, n) != 1) continue;
      // |leg| <= 2*bound^2 < 2^63, so leg^2 and m^2*n^2 both fit __int128.
      const __int128 m2 = static_cast<__int128>(m) * m;
      const __int128 n2 = static_cast<__int128>(n) * n;
      const __int128 leg = m2 - 2 * n2;
      const __int128 h = leg * leg - m2 * n2;
      ++scan.candidates;
      bool witness = false;
      if (h > 0) {
        ++scan.valid_triangles;
        const auto uh = static_cast<unsigned __int128>(h);
        const auto root = isqrt_floor_u128(uh);
        witness = (root * root == uh);
        if (witness) ++scan.witnesses;
      }
      if (visit) {
        IsoscelesCandidate cand;
        cand.params.m = m;
        cand.params.n = n;
        cand.params.leg = ExactInt(leg);
        cand.params.base = ExactInt(2 * static_cast<__int128>(m) * n);
        cand.params.twice_leg_median = ExactInt(m2 + 2 * n2);
        cand.params.height_sq = ExactInt(h);
        cand.degenerate = (h == 0);
        cand.valid_triangle = (h > 0);
        cand.witness = witness;
        visit(cand);
      }
    }
  }
  return scan;
}

std::uint64_t enumerate_heron(
    const ExactInt& max_perimeter,
    const std::function<void(const Triangle&, const TriangleMetrics&)>& visit) {
  const std::uint32_t limit = small_bound(max_perimeter, "max_perimeter");
  std::uint64_t count = 0;
  for (std::uint64_t a = 1; 3 * a <= limit; ++a) {
    for (std::uint64_t b = a; a + 2 * b <= limit; ++b) {
      // c < a + b keeps the triangle nondegenerate.
      for (std::uint64_t c = b; c < a + b && a + b + c <= limit; ++c) {
        const __int128 s16 = static_cast<__int128>(a + b + c) *
                             static_cast<__int128>(b + c - a) *
                             static_cast<__int128>(a - b + c) *
                             static_cast<__int128>(a + b - c);
        if (s16 <= 0) continue;
        const auto u = static_cast<unsigned __int128>(s16);
        const auto root = isqrt_floor_u128(u);
        if (root * root != u) continue;
        Triangle t{ExactRational(a), ExactRational(b), ExactRational(c)};
        ++count;
        if (visit) visit(t, metrics(t));
      }
    }
  }
  return count;
}

}  // namespace quartica
