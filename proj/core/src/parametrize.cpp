#include "quartica/parametrize.hpp"

namespace quartica {

namespace {

bool even(const ExactInt& v) { return v % 2 == 0; }

// Positive divisors of v in ascending order (trial division up to sqrt).
std::vector<ExactInt> divisors(const ExactInt& v) {
  std::vector<ExactInt> low, high;
  for (ExactInt d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      low.push_back(d);
      ExactInt other = v / d;
      if (other != d) high.push_back(other);
    }
  }
  for (auto it = high.rbegin(); it != high.rend(); ++it) low.push_back(*it);
  return low;
}

}  // namespace

PythTriple primitive_pythagorean(const ExactInt& m, const ExactInt& n) {
  if (!(m > n && n > 0))
    throw ParameterError("generators must satisfy m > n > 0");
  if (gcd(m, n) != 1) throw ParameterError("generators must be coprime");
  if (even(m) == even(n))
    throw ParameterError("generators must have opposite parity");
  PythTriple t;
  t.gen_m = m;
  t.gen_n = n;
  t.leg_odd = m * m - n * n;
  t.leg_even = 2 * m * n;
  t.hyp = m * m + n * n;
  return t;
}

PythTriple pythagorean_decompose(const ExactInt& x, const ExactInt& y,
                                 const ExactInt& z) {
  if (x <= 0 || y <= 0 || z <= 0)
    throw DecompositionError("triple members must be positive");
  if (x * x + y * y != z * z)
    throw DecompositionError("not a Pythagorean triple");
  if (gcd(x, y) != 1) throw DecompositionError("triple is not primitive");
  if (even(x) == even(y))
    throw DecompositionError("exactly one leg must be even");
  const ExactInt& odd = even(x) ? y : x;
  const ExactInt& evn = even(x) ? x : y;
  // m^2 = (z + odd)/2, n^2 = (z - odd)/2 for the unique generators.
  auto m = isqrt_exact((z + odd) / 2);
  auto n = isqrt_exact((z - odd) / 2);
  if (!m || !n || 2 * (*m) * (*n) != evn)
    throw DecompositionError("no generator pair reproduces the triple");
  return primitive_pythagorean(*m, *n);
}

FourSplit four_split(const ExactInt& x, const ExactInt& y, const ExactInt& z,
                     const ExactInt& t) {
  if (x <= 0 || y <= 0 || z <= 0 || t <= 0)
    throw ParameterError("four-split requires positive inputs");
  if (x * y != z * t) throw ParameterError("four-split requires x*y = z*t");
  FourSplit s;
  s.a = gcd(x, z);
  s.c = x / s.a;
  s.d = z / s.a;
  // From x*y = z*t: y = (d/c') ... d | y since gcd(c, d) = 1 and d | c*y.
  if (y % s.d != 0)
    throw ConsistencyError("four-split: d does not divide y");
  s.b = y / s.d;
  if (s.a * s.c != x || s.b * s.d != y || s.a * s.d != z || s.b * s.c != t)
    throw ConsistencyError("four-split: reconstruction identities fail");
  return s;
}

ConicPoint conic_generate(const ConicParam& param) {
  if (param.d < 1) throw ParameterError("conic coefficient must be >= 1");
  if (param.p < 1 || param.q < 1 || param.p * param.q != param.d)
    throw ParameterError("factors must be positive with p*q = D");
  if (param.m < 1 || param.n < 1)
    throw ParameterError("generators must be positive");
  if (gcd(param.p * param.m, param.q * param.n) != 1)
    throw ParameterError("generators must satisfy gcd(p*m, q*n) = 1");
  const ExactInt pm2 = param.p * param.m * param.m;
  const ExactInt qn2 = param.q * param.n * param.n;
  ConicPoint out;
  if (param.parity == ConicParity::dy_odd) {
    if (even(param.d * param.m * param.n))
      throw ParameterError("dy_odd case requires D*m*n odd");
    if (!even(pm2 - qn2))
      throw ParameterError("dy_odd case requires p*m^2 - q*n^2 even");
    out.x = (pm2 - qn2) / 2;
    out.y = param.m * param.n;
    out.z = (pm2 + qn2) / 2;
  } else {
    out.x = pm2 - qn2;
    out.y = 2 * param.m * param.n;
    out.z = pm2 + qn2;
  }
  if (out.z * out.z != param.d * out.y * out.y + out.x * out.x)
    throw ConsistencyError("conic identity z^2 = D*y^2 + x^2 fails");
  return out;
}

std::vector<ConicParam> conic_decompose(const ExactInt& d, const ExactInt& x,
                                        const ExactInt& y, const ExactInt& z) {
  if (d < 1) throw DecompositionError("conic coefficient must be >= 1");
  if (y < 1 || z < 1) throw DecompositionError("y and z must be positive");
  if (z * z != d * y * y + x * x)
    throw DecompositionError("not a point on z^2 = D*y^2 + x^2");
  const ExactInt dy = d * y;
  ExactInt ax = x < 0 ? -x : x;
  if (gcd(ax, dy) != 1 && gcd(z, dy) != 1)
    throw DecompositionError("requires gcd(x, Dy) = 1 or gcd(z, Dy) = 1");

  ConicParity parity;
  ExactInt product;  // m*n
  if (!even(dy)) {
    parity = ConicParity::dy_odd;
    product = y;
  } else if (even(y)) {
    parity = ConicParity::dy_even;
    product = y / 2;
  } else {
    // D even with y odd admits no representation under the gcd hypothesis.
    throw ConsistencyError("no parity case covers D*y even with y odd");
  }

  std::vector<ConicParam> out;
  for (const ExactInt& p : divisors(d)) {
    const ExactInt q = d / p;
    for (const ExactInt& m : divisors(product)) {
      const ExactInt n = product / m;
      if (gcd(p * m, q * n) != 1) continue;
      ConicParam param{d, p, q, m, n, parity};
      const ExactInt pm2 = p * m * m;
      const ExactInt qn2 = q * n * n;
      if (parity == ConicParity::dy_odd) {
        if (!even(pm2 - qn2)) continue;
        if ((pm2 - qn2) / 2 != x || (pm2 + qn2) / 2 != z) continue;
      } else {
        if (pm2 - qn2 != x || pm2 + qn2 != z) continue;
      }
      out.push_back(std::move(param));
    }
  }
  if (out.empty())
    throw ConsistencyError("no (p, q, m, n) reproduces the given point");
  return out;
}

}  // namespace quartica
