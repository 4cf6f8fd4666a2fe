#pragma once

#include <vector>

#include "quartica/exact.hpp"

namespace quartica {

// Primitive Pythagorean triple with its generator pair:
// leg_odd = m^2 - n^2, leg_even = 2mn, hyp = m^2 + n^2.
struct PythTriple {
  ExactInt leg_odd;
  ExactInt leg_even;
  ExactInt hyp;
  ExactInt gen_m;
  ExactInt gen_n;
};

// Requires m > n > 0, gcd(m, n) = 1, opposite parity (ParameterError).
PythTriple primitive_pythagorean(const ExactInt& m, const ExactInt& n);

// Recovers the unique generators of a primitive triple x^2 + y^2 = z^2 with
// gcd(x, y) = 1 and exactly one of x, y even. Throws DecompositionError on
// non-primitive or non-Pythagorean input.
PythTriple pythagorean_decompose(const ExactInt& x, const ExactInt& y,
                                 const ExactInt& z);

// Multiplicative four-split of x*y = z*t: x = a*c, y = b*d, z = a*d,
// t = b*c, built canonically from a = gcd(x, z). When gcd(x, y) =
// gcd(z, t) = 1 the four parts are pairwise coprime.
struct FourSplit {
  ExactInt a;
  ExactInt b;
  ExactInt c;
  ExactInt d;
};

FourSplit four_split(const ExactInt& x, const ExactInt& y, const ExactInt& z,
                     const ExactInt& t);

// Parametrization of z^2 = D*y^2 + x^2 with gcd(x, Dy) = 1 or gcd(z, Dy) = 1.
// The parity case decides the shape:
//   dy_odd:  2x = p*m^2 - q*n^2, y = m*n,  2z = p*m^2 + q*n^2
//   dy_even:  x = p*m^2 - q*n^2, y = 2*m*n, z = p*m^2 + q*n^2
// with p*q = D and gcd(p*m, q*n) = 1. Generators are normalized positive;
// x may come out negative and is kept signed.
enum class ConicParity { dy_odd, dy_even };

struct ConicParam {
  ExactInt d;  // the coefficient D
  ExactInt p;
  ExactInt q;
  ExactInt m;
  ExactInt n;
  ConicParity parity = ConicParity::dy_even;
};

struct ConicPoint {
  ExactInt x;
  ExactInt y;
  ExactInt z;

  bool operator==(const ConicPoint&) const = default;
};

// Validates the parameter invariants; in the dy_odd case p*m^2 - q*n^2 must
// be even for x to be integral (ParameterError otherwise).
ConicPoint conic_generate(const ConicParam& param);

// Every (p, q, m, n) with p*q = D (both orders, positive factors)
// reproducing (x, y, z) under the applicable parity case. Throws
// DecompositionError when the preconditions fail and ConsistencyError when
// no representation exists.
std::vector<ConicParam> conic_decompose(const ExactInt& d, const ExactInt& x,
                                        const ExactInt& y, const ExactInt& z);

}  // namespace quartica
