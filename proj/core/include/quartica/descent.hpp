#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quartica/quartic.hpp"

namespace quartica {

// The two quartic forms the descent argument moves between.
inline QuarticForm source_form() { return QuarticForm{4, -5, 1}; }
inline QuarticForm target_form() { return QuarticForm{1, 10, 9}; }

// Divides out d = gcd(x, y): (x, y, z) -> (x/d, y/d, z/d^2), valid for any
// homogeneous quartic form. Requires z^2 = form(x, y).
Solution normalize(const QuarticForm& f, const Solution& s);

// Maps a solution of g^2 = 4a^4 - 5a^2b^2 + b^4 to a solution of
// z^2 = x^4 + 10x^2y^2 + 9y^4 via (x, y, z) = (g, a*b, |4a^4 - b^4|).
// Nontrivial input yields nontrivial output.
Solution lift_to_1_10_9(const ExactInt& alpha, const ExactInt& beta,
                        const ExactInt& gamma);

// Mod-3 classification for z^2 = x^4 + 10x^2y^2 + 9y^4 with gcd(x, y) = 1:
// one of x, y must be divisible by 3, otherwise the form value is 2 mod 3
// and cannot be a square.
enum class CaseSplit {
  y_divisible_by_3,
  x_divisible_by_3,
  contradiction_mod_3,
};

CaseSplit case_split(const ExactInt& x, const ExactInt& y);

// Replay of the gcd(x^2 - 3y^2, 4xy) = 1 claim with its elimination steps
// (odd primes above 3, the prime 3, powers of two via the mod-4 square
// table). Preconditions: gcd(x, y) = 1, 3 | y, exactly one of x, y even.
// A result other than 1 raises ContractError.
struct ClaimStep {
  std::string name;
  std::string detail;
  bool ok = false;
};

struct ClaimCheck {
  ExactInt gcd_value;
  std::vector<ClaimStep> log;
};

ClaimCheck coprimality_claim_check(const ExactInt& x, const ExactInt& y);

// The 3 | x reduction: (x, y, z) with z^2 = x^4 + 10x^2y^2 + 9y^4 maps to
// (y, x/3, z/3) satisfying the same form (scaling identity
// form(3s, t) = 9 * form(t, s)).
Solution reduce_three_divides_x(const ExactInt& x, const ExactInt& y,
                                const ExactInt& z);

// Step-by-step record of one descent application. Steps are appended only
// after their algebraic identity has been re-verified, so every recorded
// step has identity_checked = true; a failing step raises ContractError
// carrying the step name instead.
struct TraceStep {
  std::string name;
  std::vector<std::pair<std::string, ExactInt>> values;
  bool identity_checked = true;
};

struct DescentTrace {
  Solution input;
  std::vector<TraceStep> steps;
  std::vector<ExactInt> output;
  ExactInt measure_before;
  ExactInt measure_after;
};

// x even, y odd branch: runs the full chain (Pythagorean decomposition of
// z^2 = (x^2-3y^2)^2 + (4xy)^2, four-split of xy = m*n1, the quotient
// equation (a^2+4b^2)c^2 = (a^2+3b^2)d^2, the square split, the conic
// substitution) ending in a strictly smaller solution of the same form;
// the measure is the product x*y. The branch preconditions are
// unsatisfiable (that is the theorem), so on real inputs this raises a
// named ContractError before completing; the chain exists to localize
// which step would break on a hypothetical counterexample.
DescentTrace descend_even_branch(const ExactInt& x, const ExactInt& y,
                                 const ExactInt& z);

// x odd, y even branch: the analogous chain terminating in
// c^2 = x1^4 + x1^2*y1^2 + y1^4.
struct OddBranchResult {
  ExactInt x1;
  ExactInt y1;
  ExactInt c;
};

OddBranchResult branch_odd_case(const ExactInt& x, const ExactInt& y,
                                const ExactInt& z);

// Serialization mirroring the certificate conventions: fixed field order,
// integers as decimal strings.
std::string descent_trace_to_json(const DescentTrace& trace);

}  // namespace quartica
