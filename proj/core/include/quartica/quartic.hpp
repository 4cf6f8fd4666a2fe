#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "quartica/exact.hpp"

namespace quartica {

// Homogeneous quartic form a*x^4 + b*x^2*y^2 + c*y^4.
struct QuarticForm {
  ExactInt a;
  ExactInt b;
  ExactInt c;

  bool operator==(const QuarticForm&) const = default;
};

ExactInt eval_form(const QuarticForm& f, const ExactInt& x, const ExactInt& y);

// A solution triple of z^2 = form(x, y). z is canonicalized nonnegative.
struct Solution {
  ExactInt x;
  ExactInt y;
  ExactInt z;
  bool primitive = false;  // gcd(x, y) == 1
  bool trivial = false;    // x * y * z == 0

  bool operator==(const Solution&) const = default;
};

// Residue-pair filter modulo a small modulus: a pair (x mod m, y mod m) is
// admissible iff form(x, y) mod m is a square residue (0 included).
// Admissibility is a necessary condition for form(x, y) being a perfect
// square, so sieving never removes a solution.
struct SieveSpec {
  ExactInt modulus;
  std::vector<std::uint8_t> table;  // row-major m*m flags

  bool admissible(std::uint64_t rx, std::uint64_t ry) const {
    const auto m = static_cast<std::uint64_t>(modulus);
    return table[rx * m + ry] != 0;
  }
  std::size_t admissible_count() const;
};

// Builds the full residue-pair table for 2 <= modulus <= 4096.
SieveSpec build_sieve(const QuarticForm& f, const ExactInt& modulus);

enum class SearchKernel {
  automatic,  // wide when every form value fits a 128-bit signed integer
  wide,
  big,
};

enum class CoprimeFilter {
  automatic,    // factor mask while the prime table fits, else per-pair gcd
  factor_mask,  // per-row mask from the prime factors of x
  pair_gcd,
};

struct SearchOptions {
  bool coprime_only = true;
  bool exclude_trivial = true;
  std::vector<ExactInt> sieve_moduli{3, 4};
  std::size_t chunk_size = 64;  // rows of x per work unit
  unsigned workers = 0;         // 0 = hardware concurrency
  SearchKernel kernel = SearchKernel::automatic;
  CoprimeFilter coprime_filter = CoprimeFilter::automatic;
};

// Machine-checkable record of one exhaustive search over the closed box
// 1..bound x 1..bound. pairs_scanned counts pairs whose form value reached
// the exact squareness test; pairs_sieved_out counts pairs rejected by a
// residue sieve or by a negative form value. Their sum equals the candidate
// count for the stated bound and coprimality setting.
struct SearchCertificate {
  QuarticForm form;
  ExactInt bound;
  bool coprime_only = true;
  bool exclude_trivial = true;
  std::vector<ExactInt> sieve_moduli;
  std::vector<Solution> solutions_found;
  ExactInt pairs_scanned;
  ExactInt pairs_sieved_out;
  std::uint64_t elapsed_ms = 0;
  std::string tool_version;
};

// Exhaustive, deterministic search; the certificate is identical across
// worker counts and chunk sizes except for elapsed_ms.
SearchCertificate search(const QuarticForm& f, const ExactInt& bound,
                         const SearchOptions& options = {});

// Number of ordered candidate pairs in the box: bound^2, or the number of
// coprime ordered pairs (2*sum_{k<=bound} phi(k) - 1) when coprime_only.
ExactInt candidate_pair_count(const ExactInt& bound, bool coprime_only);

std::size_t count_nontrivial(const SearchCertificate& cert);

}  // namespace quartica
