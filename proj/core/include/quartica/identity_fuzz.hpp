#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quartica {

// One fuzzed identity family. All comparisons are exact; a single failure
// would falsify a step of the descent argument.
struct FuzzReport {
  std::string name;
  std::uint64_t samples = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // empty when clean
};

// Runs the five identity families `iters` times each with a deterministic
// generator: the lift identity, the scale-by-3 identity, the
// gcd(a^2+4b^2, a^2+3b^2) = 1 property, the Pythagorean decomposition
// identity, and the odd-branch expansion identity.
std::vector<FuzzReport> run_identity_fuzz(std::uint64_t seed, std::uint64_t iters);

}  // namespace quartica
