#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quartica/quartic.hpp"

namespace quartica {

enum class Command {
  search_quartic,
  search_heron,
  search_isosceles,
  verify_cert,
  identity_fuzz,
};

enum class OutputFormat { certificate, csv };

// Every run is fully determined by its config plus the tool version;
// artifacts are byte-identical across runs except for elapsed_ms.
struct RunConfig {
  Command command = Command::search_quartic;
  QuarticForm form{0, 0, 0};
  ExactInt bound = 0;          // search-quartic / search-isosceles
  ExactInt max_perimeter = 0;  // search-heron
  std::vector<ExactInt> sieve_moduli{3, 4};
  unsigned workers = 0;
  bool coprime_only = true;
  bool exclude_trivial = true;
  std::uint64_t seed = 0;           // identity-fuzz
  std::uint64_t iters = 100000;     // identity-fuzz
  std::string output_path;
  std::string input_path;  // verify-cert
  OutputFormat output_format = OutputFormat::certificate;
};

// Executes one command, writing artifacts and a human summary to `log`.
// Exit status: 0 all checks pass / nothing found, 2 findings present
// (nontrivial solutions, a perfect triangle, a failed identity, a rejected
// certificate), 1 usage or configuration error.
int run(const RunConfig& config, std::ostream& log);

// One CSV row per Heron triangle, sorted by perimeter then lexicographic
// sides. Returns the number of rows written.
std::uint64_t emit_heron_report(const ExactInt& max_perimeter, std::ostream& out,
                                std::uint64_t* perfect_count = nullptr);

}  // namespace quartica
