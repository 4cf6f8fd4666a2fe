#pragma once

#include <string>
#include <vector>

#include "quartica/quartic.hpp"

namespace quartica {

// Flat single-record serialization with a fixed field order and every
// integer rendered as a decimal string, so arbitrary precision survives a
// round trip. UTF-8, one record per file.
std::string certificate_to_json(const SearchCertificate& cert);

// Throws FormatError (with the offending field) on malformed input.
SearchCertificate certificate_from_json(const std::string& text);

void write_certificate_file(const std::string& path, const SearchCertificate& cert);
SearchCertificate read_certificate_file(const std::string& path);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string message) {
    ok = false;
    failures.push_back(std::move(message));
  }
};

// Re-evaluates every claimed solution, re-checks the counter arithmetic
// against the candidate-pair count, and re-derives the sieve admissible
// sets to confirm no listed solution contradicts a listed sieve.
VerifyReport verify_certificate(const SearchCertificate& cert);

}  // namespace quartica
