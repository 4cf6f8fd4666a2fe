#include "quartica/runner.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <tuple>

#include "quartica/certificate_io.hpp"
#include "quartica/identity_fuzz.hpp"
#include "quartica/triangle.hpp"

namespace quartica {

namespace {

// The squared height of the isosceles parametrization as a quartic form in
// (m, n): m^4 - 5m^2n^2 + 4n^4.
const QuarticForm kHeightForm{1, -5, 4};

std::string form_text(const QuarticForm& f) {
  return to_decimal(f.a) + "," + to_decimal(f.b) + "," + to_decimal(f.c);
}

SearchOptions options_from(const RunConfig& config) {
  SearchOptions opts;
  opts.coprime_only = config.coprime_only;
  opts.exclude_trivial = config.exclude_trivial;
  opts.sieve_moduli = config.sieve_moduli;
  opts.workers = config.workers;
  return opts;
}

void require_output_path(const RunConfig& config) {
  if (config.output_path.empty())
    throw ParameterError("an output path is required (--out)");
}

int cmd_search_quartic(const RunConfig& config, std::ostream& log) {
  require_output_path(config);
  const SearchCertificate cert = search(config.form, config.bound, options_from(config));
  write_certificate_file(config.output_path, cert);
  const std::size_t nontrivial = count_nontrivial(cert);
  log << "search-quartic form=" << form_text(cert.form) << " bound="
      << to_decimal(cert.bound) << "\n"
      << "  pairs scanned " << to_decimal(cert.pairs_scanned) << ", sieved out "
      << to_decimal(cert.pairs_sieved_out) << ", elapsed " << cert.elapsed_ms
      << " ms\n"
      << "  solutions " << cert.solutions_found.size() << " (" << nontrivial
      << " nontrivial)\n"
      << "  certificate written to " << config.output_path << "\n";
  return nontrivial > 0 ? 2 : 0;
}

int cmd_search_isosceles(const RunConfig& config, std::ostream& log) {
  require_output_path(config);
  // The certificate covers the full coprime box for the height form; any
  // witness generator pair would appear there as a nontrivial solution.
  const SearchCertificate cert = search(kHeightForm, config.bound, options_from(config));
  write_certificate_file(config.output_path, cert);
  const IsoscelesScan scan = enumerate_isosceles_candidates(config.bound);
  const std::size_t nontrivial = count_nontrivial(cert);
  log << "search-isosceles bound=" << to_decimal(config.bound) << "\n"
      << "  height-form certificate: " << cert.solutions_found.size()
      << " solutions (" << nontrivial << " nontrivial), pairs scanned "
      << to_decimal(cert.pairs_scanned) << ", sieved out "
      << to_decimal(cert.pairs_sieved_out) << "\n"
      << "  generator pairs " << scan.candidates << ", valid triangles "
      << scan.valid_triangles << ", witnesses " << scan.witnesses << "\n"
      << "  certificate written to " << config.output_path << "\n";
  return (nontrivial > 0 || scan.witnesses > 0) ? 2 : 0;
}

int cmd_search_heron(const RunConfig& config, std::ostream& log) {
  require_output_path(config);
  std::ofstream out(config.output_path, std::ios::binary);
  if (!out) throw Error("cannot open '" + config.output_path + "' for writing");
  std::uint64_t perfect = 0;
  const std::uint64_t rows = emit_heron_report(config.max_perimeter, out, &perfect);
  if (!out) throw Error("failed writing '" + config.output_path + "'");
  log << "search-heron max-perimeter=" << to_decimal(config.max_perimeter)
      << "\n  " << rows << " Heron triangles, " << perfect
      << " perfect\n  report written to " << config.output_path << "\n";
  return perfect > 0 ? 2 : 0;
}

int cmd_verify_cert(const RunConfig& config, std::ostream& log) {
  if (config.input_path.empty())
    throw ParameterError("verify-cert requires a certificate path");
  const SearchCertificate cert = read_certificate_file(config.input_path);
  const VerifyReport report = verify_certificate(cert);
  if (report.ok) {
    log << "verify-cert " << config.input_path << ": OK ("
        << cert.solutions_found.size() << " solutions, bound "
        << to_decimal(cert.bound) << ")\n";
    return 0;
  }
  log << "verify-cert " << config.input_path << ": REJECTED\n";
  for (const auto& f : report.failures) log << "  " << f << "\n";
  return 2;
}

int cmd_identity_fuzz(const RunConfig& config, std::ostream& log) {
  const auto reports = run_identity_fuzz(config.seed, config.iters);
  std::uint64_t failures = 0;
  std::ostringstream summary;
  for (const auto& r : reports) {
    failures += r.failures;
    summary << r.name << ": " << r.samples << " samples, " << r.failures
            << " failures";
    if (!r.first_failure.empty()) summary << " (" << r.first_failure << ")";
    summary << "\n";
  }
  log << "identity-fuzz seed=" << config.seed << " iters=" << config.iters
      << "\n"
      << summary.str();
  if (!config.output_path.empty()) {
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) throw Error("cannot open '" + config.output_path + "' for writing");
    out << summary.str();
  }
  return failures > 0 ? 2 : 0;
}

}  // namespace

std::uint64_t emit_heron_report(const ExactInt& max_perimeter, std::ostream& out,
                                std::uint64_t* perfect_count) {
  struct Row {
    std::uint64_t perimeter;
    std::uint64_t a, b, c;
    std::string text;
    bool perfect;
  };
  std::vector<Row> rows;
  enumerate_heron(max_perimeter, [&](const Triangle& t, const TriangleMetrics& m) {
    Row row;
    row.a = static_cast<std::uint64_t>(boost::multiprecision::numerator(t.a));
    row.b = static_cast<std::uint64_t>(boost::multiprecision::numerator(t.b));
    row.c = static_cast<std::uint64_t>(boost::multiprecision::numerator(t.c));
    row.perimeter = row.a + row.b + row.c;
    row.perfect = m.perfect;
    const auto area = rational_area(m);
    std::ostringstream line;
    line << row.a << "," << row.b << "," << row.c << ","
         << to_decimal(m.area_sq_times16) << ","
         << (area ? to_decimal(*area) : std::string("0")) << ","
         << to_decimal(m.median_sq_a) << "," << to_decimal(m.median_sq_b) << ","
         << to_decimal(m.median_sq_c) << "," << m.rational_median_count << ","
         << (m.isosceles ? 1 : 0) << "," << (m.perfect ? 1 : 0) << "\n";
    row.text = line.str();
    rows.push_back(std::move(row));
  });
  std::sort(rows.begin(), rows.end(), [](const Row& lhs, const Row& rhs) {
    return std::tie(lhs.perimeter, lhs.a, lhs.b, lhs.c) <
           std::tie(rhs.perimeter, rhs.a, rhs.b, rhs.c);
  });
  out << "a,b,c,area_sq_times16,area,median_sq_a,median_sq_b,median_sq_c,"
         "rational_median_count,isosceles,perfect\n";
  std::uint64_t perfect = 0;
  for (const auto& row : rows) {
    out << row.text;
    if (row.perfect) ++perfect;
  }
  if (perfect_count) *perfect_count = perfect;
  return rows.size();
}

int run(const RunConfig& config, std::ostream& log) {
  try {
    switch (config.command) {
      case Command::search_quartic:
        return cmd_search_quartic(config, log);
      case Command::search_heron:
        return cmd_search_heron(config, log);
      case Command::search_isosceles:
        return cmd_search_isosceles(config, log);
      case Command::verify_cert:
        return cmd_verify_cert(config, log);
      case Command::identity_fuzz:
        return cmd_identity_fuzz(config, log);
    }
    throw ParameterError("unknown command");
  } catch (const Error& e) {
    log << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace quartica
