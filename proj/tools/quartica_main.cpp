#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quartica/runner.hpp"
#include "quartica/version.hpp"

namespace {

using quartica::ExactInt;

ExactInt parse_number(const std::string& text, const std::string& what) {
  return quartica::parse_exact_int(text, what);
}

std::vector<ExactInt> parse_list(const std::string& text, const std::string& what) {
  std::vector<ExactInt> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(parse_number(item, what));
  if (out.empty()) throw quartica::ParameterError(what + ": empty list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quartic Diophantine search and certification"};
  app.set_version_flag("--version", quartica::kToolVersion);
  app.require_subcommand(1);

  std::string form_text, bound_text, perimeter_text, sieve_text = "3,4";
  std::string out_path, cert_path;
  unsigned workers = 0;
  bool allow_noncoprime = false, include_trivial = false;
  std::uint64_t seed = 0, iters = 100000;

  auto* sq = app.add_subcommand("search-quartic",
                                "Exhaustive coprime search of z^2 = a*x^4 + b*x^2*y^2 + c*y^4");
  sq->add_option("--form", form_text, "Coefficients a,b,c")->required();
  sq->add_option("--bound", bound_text, "Closed box 1..N x 1..N")->required();
  sq->add_option("--sieve", sieve_text, "Residue sieve moduli (default 3,4)");
  sq->add_option("--workers", workers, "Worker threads (0 = auto)");
  sq->add_flag("--allow-noncoprime", allow_noncoprime,
               "Scan all pairs, not just coprime ones");
  sq->add_flag("--include-trivial", include_trivial,
               "Record solutions with x*y*z = 0");
  sq->add_option("--out", out_path, "Certificate output path")->required();

  auto* sh = app.add_subcommand("search-heron",
                                "Enumerate integer Heron triangles with exact metrics");
  sh->add_option("--max-perimeter", perimeter_text, "Perimeter limit")->required();
  sh->add_option("--out", out_path, "CSV output path")->required();

  auto* si = app.add_subcommand("search-isosceles",
                                "Scan isosceles generator pairs for a perfect triangle");
  si->add_option("--bound", bound_text, "Generator bound")->required();
  si->add_option("--sieve", sieve_text, "Residue sieve moduli (default 3,4)");
  si->add_option("--workers", workers, "Worker threads (0 = auto)");
  si->add_option("--out", out_path, "Certificate output path")->required();

  auto* vc = app.add_subcommand("verify-cert", "Re-check a search certificate");
  vc->add_option("path", cert_path, "Certificate file")->required();

  auto* fz = app.add_subcommand("identity-fuzz",
                                "Fuzz the descent identities with exact arithmetic");
  fz->add_option("--seed", seed, "Generator seed");
  fz->add_option("--iters", iters, "Samples per identity family");
  fz->add_option("--out", out_path, "Optional summary output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  quartica::RunConfig config;
  try {
    if (sq->parsed()) {
      config.command = quartica::Command::search_quartic;
      const auto coeffs = parse_list(form_text, "--form");
      if (coeffs.size() != 3)
        throw quartica::ParameterError("--form expects exactly three coefficients");
      config.form = quartica::QuarticForm{coeffs[0], coeffs[1], coeffs[2]};
      config.bound = parse_number(bound_text, "--bound");
      config.sieve_moduli = parse_list(sieve_text, "--sieve");
      config.workers = workers;
      config.coprime_only = !allow_noncoprime;
      config.exclude_trivial = !include_trivial;
      config.output_path = out_path;
    } else if (sh->parsed()) {
      config.command = quartica::Command::search_heron;
      config.max_perimeter = parse_number(perimeter_text, "--max-perimeter");
      config.output_path = out_path;
      config.output_format = quartica::OutputFormat::csv;
    } else if (si->parsed()) {
      config.command = quartica::Command::search_isosceles;
      config.bound = parse_number(bound_text, "--bound");
      config.sieve_moduli = parse_list(sieve_text, "--sieve");
      config.workers = workers;
      config.output_path = out_path;
    } else if (vc->parsed()) {
      config.command = quartica::Command::verify_cert;
      config.input_path = cert_path;
    } else if (fz->parsed()) {
      config.command = quartica::Command::identity_fuzz;
      config.seed = seed;
      config.iters = iters;
      config.output_path = out_path;
    }
  } catch (const quartica::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  return quartica::run(config, std::cout);
}
