#include "quartica/certificate_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace quartica {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json solution_to_json(const Solution& s) {
  ordered_json j;
  j["x"] = to_decimal(s.x);
  j["y"] = to_decimal(s.y);
  j["z"] = to_decimal(s.z);
  j["primitive"] = s.primitive;
  j["trivial"] = s.trivial;
  return j;
}

const ordered_json& require(const ordered_json& j, const char* field) {
  auto it = j.find(field);
  if (it == j.end()) throw FormatError(field, "missing");
  return *it;
}

ExactInt get_int(const ordered_json& j, const std::string& field) {
  const auto& v = require(j, field.c_str());
  if (!v.is_string()) throw FormatError(field, "expected a decimal string");
  return parse_exact_int(v.get<std::string>(), field);
}

bool get_bool(const ordered_json& j, const char* field) {
  const auto& v = require(j, field);
  if (!v.is_boolean()) throw FormatError(field, "expected a boolean");
  return v.get<bool>();
}

std::uint64_t get_count_u64(const ordered_json& j, const std::string& field) {
  const ExactInt v = get_int(j, field);
  if (v < 0 || v > ExactInt(~std::uint64_t(0)))
    throw FormatError(field, "out of range for a counter");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::string certificate_to_json(const SearchCertificate& cert) {
  ordered_json j;
  j["form"] = ordered_json::array(
      {to_decimal(cert.form.a), to_decimal(cert.form.b), to_decimal(cert.form.c)});
  j["bound"] = to_decimal(cert.bound);
  j["coprime_only"] = cert.coprime_only;
  j["exclude_trivial"] = cert.exclude_trivial;
  auto moduli = ordered_json::array();
  for (const auto& m : cert.sieve_moduli) moduli.push_back(to_decimal(m));
  j["sieve_moduli"] = std::move(moduli);
  auto sols = ordered_json::array();
  for (const auto& s : cert.solutions_found) sols.push_back(solution_to_json(s));
  j["solutions_found"] = std::move(sols);
  j["pairs_scanned"] = to_decimal(cert.pairs_scanned);
  j["pairs_sieved_out"] = to_decimal(cert.pairs_sieved_out);
  j["elapsed_ms"] = std::to_string(cert.elapsed_ms);
  j["tool_version"] = cert.tool_version;
  return j.dump(2) + "\n";
}

SearchCertificate certificate_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("<document>", e.what());
  }
  if (!j.is_object()) throw FormatError("<document>", "expected a JSON object");

  SearchCertificate cert;
  const auto& form = require(j, "form");
  if (!form.is_array() || form.size() != 3)
    throw FormatError("form", "expected an array of three decimal strings");
  for (int i = 0; i < 3; ++i) {
    if (!form[i].is_string())
      throw FormatError("form", "expected an array of three decimal strings");
  }
  cert.form.a = parse_exact_int(form[0].get<std::string>(), "form[0]");
  cert.form.b = parse_exact_int(form[1].get<std::string>(), "form[1]");
  cert.form.c = parse_exact_int(form[2].get<std::string>(), "form[2]");
  cert.bound = get_int(j, "bound");
  cert.coprime_only = get_bool(j, "coprime_only");
  cert.exclude_trivial = get_bool(j, "exclude_trivial");

  const auto& moduli = require(j, "sieve_moduli");
  if (!moduli.is_array()) throw FormatError("sieve_moduli", "expected an array");
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (!moduli[i].is_string())
      throw FormatError("sieve_moduli", "expected decimal strings");
    cert.sieve_moduli.push_back(parse_exact_int(
        moduli[i].get<std::string>(), "sieve_moduli[" + std::to_string(i) + "]"));
  }

  const auto& sols = require(j, "solutions_found");
  if (!sols.is_array()) throw FormatError("solutions_found", "expected an array");
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const auto& e = sols[i];
    const std::string where = "solutions_found[" + std::to_string(i) + "]";
    if (!e.is_object()) throw FormatError(where, "expected an object");
    auto member = [&](const char* name) -> const ordered_json& {
      auto it = e.find(name);
      if (it == e.end()) throw FormatError(where + "." + name, "missing");
      return *it;
    };
    auto member_int = [&](const char* name) {
      const auto& v = member(name);
      if (!v.is_string())
        throw FormatError(where + "." + name, "expected a decimal string");
      return parse_exact_int(v.get<std::string>(), where + "." + name);
    };
    auto member_flag = [&](const char* name) {
      const auto& v = member(name);
      if (!v.is_boolean()) throw FormatError(where + "." + name, "expected a boolean");
      return v.get<bool>();
    };
    Solution s;
    s.x = member_int("x");
    s.y = member_int("y");
    s.z = member_int("z");
    s.primitive = member_flag("primitive");
    s.trivial = member_flag("trivial");
    cert.solutions_found.push_back(std::move(s));
  }

  cert.pairs_scanned = get_int(j, "pairs_scanned");
  cert.pairs_sieved_out = get_int(j, "pairs_sieved_out");
  cert.elapsed_ms = get_count_u64(j, "elapsed_ms");
  const auto& tv = require(j, "tool_version");
  if (!tv.is_string()) throw FormatError("tool_version", "expected a string");
  cert.tool_version = tv.get<std::string>();
  return cert;
}

void write_certificate_file(const std::string& path, const SearchCertificate& cert) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << certificate_to_json(cert);
  if (!out) throw Error("failed writing '" + path + "'");
}

SearchCertificate read_certificate_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return certificate_from_json(buf.str());
}

VerifyReport verify_certificate(const SearchCertificate& cert) {
  VerifyReport report;
  if (cert.bound < 1) {
    report.fail("bound: must be >= 1");
    return report;
  }
  if (cert.tool_version.empty()) report.fail("tool_version: empty");

  std::vector<SieveSpec> sieves;
  for (const auto& m : cert.sieve_moduli) {
    try {
      sieves.push_back(build_sieve(cert.form, m));
    } catch (const Error& e) {
      report.fail("sieve_moduli: " + std::string(e.what()));
    }
  }

  const Solution* prev = nullptr;
  for (std::size_t i = 0; i < cert.solutions_found.size(); ++i) {
    const Solution& s = cert.solutions_found[i];
    const std::string where = "solutions_found[" + std::to_string(i) + "]";
    if (s.x < 1 || s.x > cert.bound || s.y < 1 || s.y > cert.bound)
      report.fail(where + ": (x, y) outside the search box");
    if (s.z < 0) report.fail(where + ": z must be canonical nonnegative");
    if (s.z * s.z != eval_form(cert.form, s.x, s.y))
      report.fail(where + ": z^2 does not equal the form value");
    const bool primitive = gcd(s.x, s.y) == 1;
    if (s.primitive != primitive) report.fail(where + ": primitive flag wrong");
    const bool trivial = s.x * s.y * s.z == 0;
    if (s.trivial != trivial) report.fail(where + ": trivial flag wrong");
    if (cert.coprime_only && !primitive)
      report.fail(where + ": non-primitive solution under coprime_only");
    if (cert.exclude_trivial && trivial)
      report.fail(where + ": trivial solution under exclude_trivial");
    for (const auto& sieve : sieves) {
      if (s.x >= 0 && s.y >= 0) {
        const auto m = static_cast<std::uint64_t>(sieve.modulus);
        const auto rx = static_cast<std::uint64_t>(s.x % m);
        const auto ry = static_cast<std::uint64_t>(s.y % m);
        if (!sieve.admissible(rx, ry))
          report.fail(where + ": inadmissible under sieve modulus " +
                      to_decimal(sieve.modulus));
      }
    }
    if (prev && !(prev->x < s.x || (prev->x == s.x && prev->y < s.y)))
      report.fail(where + ": solutions not in strict (x, y) order");
    prev = &s;
  }

  if (cert.pairs_scanned < 0) report.fail("pairs_scanned: negative");
  if (cert.pairs_sieved_out < 0) report.fail("pairs_sieved_out: negative");
  try {
    const ExactInt expected = candidate_pair_count(cert.bound, cert.coprime_only);
    const ExactInt total = cert.pairs_scanned + cert.pairs_sieved_out;
    if (total != expected) {
      report.fail("pairs_scanned + pairs_sieved_out: expected " +
                  to_decimal(expected) + ", got " + to_decimal(total));
    }
  } catch (const Error& e) {
    report.fail(std::string("counter check: ") + e.what());
  }
  return report;
}

}  // namespace quartica
