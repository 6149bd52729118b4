// Command-line front end: single queries, exhaustive sweeps and the quaternion-type table.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cliffcent/centralizer.hpp"
#include "cliffcent/closed_forms.hpp"
#include "cliffcent/subspace.hpp"
#include "cliffcent/verify.hpp"

namespace {

using namespace cliffcent;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;

struct CliConfig {
  std::string signature;
  std::string subspace;
  std::string kind = "plain";
  std::string format = "text";
  std::string output;
  int max_dim = 7;
  std::string targets = "all";
  std::vector<std::string> kinds;
  int nullspace_max_dim = 6;
  unsigned threads = 0;
};

std::string join_blades(const Subspace& s) {
  std::string out;
  for (Blade b : s.blades()) {
    if (!out.empty()) out += ", ";
    out += format_blade(b);
  }
  return out;
}

int default_max_dim() {
  if (const char* env = std::getenv("CLIFFCENT_MAX_DIM")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("CLIFFCENT_MAX_DIM is not an integer: '") + env + "'");
    }
  }
  return 7;
}

int cmd_centralizer(const CliConfig& cfg, std::ostream& out) {
  const Signature sig = parse_signature(cfg.signature);
  const SubspaceSpec spec = parse_subspace_spec(cfg.subspace);
  const CentralizerKind kind = parse_kind(cfg.kind);
  const VerifyReport report = verify_case(sig, spec, kind, VerifyOptions{cfg.nullspace_max_dim});

  if (cfg.format == "json") {
    nlohmann::json j = {{"signature", signature_to_json(sig)},
                        {"kind", kind_name(kind)},
                        {"subspace", spec.text},
                        {"blades", blades_to_json(report.brute_force)},
                        {"match", report.match()}};
    if (report.closed_form) j["closed_form"] = report.closed_form_name;
    out << j.dump() << '\n';
  } else {
    out << join_blades(report.brute_force) << '\n';
    if (report.closed_form) out << "closed form (" << report.closed_form_name << "): "
                                << (report.blades_match() ? "agrees" : "DISAGREES") << '\n';
    for (const CheckResult& c : report.checks)
      if (!c.passed) out << "check " << c.name << " failed" << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
  }
  return report.match() ? kExitOk : kExitMismatch;
}

int cmd_center(const CliConfig& cfg, std::ostream& out) {
  const Signature sig = parse_signature(cfg.signature);
  const Subspace brute = brute_force_centralizer(full_algebra(sig), CentralizerKind::Plain);
  const Subspace closed = center_closed_form(sig);
  const bool match = brute == closed;
  if (cfg.format == "json") {
    out << nlohmann::json{{"signature", signature_to_json(sig)},
                          {"kind", "plain"},
                          {"subspace", "all"},
                          {"blades", blades_to_json(brute)},
                          {"match", match}}
               .dump()
        << '\n';
  } else {
    out << join_blades(brute) << '\n';
    out << "closed form (center): " << (match ? "agrees" : "DISAGREES") << '\n';
  }
  return match ? kExitOk : kExitMismatch;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  if (cfg.max_dim > kSweepMaxDimension) {
    std::cerr << "error: --max-dim " << cfg.max_dim << " exceeds the limit of " << kSweepMaxDimension << '\n';
    return kExitError;
  }
  SweepOptions options;
  options.targets = parse_target_set(cfg.targets);
  if (!cfg.kinds.empty()) {
    options.kinds.clear();
    for (const auto& k : cfg.kinds) options.kinds.push_back(parse_kind(k));
  }
  options.nullspace_max_n = cfg.nullspace_max_dim;
  options.threads = cfg.threads;
  const SweepResult result = sweep_verify(cfg.max_dim, options);

  if (cfg.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const VerifyReport& r : result.reports) arr.push_back(report_to_json(r));
    out << arr.dump(2) << '\n';
  } else {
    for (const VerifyReport& r : result.reports) {
      out << r.signature.to_string() << ' ' << kind_name(r.kind) << ' ' << r.target << ": "
          << (r.match() ? "MATCH" : "MISMATCH") << " (" << r.brute_force.size() << " blades)\n";
      for (const CheckResult& c : r.checks)
        if (!c.passed) out << "  " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    }
    const std::size_t bad = result.mismatches();
    out << (bad == 0 ? "PASS" : "FAIL") << ": " << result.reports.size() << " cases, " << bad << " mismatches\n";
  }
  return result.mismatches() == 0 ? kExitOk : kExitMismatch;
}

int cmd_table1(const CliConfig& cfg, std::ostream& out) {
  const Signature sig = parse_signature(cfg.signature);
  const auto rows = evaluate_table1(sig);
  bool all = true;
  for (const auto& r : rows) all = all && r.match();
  if (cfg.format == "json") {
    out << table1_to_json(sig, rows).dump(2) << '\n';
  } else {
    out << sig.to_string() << '\n';
    for (const auto& r : rows) {
      out << r.target_label << " | " << r.reduction_label << " | " << join_blades(r.blades) << " | "
          << (r.match() ? "MATCH" : "MISMATCH");
      if (!r.reduction_matches) out << " (reduction differs)";
      if (!r.brute_force_matches) out << " (brute force differs)";
      out << '\n';
    }
  }
  return all ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact centralizers and twisted centralizers in Clifford algebras Cl(p,q,r)"};
  app.require_subcommand(1);
  CliConfig cfg;
  try {
    cfg.max_dim = default_max_dim();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("-o,--output", cfg.output, "Write output to a file instead of stdout");
  };

  auto* centralizer = app.add_subcommand("centralizer", "Centralizer of a blade-spanned subspace");
  centralizer->add_option("--signature", cfg.signature, "p,q,r")->required();
  centralizer->add_option("--subspace", cfg.subspace, "Subspace spec, e.g. grade:2 or qt:13")->required();
  centralizer->add_option("--kind", cfg.kind, "plain|hat|tilde")->check(CLI::IsMember({"plain", "hat", "tilde"}));
  centralizer->add_option("--nullspace-max-dim", cfg.nullspace_max_dim, "Run the nullspace oracle up to this n");
  add_format(centralizer);

  auto* center = app.add_subcommand("center", "Center of the algebra");
  center->add_option("--signature", cfg.signature, "p,q,r")->required();
  add_format(center);

  auto* verify = app.add_subcommand("verify", "Sweep every signature up to a dimension");
  verify->add_option("--max-dim", cfg.max_dim, "Largest n (at most 10; default 7 or $CLIFFCENT_MAX_DIM)");
  verify->add_option("--targets", cfg.targets, "grades|qtypes|pairs|all")
      ->check(CLI::IsMember({"grades", "qtypes", "pairs", "all"}));
  verify->add_option("--kinds", cfg.kinds, "Subset of plain,hat,tilde")->delimiter(',')
      ->check(CLI::IsMember({"plain", "hat", "tilde"}));
  verify->add_option("--nullspace-max-dim", cfg.nullspace_max_dim, "Run the nullspace oracle up to this n");
  verify->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
  add_format(verify);

  auto* table1 = app.add_subcommand("table1", "Quaternion-type centralizer table for one signature");
  table1->add_option("--signature", cfg.signature, "p,q,r")->required();
  add_format(table1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (*centralizer) code = cmd_centralizer(cfg, buffer);
    else if (*center) code = cmd_center(cfg, buffer);
    else if (*verify) code = cmd_verify(cfg, buffer);
    else code = cmd_table1(cfg, buffer);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }

  if (cfg.output.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(cfg.output);
    if (!file) {
      std::cerr << "error: cannot write " << cfg.output << '\n';
      return kExitError;
    }
    file << buffer.str();
  }
  return code;
}
