#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cliffcent/centralizer.hpp"
#include "cliffcent/closed_forms.hpp"
#include "cliffcent/subspace.hpp"

#include <json.hpp>

namespace cliffcent {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  Signature signature;
  std::string target;
  CentralizerKind kind;
  Subspace brute_force;
  std::optional<Subspace> closed_form;
  std::string closed_form_name;  // which formula produced closed_form
  std::optional<std::size_t> nullspace_dimension;
  std::vector<CheckResult> checks;
  Subspace only_in_brute_force;
  Subspace only_in_closed_form;
  double elapsed_ms = 0.0;

  // Blade sets of the closed form and the brute force agree (true when there is no closed form).
  bool blades_match() const;
  // Every check passed.
  bool match() const;
};

struct VerifyOptions {
  // The nullspace leg runs only up to this dimension (and never above kNullspaceMaxDimension).
  int nullspace_max_n = kNullspaceMaxDimension;
};

// The closed form applicable to a spec, or nullopt when no formula covers it.
// Covers grade:m, qt:m, qt:km, even, odd, and all (plain only).
struct ClosedFormChoice {
  Subspace blades;
  std::string name;
};
std::optional<ClosedFormChoice> closed_form_for(const Signature& sig, const SubspaceSpec& spec, CentralizerKind kind);

// Brute force, every applicable closed form (with specialisation cross-checks), and the
// nullspace oracle when n allows. Mismatches are reported, never thrown.
VerifyReport verify_case(const Signature& sig, const SubspaceSpec& target, CentralizerKind kind,
                         const VerifyOptions& options = {});

enum TargetSet : unsigned { kTargetGrades = 1u, kTargetQtypes = 2u, kTargetPairs = 4u, kTargetAll = 7u };

// Parses "grades", "qtypes", "pairs", "all".
unsigned parse_target_set(const std::string& text);

struct SweepOptions {
  unsigned targets = kTargetAll;
  std::vector<CentralizerKind> kinds{CentralizerKind::Plain, CentralizerKind::GradeTwisted,
                                     CentralizerKind::MixTwisted};
  int nullspace_max_n = 6;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepResult {
  std::vector<VerifyReport> reports;
  std::size_t mismatches() const;
};

inline constexpr int kSweepMaxDimension = 10;

// All signatures with 1 <= n <= max_n. Throws std::invalid_argument when max_n > 10.
std::vector<Signature> signatures_up_to(int max_n);

SweepResult sweep_verify(int max_n, const SweepOptions& options = {});

// --- Table 1 ----------------------------------------------------------------

struct Table1Row {
  std::string target_label;            // e.g. "Z(qt:1) = Z(qt:01) = Z(qt:12) = Z(qt:13)"
  std::vector<std::string> target_specs;
  CentralizerKind kind;
  std::string reduction_label;         // e.g. "Z^1", "even(Z^4)", "Zhat^2 & Zhat^3"
  std::function<Subspace(const Signature&)> reduction;
  std::function<Subspace(const Signature&)> explicit_form;
};

const std::vector<Table1Row>& table1_rows();

struct Table1Result {
  std::string target_label;
  std::string reduction_label;
  Subspace blades;  // the instantiated explicit form
  bool reduction_matches = false;
  bool brute_force_matches = false;
  bool match() const { return reduction_matches && brute_force_matches; }
};

std::vector<Table1Result> evaluate_table1(const Signature& sig);

// --- JSON -------------------------------------------------------------------

nlohmann::json blades_to_json(const Subspace& s);
Subspace blades_from_json(const Signature& sig, const nlohmann::json& j);
nlohmann::json signature_to_json(const Signature& sig);
Signature signature_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const VerifyReport& report);
nlohmann::json table1_to_json(const Signature& sig, const std::vector<Table1Result>& rows);

}  // namespace cliffcent
