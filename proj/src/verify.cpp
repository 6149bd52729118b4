#include "cliffcent/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <variant>

namespace cliffcent {

bool VerifyReport::blades_match() const { return !closed_form || *closed_form == brute_force; }

bool VerifyReport::match() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::optional<ClosedFormChoice> closed_form_for(const Signature& sig, const SubspaceSpec& spec,
                                                CentralizerKind kind) {
  if (spec.terms.size() != 1) return std::nullopt;
  const SpecTerm& term = spec.terms.front();
  if (const auto* g = std::get_if<SpecGrade>(&term)) return ClosedFormChoice{closed_form_grade(sig, g->k, kind), "grade"};
  if (const auto* q = std::get_if<SpecQuaternionTypes>(&term)) {
    if (q->types.size() == 1) return ClosedFormChoice{closed_form_qt(sig, q->types[0], kind), "quaternion_type"};
    if (q->types[0] == q->types[1]) return std::nullopt;
    return ClosedFormChoice{closed_form_qt_pair(sig, q->types[0], q->types[1], kind), "quaternion_pair"};
  }
  if (const auto* p = std::get_if<SpecParity>(&term)) {
    return p->l == 0 ? ClosedFormChoice{closed_form_qt_pair(sig, 0, 2, kind), "quaternion_pair"}
                     : ClosedFormChoice{closed_form_qt_pair(sig, 1, 3, kind), "quaternion_pair"};
  }
  if (std::holds_alternative<SpecAll>(term) && kind == CentralizerKind::Plain)
    return ClosedFormChoice{center_closed_form(sig), "center"};
  return std::nullopt;
}

namespace {

CheckResult compare(std::string name, const Subspace& expected, const Subspace& actual) {
  CheckResult c{std::move(name), expected == actual, {}};
  if (!c.passed) c.detail = "expected " + format_subspace(expected) + ", got " + format_subspace(actual);
  return c;
}

}  // namespace

VerifyReport verify_case(const Signature& sig, const SubspaceSpec& target, CentralizerKind kind,
                         const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Subspace s = evaluate_spec(sig, target);
  VerifyReport report{sig,
                      target.text,
                      kind,
                      brute_force_centralizer(s, kind),
                      std::nullopt,
                      {},
                      std::nullopt,
                      {},
                      Subspace(sig),
                      Subspace(sig),
                      0.0};

  try {
    if (auto choice = closed_form_for(sig, target, kind)) {
      report.closed_form = choice->blades;
      report.closed_form_name = choice->name;
      report.checks.push_back(compare("closed_form", report.brute_force, *report.closed_form));
      report.only_in_brute_force = difference(report.brute_force, *report.closed_form);
      report.only_in_closed_form = difference(*report.closed_form, report.brute_force);
    }
  } catch (const std::exception& e) {
    // A closed-form construction failure (overlap, internal mismatch) is a failed check.
    report.checks.push_back({"closed_form", false, e.what()});
  }

  if (target.terms.size() == 1) {
    if (const auto* g = std::get_if<SpecGrade>(&target.terms.front())) {
      const int m = g->k;
      try {
        if (sig.r() == 0)
          report.checks.push_back(compare("nondegenerate_table", report.brute_force, closed_form_nondegenerate(sig, m, kind)));
        if (m >= 1 && m <= 4 && kind != CentralizerKind::MixTwisted)
          report.checks.push_back(compare("small_grade_table", report.brute_force, closed_form_small_grade(sig, m, kind)));
      } catch (const std::exception& e) {
        report.checks.push_back({"specialisation", false, e.what()});
      }
      if (kind == CentralizerKind::MixTwisted && m >= 1) {
        const CentralizerKind branch = m % 2 == 0 ? CentralizerKind::Plain : CentralizerKind::GradeTwisted;
        report.checks.push_back(compare("tilde_parity_branch", brute_force_centralizer(s, branch), report.brute_force));
      }
    }
  }

  if (sig.n() <= std::min(options.nullspace_max_n, kNullspaceMaxDimension)) {
    const NullspaceResult ns = nullspace_centralizer_oracle(s, kind);
    report.nullspace_dimension = ns.dimension;
    CheckResult dim{"nullspace_dimension", ns.dimension == report.brute_force.size(), {}};
    if (!dim.passed)
      dim.detail = "nullspace dimension " + std::to_string(ns.dimension) + " vs " +
                   std::to_string(report.brute_force.size()) + " blades";
    report.checks.push_back(dim);
    report.checks.push_back({"nullspace_span", nullspace_spans(ns, report.brute_force), {}});
  }

  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

unsigned parse_target_set(const std::string& text) {
  if (text == "grades") return kTargetGrades;
  if (text == "qtypes") return kTargetQtypes;
  if (text == "pairs") return kTargetPairs;
  if (text == "all") return kTargetAll;
  throw std::invalid_argument("unknown target set '" + text + "' (expected grades|qtypes|pairs|all)");
}

std::size_t SweepResult::mismatches() const {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const VerifyReport& r) { return !r.match(); }));
}

std::vector<Signature> signatures_up_to(int max_n) {
  if (max_n > kSweepMaxDimension)
    throw std::invalid_argument("sweep dimension " + std::to_string(max_n) + " exceeds " +
                                std::to_string(kSweepMaxDimension));
  std::vector<Signature> out;
  for (int n = 1; n <= max_n; ++n)
    for (int p = n; p >= 0; --p)
      for (int q = n - p; q >= 0; --q) out.emplace_back(p, q, n - p - q);
  return out;
}

SweepResult sweep_verify(int max_n, const SweepOptions& options) {
  struct Case {
    Signature sig;
    SubspaceSpec target;
    CentralizerKind kind;
  };
  std::vector<Case> cases;
  for (const Signature& sig : signatures_up_to(max_n)) {
    std::vector<std::string> targets;
    if (options.targets & kTargetGrades)
      for (int m = 0; m <= sig.n(); ++m) targets.push_back("grade:" + std::to_string(m));
    if (options.targets & kTargetQtypes)
      for (int t = 0; t < 4; ++t) targets.push_back("qt:" + std::to_string(t));
    if (options.targets & kTargetPairs)
      for (const char* pair : {"qt:01", "qt:02", "qt:03", "qt:12", "qt:13", "qt:23"}) targets.emplace_back(pair);
    for (const auto& t : targets) {
      const SubspaceSpec spec = parse_subspace_spec(t);
      for (CentralizerKind kind : options.kinds) cases.push_back({sig, spec, kind});
    }
  }

  SweepResult result;
  std::vector<std::optional<VerifyReport>> slots(cases.size());
  const VerifyOptions verify_options{options.nullspace_max_n};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++)
      slots[i] = verify_case(cases[i].sig, cases[i].target, cases[i].kind, verify_options);
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, cases.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  result.reports.reserve(cases.size());
  for (auto& slot : slots) result.reports.push_back(std::move(*slot));
  return result;
}

// --- Table 1 ----------------------------------------------------------------

namespace {

using CF = CentralizerKind;

Subspace grade_form(const Signature& sig, int m, CF kind) { return closed_form_grade(sig, m, kind); }

std::vector<Table1Row> build_table1() {
  std::vector<Table1Row> rows;
  auto row = [&](std::string label, std::vector<std::string> specs, CF kind, std::string reduction_label,
                 std::function<Subspace(const Signature&)> reduction,
                 std::function<Subspace(const Signature&)> explicit_form) {
    rows.push_back({std::move(label), std::move(specs), kind, std::move(reduction_label), std::move(reduction),
                    std::move(explicit_form)});
  };
  row("Z(qt:1) = Z(qt:01) = Z(qt:12) = Z(qt:13)", {"qt:1", "qt:01", "qt:12", "qt:13"}, CF::Plain, "Z^1 (center)",
      [](const Signature& s) { return grade_form(s, 1, CF::Plain); }, center_closed_form);
  row("Zhat(qt:1) = Zhat(qt:13)", {"qt:1", "qt:13"}, CF::GradeTwisted, "Zhat^1",
      [](const Signature& s) { return grade_form(s, 1, CF::GradeTwisted); }, lambda_all);
  row("Z(qt:2) = Z(qt:02)", {"qt:2", "qt:02"}, CF::Plain, "Z^2",
      [](const Signature& s) { return grade_form(s, 2, CF::Plain); },
      [](const Signature& s) { return closed_form_small_grade(s, 2, CF::Plain); });
  row("Zhat(qt:2)", {"qt:2"}, CF::GradeTwisted, "Zhat^2",
      [](const Signature& s) { return grade_form(s, 2, CF::GradeTwisted); },
      [](const Signature& s) { return closed_form_small_grade(s, 2, CF::GradeTwisted); });
  row("Z(qt:3) = Z(qt:03)", {"qt:3", "qt:03"}, CF::Plain, "Z^3",
      [](const Signature& s) { return grade_form(s, 3, CF::Plain); },
      [](const Signature& s) { return closed_form_small_grade(s, 3, CF::Plain); });
  row("Zhat(qt:3)", {"qt:3"}, CF::GradeTwisted, "Zhat^3",
      [](const Signature& s) { return grade_form(s, 3, CF::GradeTwisted); },
      [](const Signature& s) { return closed_form_small_grade(s, 3, CF::GradeTwisted); });
  row("Z(qt:0)", {"qt:0"}, CF::Plain, "Z^4", [](const Signature& s) { return grade_form(s, 4, CF::Plain); },
      [](const Signature& s) { return closed_form_small_grade(s, 4, CF::Plain); });
  row("Zhat(qt:0)", {"qt:0"}, CF::GradeTwisted, "even(Z^4)",
      [](const Signature& s) { return parity_part(grade_form(s, 4, CF::Plain), 0); }, even_z4_explicit);
  row("Z(qt:23)", {"qt:23"}, CF::Plain, "Z^2 & Z^3",
      [](const Signature& s) { return intersect(grade_form(s, 2, CF::Plain), grade_form(s, 3, CF::Plain)); },
      [](const Signature& s) { return qt_pair_explicit(s, 2, 3, CF::Plain); });
  row("Zhat(qt:12)", {"qt:12"}, CF::GradeTwisted, "Zhat^1 & Zhat^2",
      [](const Signature& s) {
        return intersect(grade_form(s, 1, CF::GradeTwisted), grade_form(s, 2, CF::GradeTwisted));
      },
      [](const Signature& s) { return qt_pair_explicit(s, 1, 2, CF::GradeTwisted); });
  row("Zhat(qt:23)", {"qt:23"}, CF::GradeTwisted, "Zhat^2 & Zhat^3",
      [](const Signature& s) {
        return intersect(grade_form(s, 2, CF::GradeTwisted), grade_form(s, 3, CF::GradeTwisted));
      },
      [](const Signature& s) { return qt_pair_explicit(s, 2, 3, CF::GradeTwisted); });
  row("Zhat(qt:01)", {"qt:01"}, CF::GradeTwisted, "even(Z^1)",
      [](const Signature& s) { return parity_part(grade_form(s, 1, CF::Plain), 0); },
      [](const Signature& s) { return qt_pair_explicit(s, 0, 1, CF::GradeTwisted); });
  row("Zhat(qt:02)", {"qt:02"}, CF::GradeTwisted, "even(Z^2)",
      [](const Signature& s) { return parity_part(grade_form(s, 2, CF::Plain), 0); },
      [](const Signature& s) { return qt_pair_explicit(s, 0, 2, CF::GradeTwisted); });
  row("Zhat(qt:03)", {"qt:03"}, CF::GradeTwisted, "even(Z^3)",
      [](const Signature& s) { return parity_part(grade_form(s, 3, CF::Plain), 0); },
      [](const Signature& s) { return qt_pair_explicit(s, 0, 3, CF::GradeTwisted); });
  return rows;
}

}  // namespace

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = build_table1();
  return rows;
}

std::vector<Table1Result> evaluate_table1(const Signature& sig) {
  std::vector<Table1Result> out;
  for (const Table1Row& row : table1_rows()) {
    Table1Result res{row.target_label, row.reduction_label, row.explicit_form(sig)};
    res.reduction_matches = row.reduction(sig) == res.blades;
    res.brute_force_matches = true;
    for (const std::string& spec : row.target_specs) {
      const Subspace target = evaluate_spec(sig, parse_subspace_spec(spec));
      if (brute_force_centralizer(target, row.kind) != res.blades) res.brute_force_matches = false;
    }
    out.push_back(std::move(res));
  }
  return out;
}

// --- JSON -------------------------------------------------------------------

nlohmann::json blades_to_json(const Subspace& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& indices : blade_index_lists(s)) arr.push_back(indices);
  return arr;
}

Subspace blades_from_json(const Signature& sig, const nlohmann::json& j) {
  Subspace out(sig);
  for (const auto& indices : j) out.insert(Blade::from_indices(indices.get<std::vector<int>>()));
  return out;
}

nlohmann::json signature_to_json(const Signature& sig) {
  return {{"p", sig.p()}, {"q", sig.q()}, {"r", sig.r()}};
}

Signature signature_from_json(const nlohmann::json& j) {
  return Signature(j.at("p").get<int>(), j.at("q").get<int>(), j.at("r").get<int>());
}

nlohmann::json report_to_json(const VerifyReport& report) {
  nlohmann::json checks = nlohmann::json::object();
  for (const CheckResult& c : report.checks) checks[c.name] = c.passed;
  nlohmann::json j = {
      {"signature", signature_to_json(report.signature)},
      {"subspace", report.target},
      {"kind", kind_name(report.kind)},
      {"blades", blades_to_json(report.brute_force)},
      {"closed_form", report.closed_form ? blades_to_json(*report.closed_form) : nlohmann::json(nullptr)},
      {"closed_form_name", report.closed_form_name},
      {"nullspace_dimension",
       report.nullspace_dimension ? nlohmann::json(*report.nullspace_dimension) : nlohmann::json(nullptr)},
      {"checks", checks},
      {"only_in_brute_force", blades_to_json(report.only_in_brute_force)},
      {"only_in_closed_form", blades_to_json(report.only_in_closed_form)},
      {"match", report.match()},
      {"elapsed_ms", report.elapsed_ms},
  };
  return j;
}

nlohmann::json table1_to_json(const Signature& sig, const std::vector<Table1Result>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Table1Result& r : rows)
    arr.push_back({{"target", r.target_label},
                   {"reduction", r.reduction_label},
                   {"blades", blades_to_json(r.blades)},
                   {"reduction_match", r.reduction_matches},
                   {"brute_force_match", r.brute_force_matches},
                   {"match", r.match()}});
  return {{"signature", signature_to_json(sig)}, {"rows", arr}};
}

}  // namespace cliffcent
