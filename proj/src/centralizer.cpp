#include "cliffcent/centralizer.hpp"

#include <map>

namespace cliffcent {

std::string_view kind_name(CentralizerKind kind) {
  switch (kind) {
    case CentralizerKind::Plain:
      return "plain";
    case CentralizerKind::GradeTwisted:
      return "hat";
    case CentralizerKind::MixTwisted:
      return "tilde";
  }
  return "?";
}

CentralizerKind parse_kind(std::string_view text) {
  if (text == "plain") return CentralizerKind::Plain;
  if (text == "hat") return CentralizerKind::GradeTwisted;
  if (text == "tilde") return CentralizerKind::MixTwisted;
  throw std::invalid_argument("unknown centralizer kind '" + std::string(text) + "' (expected plain|hat|tilde)");
}

bool blade_condition_holds(const Signature& sig, Blade x, Blade v, CentralizerKind kind) {
  const CommuteClass c = commute_class(sig, x, v);
  if (c == CommuteClass::Annihilate) return true;
  const int epsilon = c == CommuteClass::Commute ? 1 : -1;
  const bool twisted = kind == CentralizerKind::GradeTwisted ||
                       (kind == CentralizerKind::MixTwisted && v.grade() % 2 == 1);
  if (!twisted) return epsilon == 1;
  return involution_signs(x).hat * epsilon == 1;
}

Subspace brute_force_centralizer(const Subspace& s, CentralizerKind kind) {
  const Signature& sig = s.signature();
  Subspace out(sig);
  for (std::uint32_t m = 0; m <= sig.full_mask(); ++m) {
    const Blade x(m);
    bool ok = true;
    for (Blade v : s.blades()) {
      if (!blade_condition_holds(sig, x, v, kind)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(x);
  }
  return out;
}

NullspaceResult nullspace_centralizer_oracle(const Subspace& s, CentralizerKind kind) {
  const Signature& sig = s.signature();
  if (sig.n() > kNullspaceMaxDimension)
    throw std::invalid_argument("nullspace oracle is limited to n <= " + std::to_string(kNullspaceMaxDimension));
  const auto columns = enumerate_blades(sig);
  const auto pos = blade_positions(sig);

  RowEchelon echelon(columns.size());
  for (Blade v : s.blades()) {
    const Multivector vm(sig, v);
    const Multivector v_even = parity_project(vm, 0);
    const Multivector v_odd = parity_project(vm, 1);
    // Rows of this block are indexed by output blade; columns are visited in order so rows stay sorted.
    std::map<std::size_t, SparseRow> rows;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const Multivector x(sig, columns[j]);
      Multivector lhs(sig);
      switch (kind) {
        case CentralizerKind::Plain:
          lhs = x * vm;
          break;
        case CentralizerKind::GradeTwisted:
          lhs = grade_involute(x) * vm;
          break;
        case CentralizerKind::MixTwisted:
          lhs = x * v_even + grade_involute(x) * v_odd;
          break;
      }
      const Multivector image = lhs - vm * x;
      for (const auto& [blade, coeff] : image.terms()) rows[pos[blade.mask()]].emplace_back(j, coeff);
    }
    for (auto& [row_index, row] : rows) echelon.add_row(std::move(row));
  }

  NullspaceResult result;
  for (const auto& vec : echelon.nullspace_basis()) result.basis.push_back(from_coefficient_vector(sig, vec));
  result.dimension = result.basis.size();
  return result;
}

bool nullspace_spans(const NullspaceResult& result, const Subspace& blades) {
  if (result.dimension != blades.size()) return false;
  for (const Multivector& v : result.basis)
    for (const auto& [blade, coeff] : v.terms())
      if (!blades.contains(blade)) return false;
  return true;
}

}  // namespace cliffcent
