#pragma once

#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cliffcent/signature.hpp"

namespace cliffcent {

// Blade-spanned linear subspace of Cl(p,q,r). The zero subspace has no blades.
class Subspace {
 public:
  using Blades = std::set<Blade>;

  explicit Subspace(Signature sig) : sig_(sig) {}
  Subspace(Signature sig, Blades blades);

  const Signature& signature() const { return sig_; }
  const Blades& blades() const { return blades_; }
  std::size_t size() const { return blades_.size(); }
  bool empty() const { return blades_.empty(); }
  bool contains(Blade b) const { return blades_.count(b) != 0; }

  void insert(Blade b);

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Signature sig_;
  Blades blades_;
};

// Raised when a direct sum is asked to combine overlapping blade sets.
class OverlapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Subspace zero_subspace(const Signature& sig);
Subspace full_algebra(const Signature& sig);

// Cl^k; empty outside [0, n].
Subspace grade_subspace(const Signature& sig, int k);
// Cl^{lo..hi} clamped to [0, n].
Subspace grade_range(const Signature& sig, int lo, int hi);

// Lambda^l_r: grade-l blades over the degenerate generators only.
Subspace lambda_subspace(const Signature& sig, int l);
// Lambda^{lo..hi}_r clamped to [0, r].
Subspace lambda_range(const Signature& sig, int lo, int hi);
inline Subspace lambda_at_most(const Signature& sig, int k) { return lambda_range(sig, 0, k); }
inline Subspace lambda_at_least(const Signature& sig, int d) { return lambda_range(sig, d, sig.r()); }
inline Subspace lambda_all(const Signature& sig) { return lambda_range(sig, 0, sig.r()); }
// Lambda^{(l)}_r
Subspace lambda_parity(const Signature& sig, int l);

// Cl^k_{p,q,0}: grade-k blades over the first p+q generators.
Subspace nondeg_grade_subspace(const Signature& sig, int k);

// {A B}: span of products a b. Throws std::invalid_argument on overlapping supports.
Subspace product_span(const Subspace& a, const Subspace& b);

Subspace parity_subspace(const Signature& sig, int l);
Subspace parity_part(const Subspace& s, int l);

// Cl^{m-bar}: blades with hat = (-1)^m and tilde = (-1)^{m(m-1)/2}.
Subspace quaternion_type_subspace(const Signature& sig, int m);

// Strict direct sum; throws OverlapError when two summands share a blade.
Subspace direct_sum(const std::vector<Subspace>& parts);
// Sum of blade-spanned subspaces (union of blade sets); summands may overlap.
Subspace subspace_sum(const std::vector<Subspace>& parts);
Subspace intersect(const Subspace& a, const Subspace& b);
// Blade-level set difference.
Subspace difference(const Subspace& a, const Subspace& b);

bool subspace_equals(const Subspace& a, const Subspace& b);
// True when every blade of b lies in a.
bool subspace_contains(const Subspace& a, const Subspace& b);

// "{e[], e[2], e[1,2]}"
std::string format_subspace(const Subspace& s);
std::vector<std::vector<int>> blade_index_lists(const Subspace& s);

// --- subspace spec grammar ---------------------------------------------------
//
//   spec  := term ('+' term)*
//   term  := 'grade:' int | 'grade:' int '..' int | 'lambda:' int
//          | 'even' | 'odd' | 'all' | 'qt:' digit | 'qt:' digit digit
//
// '+' is a direct sum, so the evaluated operands must not overlap.

class SpecParseError : public std::invalid_argument {
 public:
  SpecParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct SpecGrade {
  int k;
};
struct SpecGradeRange {
  int lo;
  int hi;
};
struct SpecLambda {
  int l;
};
struct SpecParity {
  int l;
};
struct SpecAll {};
// One or two quaternion types; two types denote their direct sum.
struct SpecQuaternionTypes {
  std::vector<int> types;
};

using SpecTerm = std::variant<SpecGrade, SpecGradeRange, SpecLambda, SpecParity, SpecAll, SpecQuaternionTypes>;

struct SubspaceSpec {
  std::vector<SpecTerm> terms;
  std::string text;  // canonical rendering
};

SubspaceSpec parse_subspace_spec(std::string_view text);
Subspace evaluate_spec(const Signature& sig, const SubspaceSpec& spec);
std::string format_spec(const SubspaceSpec& spec);

}  // namespace cliffcent
