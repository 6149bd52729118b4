#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliffcent/linalg.hpp"
#include "cliffcent/rational.hpp"
#include "cliffcent/signature.hpp"

namespace cliffcent {

// Sparse element of Cl(p,q,r) with exact rational coefficients. Terms are kept
// in the global blade order and never hold a zero coefficient.
class Multivector {
 public:
  using Terms = std::map<Blade, Rational>;

  explicit Multivector(Signature sig) : sig_(sig) {}
  Multivector(Signature sig, Blade blade, Rational coeff = 1);

  const Signature& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(Blade blade) const;

  // Adds coeff to the coefficient of blade, dropping the term if it cancels.
  void accumulate(Blade blade, const Rational& coeff);

  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  Signature sig_;
  Terms terms_;
};

Multivector mv_from_terms(const Signature& sig, const std::vector<std::pair<Blade, Rational>>& terms);
Multivector mv_scalar(const Signature& sig, const Rational& value);

Multivector mv_add(const Multivector& u, const Multivector& v);
Multivector mv_sub(const Multivector& u, const Multivector& v);
Multivector mv_scale(const Rational& c, const Multivector& u);
Multivector geometric_product(const Multivector& u, const Multivector& v);

inline Multivector operator+(const Multivector& u, const Multivector& v) { return mv_add(u, v); }
inline Multivector operator-(const Multivector& u, const Multivector& v) { return mv_sub(u, v); }
inline Multivector operator*(const Multivector& u, const Multivector& v) { return geometric_product(u, v); }
inline Multivector operator*(const Rational& c, const Multivector& u) { return mv_scale(c, u); }

// k outside [0, n] yields zero.
Multivector grade_project(const Multivector& u, int k);
// l in {0, 1}: even or odd part.
Multivector parity_project(const Multivector& u, int l);

Multivector grade_involute(const Multivector& u);
Multivector reverse(const Multivector& u);

Multivector commutator(const Multivector& u, const Multivector& v);

// Column j is the coefficient vector of t * blade_j, blades in enumeration order.
RationalMatrix left_regular_matrix(const Multivector& t);

bool is_invertible(const Multivector& t);
std::optional<Multivector> try_inverse(const Multivector& t);
// Throws std::domain_error when t is singular.
Multivector inverse_of(const Multivector& t);

// ad_T(U) = T U T^{-1}
Multivector adjoint(const Multivector& t, const Multivector& u);
// ad-check_T(U) = hat(T) U T^{-1}
Multivector adjoint_hat(const Multivector& t, const Multivector& u);
// ad-tilde_T(U) = T <U>_0 T^{-1} + hat(T) <U>_1 T^{-1}
Multivector adjoint_tilde(const Multivector& t, const Multivector& u);

// Coefficients in blade enumeration order and back.
std::vector<Rational> coefficient_vector(const Multivector& u);
Multivector from_coefficient_vector(const Signature& sig, const std::vector<Rational>& coeffs);

// "1*e[] + 2*e[1] - 1/2*e[1,2]"; zero is "0".
std::string format_multivector(const Multivector& u);
// Accepts the format above; terms may also be bare rationals or bare blades.
Multivector parse_multivector(const Signature& sig, std::string_view text);

}  // namespace cliffcent
