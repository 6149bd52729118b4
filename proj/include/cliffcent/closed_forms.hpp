#pragma once

#include <stdexcept>
#include <string>

#include "cliffcent/centralizer.hpp"
#include "cliffcent/subspace.hpp"

namespace cliffcent {

// A closed form disagreed with another closed form it must coincide with.
class ClosedFormMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Center of Cl(p,q,r): Lambda^{(0)}_r (+ Cl^n when n is odd).
Subspace center_closed_form(const Signature& sig);

// General fixed-grade formulas for r != n and 1 <= m <= n; kind Plain or GradeTwisted.
Subspace theorem_closed_form(const Signature& sig, int m, CentralizerKind kind);

// Fixed-grade formulas for the Grassmann algebra (r == n), 0 <= m <= n; kind Plain or GradeTwisted.
Subspace grassmann_closed_form(const Signature& sig, int m, CentralizerKind kind);

// Centralizer of Cl^m for any m and any kind, dispatched to the formula that covers
// the signature. Never falls back to brute force.
Subspace closed_form_grade(const Signature& sig, int m, CentralizerKind kind);

// Case tables for m in 1..4, kind Plain or GradeTwisted.
Subspace closed_form_small_grade(const Signature& sig, int m, CentralizerKind kind);

// Case tables for non-degenerate algebras (r == 0).
Subspace closed_form_nondegenerate(const Signature& sig, int m, CentralizerKind kind);

// Centralizer of the quaternion-type subspace Cl^{m-bar}, m in 0..3.
Subspace closed_form_qt(const Signature& sig, int type, CentralizerKind kind);

// Even part of Z^4 written out explicitly.
Subspace even_z4_explicit(const Signature& sig);

// Centralizer of Cl^{k-bar} + Cl^{m-bar} (k != m). Computed both as the intersection
// of single-type centralizers and from the explicit tabulated form; throws
// ClosedFormMismatch if they differ.
Subspace closed_form_qt_pair(const Signature& sig, int k, int m, CentralizerKind kind);

// The explicit tabulated form alone (no intersection cross-check).
Subspace qt_pair_explicit(const Signature& sig, int k, int m, CentralizerKind kind);

}  // namespace cliffcent
