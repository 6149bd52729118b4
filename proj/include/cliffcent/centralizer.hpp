#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cliffcent/multivector.hpp"
#include "cliffcent/subspace.hpp"

namespace cliffcent {

// Plain:        X V = V X
// GradeTwisted: hat(X) V = V X
// MixTwisted:   X <V>_0 + hat(X) <V>_1 = V X
enum class CentralizerKind { Plain, GradeTwisted, MixTwisted };

inline constexpr CentralizerKind kAllKinds[] = {CentralizerKind::Plain, CentralizerKind::GradeTwisted,
                                                CentralizerKind::MixTwisted};

// "plain", "hat", "tilde"
std::string_view kind_name(CentralizerKind kind);
CentralizerKind parse_kind(std::string_view text);

// Does the blade x satisfy the kind's condition against the basis blade v?
bool blade_condition_holds(const Signature& sig, Blade x, Blade v, CentralizerKind kind);

// All blades X satisfying the kind's condition against every basis blade of s.
Subspace brute_force_centralizer(const Subspace& s, CentralizerKind kind);

struct NullspaceResult {
  std::size_t dimension = 0;
  std::vector<Multivector> basis;
};

inline constexpr int kNullspaceMaxDimension = 8;

// Exact nullspace of X -> (condition lhs - V X) stacked over the basis of s,
// assembled from full multivector products. Throws std::invalid_argument for n > 8.
NullspaceResult nullspace_centralizer_oracle(const Subspace& s, CentralizerKind kind);

// True when every basis vector is supported inside blades and the counts agree.
bool nullspace_spans(const NullspaceResult& result, const Subspace& blades);

}  // namespace cliffcent
