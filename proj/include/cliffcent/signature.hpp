#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cliffcent {

inline constexpr int kMaxDimension = 16;

// Metric signature (p, q, r) of Cl(p,q,r). Generators 1..p square to +1,
// p+1..p+q to -1 and the trailing r generators to 0.
class Signature {
 public:
  // Throws std::invalid_argument unless 1 <= p+q+r <= kMaxDimension and all counts are non-negative.
  Signature(int p, int q, int r);

  int p() const { return p_; }
  int q() const { return q_; }
  int r() const { return r_; }
  int n() const { return p_ + q_ + r_; }

  // 1-based generator index.
  int metric_sign(int index) const;

  std::uint32_t full_mask() const { return (std::uint32_t{1} << n()) - 1; }
  std::uint32_t nondegenerate_mask() const { return (std::uint32_t{1} << (p_ + q_)) - 1; }
  std::uint32_t degenerate_mask() const { return full_mask() & ~nondegenerate_mask(); }
  std::size_t blade_count() const { return std::size_t{1} << n(); }

  std::string to_string() const;  // "Cl(p,q,r)"

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  int p_;
  int q_;
  int r_;
};

Signature make_signature(int p, int q, int r);

// Parses "p,q,r".
Signature parse_signature(std::string_view text);

// Basis blade e_A; bit i of the mask holds generator index i+1.
class Blade {
 public:
  constexpr Blade() = default;
  constexpr explicit Blade(std::uint32_t mask) : mask_(mask) {}

  // Indices are 1-based and must be strictly ascending.
  static Blade from_indices(const std::vector<int>& indices);

  constexpr std::uint32_t mask() const { return mask_; }
  int grade() const { return __builtin_popcount(mask_); }
  bool contains(int index) const { return (mask_ >> (index - 1)) & 1u; }
  std::vector<int> indices() const;

  friend constexpr bool operator==(Blade, Blade) = default;
  // Global enumeration order: by grade, then lexicographically by index list.
  friend std::strong_ordering operator<=>(Blade a, Blade b);

 private:
  std::uint32_t mask_ = 0;
};

inline constexpr Blade kIdentityBlade{};

bool blade_valid_for(const Signature& sig, Blade blade);

// sign == 0 means the product annihilated; blade is then meaningless.
struct ScaledBlade {
  int sign = 0;
  Blade blade;
};

enum class CommuteClass { Commute, Anticommute, Annihilate };

std::string_view to_string(CommuteClass c);

ScaledBlade blade_product(const Signature& sig, Blade a, Blade b);

CommuteClass commute_class(const Signature& sig, Blade a, Blade b);

struct InvolutionSigns {
  int hat = 1;    // grade involution, (-1)^k
  int tilde = 1;  // reversion, (-1)^{k(k-1)/2}
};

InvolutionSigns involution_signs(Blade blade);

inline int hat_sign(int grade) { return grade % 2 == 0 ? 1 : -1; }
inline int tilde_sign(int grade) { return (grade / 2) % 2 == 0 ? 1 : -1; }

// Grammar: "e[]" or "e[i1,i2,...]" with strictly ascending positive integers.
// max_index <= 0 disables the upper bound check.
Blade parse_blade(std::string_view text, int max_index = kMaxDimension);
Blade parse_blade(std::string_view text, const Signature& sig);
std::string format_blade(Blade blade);

// All 2^n blades in the global enumeration order.
std::vector<Blade> enumerate_blades(const Signature& sig);

// Maps a blade mask to its position in enumerate_blades(sig).
std::vector<std::size_t> blade_positions(const Signature& sig);

}  // namespace cliffcent
