#include "cliffcent/signature.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace cliffcent {

Signature::Signature(int p, int q, int r) : p_(p), q_(q), r_(r) {
  if (p < 0 || q < 0 || r < 0)
    throw std::invalid_argument("signature counts must be non-negative, got " + to_string());
  if (n() < 1) throw std::invalid_argument("signature " + to_string() + " has dimension 0");
  if (n() > kMaxDimension)
    throw std::invalid_argument("signature " + to_string() + " has dimension " + std::to_string(n()) +
                                " > " + std::to_string(kMaxDimension));
}

int Signature::metric_sign(int index) const {
  if (index < 1 || index > n()) throw std::out_of_range("generator index out of range");
  if (index <= p_) return 1;
  if (index <= p_ + q_) return -1;
  return 0;
}

std::string Signature::to_string() const {
  return "Cl(" + std::to_string(p_) + "," + std::to_string(q_) + "," + std::to_string(r_) + ")";
}

Signature make_signature(int p, int q, int r) { return Signature(p, q, r); }

Signature parse_signature(std::string_view text) {
  int values[3];
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const auto end = i < 2 ? text.find(',', pos) : text.size();
    if (end == std::string_view::npos) throw std::invalid_argument("signature must be 'p,q,r'");
    auto part = text.substr(pos, end - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), values[i]);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
      throw std::invalid_argument("malformed signature component '" + std::string(part) + "'");
    pos = end + 1;
  }
  return Signature(values[0], values[1], values[2]);
}

Blade Blade::from_indices(const std::vector<int>& indices) {
  std::uint32_t mask = 0;
  int previous = 0;
  for (int index : indices) {
    if (index <= previous) throw std::invalid_argument("blade indices must be strictly ascending and positive");
    if (index > kMaxDimension) throw std::invalid_argument("blade index exceeds maximum dimension");
    mask |= std::uint32_t{1} << (index - 1);
    previous = index;
  }
  return Blade(mask);
}

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(__builtin_ctz(m) + 1);
  return out;
}

std::strong_ordering operator<=>(Blade a, Blade b) {
  if (a.mask_ == b.mask_) return std::strong_ordering::equal;
  if (auto c = a.grade() <=> b.grade(); c != 0) return c;
  // Same grade: the lowest index in which they differ decides.
  const std::uint32_t diff = a.mask_ ^ b.mask_;
  const std::uint32_t lowest = diff & (~diff + 1);
  return (a.mask_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

bool blade_valid_for(const Signature& sig, Blade blade) { return (blade.mask() & ~sig.full_mask()) == 0; }

std::string_view to_string(CommuteClass c) {
  switch (c) {
    case CommuteClass::Commute:
      return "commute";
    case CommuteClass::Anticommute:
      return "anticommute";
    case CommuteClass::Annihilate:
      return "annihilate";
  }
  return "?";
}

namespace {

void require_valid(const Signature& sig, Blade blade) {
  if (!blade_valid_for(sig, blade))
    throw std::invalid_argument("blade " + format_blade(blade) + " is not valid for " + sig.to_string());
}

// Parity of the number of transpositions needed to sort the concatenation a·b.
int reorder_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t m = b; m != 0; m &= m - 1) {
    const int j = __builtin_ctz(m);
    swaps += __builtin_popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

}  // namespace

ScaledBlade blade_product(const Signature& sig, Blade a, Blade b) {
  require_valid(sig, a);
  require_valid(sig, b);
  const std::uint32_t shared = a.mask() & b.mask();
  if (shared & sig.degenerate_mask()) return {0, Blade{}};
  int sign = reorder_sign(a.mask(), b.mask());
  // Shared generators in the -1 block each contribute a factor -1.
  const std::uint32_t negative_block = sig.nondegenerate_mask() & ~((std::uint32_t{1} << sig.p()) - 1);
  if (__builtin_popcount(shared & negative_block) & 1) sign = -sign;
  return {sign, Blade(a.mask() ^ b.mask())};
}

CommuteClass commute_class(const Signature& sig, Blade a, Blade b) {
  const ScaledBlade ab = blade_product(sig, a, b);
  const ScaledBlade ba = blade_product(sig, b, a);
  if (ab.sign == 0 || ba.sign == 0) {
    if (ab.sign != ba.sign) throw std::logic_error("asymmetric annihilation");
    return CommuteClass::Annihilate;
  }
  return ab.sign == ba.sign ? CommuteClass::Commute : CommuteClass::Anticommute;
}

InvolutionSigns involution_signs(Blade blade) {
  const int k = blade.grade();
  return {hat_sign(k), tilde_sign(k)};
}

Blade parse_blade(std::string_view text, int max_index) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("malformed blade '" + std::string(text) + "': " + why);
  };
  if (text.size() < 3 || text.substr(0, 2) != "e[" || text.back() != ']') fail("expected e[...]");
  std::string_view body = text.substr(2, text.size() - 3);
  std::vector<int> indices;
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view part = body.substr(0, comma);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) fail("bad index");
    if (value < 1) fail("indices must be positive");
    if (!indices.empty() && value <= indices.back()) fail("indices must be strictly ascending");
    if (max_index > 0 && value > max_index) fail("index " + std::to_string(value) + " exceeds " + std::to_string(max_index));
    indices.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) fail("trailing comma");
  }
  return Blade::from_indices(indices);
}

Blade parse_blade(std::string_view text, const Signature& sig) { return parse_blade(text, sig.n()); }

std::string format_blade(Blade blade) {
  std::string out = "e[";
  bool first = true;
  for (int i : blade.indices()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  out += ']';
  return out;
}

std::vector<Blade> enumerate_blades(const Signature& sig) {
  std::vector<Blade> blades;
  blades.reserve(sig.blade_count());
  for (std::uint32_t m = 0; m <= sig.full_mask(); ++m) blades.emplace_back(m);
  std::sort(blades.begin(), blades.end());
  return blades;
}

std::vector<std::size_t> blade_positions(const Signature& sig) {
  std::vector<std::size_t> pos(sig.blade_count());
  const auto blades = enumerate_blades(sig);
  for (std::size_t i = 0; i < blades.size(); ++i) pos[blades[i].mask()] = i;
  return pos;
}

}  // namespace cliffcent
