#include "cliffcent/multivector.hpp"

#include <cctype>
#include <stdexcept>

namespace cliffcent {

namespace {

void require_same(const Multivector& u, const Multivector& v) {
  if (u.signature() != v.signature())
    throw std::invalid_argument("signature mismatch: " + u.signature().to_string() + " vs " +
                                v.signature().to_string());
}

template <typename SignFn>
Multivector map_signs(const Multivector& u, SignFn sign_of) {
  Multivector out(u.signature());
  for (const auto& [blade, coeff] : u.terms()) out.accumulate(blade, sign_of(blade) * coeff);
  return out;
}

}  // namespace

Multivector::Multivector(Signature sig, Blade blade, Rational coeff) : sig_(sig) { accumulate(blade, coeff); }

Rational Multivector::coefficient(Blade blade) const {
  auto it = terms_.find(blade);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Multivector::accumulate(Blade blade, const Rational& coeff) {
  if (!blade_valid_for(sig_, blade))
    throw std::invalid_argument("blade " + format_blade(blade) + " is not valid for " + sig_.to_string());
  if (cliffcent::is_zero(coeff)) return;
  auto [it, inserted] = terms_.try_emplace(blade, coeff);
  if (inserted) return;
  it->second += coeff;
  if (cliffcent::is_zero(it->second)) terms_.erase(it);
}

Multivector mv_from_terms(const Signature& sig, const std::vector<std::pair<Blade, Rational>>& terms) {
  Multivector out(sig);
  for (const auto& [blade, coeff] : terms) out.accumulate(blade, coeff);
  return out;
}

Multivector mv_scalar(const Signature& sig, const Rational& value) { return Multivector(sig, kIdentityBlade, value); }

Multivector mv_add(const Multivector& u, const Multivector& v) {
  require_same(u, v);
  Multivector out = u;
  for (const auto& [blade, coeff] : v.terms()) out.accumulate(blade, coeff);
  return out;
}

Multivector mv_sub(const Multivector& u, const Multivector& v) {
  require_same(u, v);
  Multivector out = u;
  for (const auto& [blade, coeff] : v.terms()) out.accumulate(blade, -coeff);
  return out;
}

Multivector mv_scale(const Rational& c, const Multivector& u) {
  Multivector out(u.signature());
  if (is_zero(c)) return out;
  for (const auto& [blade, coeff] : u.terms()) out.accumulate(blade, c * coeff);
  return out;
}

Multivector geometric_product(const Multivector& u, const Multivector& v) {
  require_same(u, v);
  const Signature& sig = u.signature();
  Multivector out(sig);
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      const ScaledBlade ab = blade_product(sig, a, b);
      if (ab.sign == 0) continue;
      out.accumulate(ab.blade, ab.sign * ca * cb);
    }
  }
  return out;
}

Multivector grade_project(const Multivector& u, int k) {
  Multivector out(u.signature());
  for (const auto& [blade, coeff] : u.terms())
    if (blade.grade() == k) out.accumulate(blade, coeff);
  return out;
}

Multivector parity_project(const Multivector& u, int l) {
  if (l != 0 && l != 1) throw std::invalid_argument("parity must be 0 or 1");
  Multivector out(u.signature());
  for (const auto& [blade, coeff] : u.terms())
    if (blade.grade() % 2 == l) out.accumulate(blade, coeff);
  return out;
}

Multivector grade_involute(const Multivector& u) {
  return map_signs(u, [](Blade b) { return involution_signs(b).hat; });
}

Multivector reverse(const Multivector& u) {
  return map_signs(u, [](Blade b) { return involution_signs(b).tilde; });
}

Multivector commutator(const Multivector& u, const Multivector& v) { return u * v - v * u; }

std::vector<Rational> coefficient_vector(const Multivector& u) {
  const auto pos = blade_positions(u.signature());
  std::vector<Rational> out(u.signature().blade_count());
  for (const auto& [blade, coeff] : u.terms()) out[pos[blade.mask()]] = coeff;
  return out;
}

Multivector from_coefficient_vector(const Signature& sig, const std::vector<Rational>& coeffs) {
  const auto blades = enumerate_blades(sig);
  if (coeffs.size() != blades.size()) throw std::invalid_argument("coefficient vector has wrong length");
  Multivector out(sig);
  for (std::size_t i = 0; i < blades.size(); ++i) out.accumulate(blades[i], coeffs[i]);
  return out;
}

RationalMatrix left_regular_matrix(const Multivector& t) {
  const Signature& sig = t.signature();
  const auto blades = enumerate_blades(sig);
  const auto pos = blade_positions(sig);
  RationalMatrix m(blades.size(), blades.size());
  for (std::size_t j = 0; j < blades.size(); ++j) {
    for (const auto& [a, coeff] : t.terms()) {
      const ScaledBlade ab = blade_product(sig, a, blades[j]);
      if (ab.sign == 0) continue;
      m.at(pos[ab.blade.mask()], j) += ab.sign * coeff;
    }
  }
  return m;
}

bool is_invertible(const Multivector& t) {
  const RationalMatrix m = left_regular_matrix(t);
  return rank(m) == m.rows();
}

std::optional<Multivector> try_inverse(const Multivector& t) {
  const Signature& sig = t.signature();
  // T X = 1; in a finite-dimensional associative algebra a one-sided inverse is two-sided.
  auto x = solve_unique(left_regular_matrix(t), coefficient_vector(mv_scalar(sig, 1)));
  if (!x) return std::nullopt;
  return from_coefficient_vector(sig, *x);
}

Multivector inverse_of(const Multivector& t) {
  auto inv = try_inverse(t);
  if (!inv) throw std::domain_error("multivector " + format_multivector(t) + " is not invertible");
  return *inv;
}

Multivector adjoint(const Multivector& t, const Multivector& u) {
  require_same(t, u);
  return t * u * inverse_of(t);
}

Multivector adjoint_hat(const Multivector& t, const Multivector& u) {
  require_same(t, u);
  return grade_involute(t) * u * inverse_of(t);
}

Multivector adjoint_tilde(const Multivector& t, const Multivector& u) {
  require_same(t, u);
  const Multivector inv = inverse_of(t);
  return t * parity_project(u, 0) * inv + grade_involute(t) * parity_project(u, 1) * inv;
}

std::string format_multivector(const Multivector& u) {
  if (u.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [blade, coeff] : u.terms()) {
    const bool negative = sgn(coeff) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += format_rational(abs(coeff));
    out += "*";
    out += format_blade(blade);
    first = false;
  }
  return out;
}

Multivector parse_multivector(const Signature& sig, std::string_view text) {
  Multivector out(sig);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("malformed multivector at position " + std::to_string(i) + ": " + why);
  };
  skip_ws();
  if (text.substr(i) == "0") return out;
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) {
      if (first) fail("empty input");
      break;
    }
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    Rational coeff = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      const std::size_t start = i;
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
      coeff = parse_rational(text.substr(start, i - start));
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      } else {
        out.accumulate(kIdentityBlade, sign * coeff);
        first = false;
        continue;
      }
    }
    if (i >= text.size() || text[i] != 'e') fail("expected blade");
    const auto close = text.find(']', i);
    if (close == std::string_view::npos) fail("unterminated blade");
    const Blade blade = parse_blade(text.substr(i, close - i + 1), sig);
    i = close + 1;
    out.accumulate(blade, sign * coeff);
    first = false;
  }
  return out;
}

}  // namespace cliffcent
