#include "cliffcent/subspace.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace cliffcent {

namespace {

template <typename Pred>
Subspace select(const Signature& sig, Pred keep) {
  Subspace out(sig);
  for (std::uint32_t m = 0; m <= sig.full_mask(); ++m)
    if (keep(Blade(m))) out.insert(Blade(m));
  return out;
}

void require_same(const Subspace& a, const Subspace& b) {
  if (a.signature() != b.signature())
    throw std::invalid_argument("subspaces over different signatures: " + a.signature().to_string() + " vs " +
                                b.signature().to_string());
}

}  // namespace

Subspace::Subspace(Signature sig, Blades blades) : sig_(sig) {
  for (Blade b : blades) insert(b);
}

void Subspace::insert(Blade b) {
  if (!blade_valid_for(sig_, b))
    throw std::invalid_argument("blade " + format_blade(b) + " is not valid for " + sig_.to_string());
  blades_.insert(b);
}

Subspace zero_subspace(const Signature& sig) { return Subspace(sig); }

Subspace full_algebra(const Signature& sig) {
  return select(sig, [](Blade) { return true; });
}

Subspace grade_subspace(const Signature& sig, int k) {
  return select(sig, [k](Blade b) { return b.grade() == k; });
}

Subspace grade_range(const Signature& sig, int lo, int hi) {
  return select(sig, [lo, hi](Blade b) { return b.grade() >= lo && b.grade() <= hi; });
}

Subspace lambda_subspace(const Signature& sig, int l) {
  const auto degenerate = sig.degenerate_mask();
  return select(sig, [=](Blade b) { return (b.mask() & ~degenerate) == 0 && b.grade() == l; });
}

Subspace lambda_range(const Signature& sig, int lo, int hi) {
  const auto degenerate = sig.degenerate_mask();
  return select(sig, [=](Blade b) { return (b.mask() & ~degenerate) == 0 && b.grade() >= lo && b.grade() <= hi; });
}

Subspace lambda_parity(const Signature& sig, int l) {
  const auto degenerate = sig.degenerate_mask();
  return select(sig, [=](Blade b) { return (b.mask() & ~degenerate) == 0 && b.grade() % 2 == l; });
}

Subspace nondeg_grade_subspace(const Signature& sig, int k) {
  const auto nondeg = sig.nondegenerate_mask();
  return select(sig, [=](Blade b) { return (b.mask() & ~nondeg) == 0 && b.grade() == k; });
}

Subspace product_span(const Subspace& a, const Subspace& b) {
  require_same(a, b);
  Subspace out(a.signature());
  for (Blade x : a.blades()) {
    for (Blade y : b.blades()) {
      if (x.mask() & y.mask())
        throw std::invalid_argument("product_span operands overlap: " + format_blade(x) + " and " + format_blade(y));
      out.insert(Blade(x.mask() | y.mask()));
    }
  }
  return out;
}

Subspace parity_subspace(const Signature& sig, int l) {
  return select(sig, [l](Blade b) { return b.grade() % 2 == l; });
}

Subspace parity_part(const Subspace& s, int l) {
  Subspace out(s.signature());
  for (Blade b : s.blades())
    if (b.grade() % 2 == l) out.insert(b);
  return out;
}

Subspace quaternion_type_subspace(const Signature& sig, int m) {
  if (m < 0 || m > 3) throw std::invalid_argument("quaternion type must be in 0..3");
  const int want_hat = hat_sign(m);
  const int want_tilde = tilde_sign(m);
  return select(sig, [=](Blade b) {
    const InvolutionSigns s = involution_signs(b);
    return s.hat == want_hat && s.tilde == want_tilde;
  });
}

Subspace direct_sum(const std::vector<Subspace>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of nothing has no signature");
  Subspace out(parts.front().signature());
  for (const Subspace& part : parts) {
    require_same(out, part);
    for (Blade b : part.blades()) {
      if (out.contains(b)) throw OverlapError("direct sum summands overlap at " + format_blade(b));
      out.insert(b);
    }
  }
  return out;
}

Subspace subspace_sum(const std::vector<Subspace>& parts) {
  if (parts.empty()) throw std::invalid_argument("subspace_sum of nothing has no signature");
  Subspace out(parts.front().signature());
  for (const Subspace& part : parts) {
    require_same(out, part);
    for (Blade b : part.blades()) out.insert(b);
  }
  return out;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same(a, b);
  Subspace out(a.signature());
  for (Blade x : a.blades())
    if (b.contains(x)) out.insert(x);
  return out;
}

Subspace difference(const Subspace& a, const Subspace& b) {
  require_same(a, b);
  Subspace out(a.signature());
  for (Blade x : a.blades())
    if (!b.contains(x)) out.insert(x);
  return out;
}

bool subspace_equals(const Subspace& a, const Subspace& b) {
  require_same(a, b);
  return a.blades() == b.blades();
}

bool subspace_contains(const Subspace& a, const Subspace& b) {
  require_same(a, b);
  return std::includes(a.blades().begin(), a.blades().end(), b.blades().begin(), b.blades().end());
}

std::string format_subspace(const Subspace& s) {
  std::string out = "{";
  bool first = true;
  for (Blade b : s.blades()) {
    if (!first) out += ", ";
    out += format_blade(b);
    first = false;
  }
  return out + "}";
}

std::vector<std::vector<int>> blade_index_lists(const Subspace& s) {
  std::vector<std::vector<int>> out;
  out.reserve(s.size());
  for (Blade b : s.blades()) out.push_back(b.indices());
  return out;
}

// --- spec grammar -------------------------------------------------------------

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  SubspaceSpec parse() {
    SubspaceSpec spec;
    skip_ws();
    if (at_end()) throw SpecParseError("empty subspace spec", pos_);
    while (true) {
      spec.terms.push_back(term());
      skip_ws();
      if (at_end()) break;
      if (text_[pos_] != '+') throw SpecParseError("expected '+'", pos_);
      ++pos_;
      skip_ws();
    }
    spec.text = format_spec(spec);
    return spec;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  int integer() {
    const std::size_t start = pos_;
    if (!at_end() && text_[pos_] == '-') ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{} || ptr != text_.data() + pos_) throw SpecParseError("expected integer", start);
    return value;
  }

  bool word_boundary() const {
    return at_end() || text_[pos_] == '+' || std::isspace(static_cast<unsigned char>(text_[pos_]));
  }

  SpecTerm term() {
    const std::size_t start = pos_;
    SpecTerm t;
    if (consume("grade:")) {
      const int lo = integer();
      if (consume("..")) {
        t = SpecGradeRange{lo, integer()};
      } else {
        t = SpecGrade{lo};
      }
    } else if (consume("lambda:")) {
      t = SpecLambda{integer()};
    } else if (consume("qt:")) {
      SpecQuaternionTypes q;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        const int d = text_[pos_] - '0';
        if (d > 3) throw SpecParseError("quaternion type must be 0..3", pos_);
        q.types.push_back(d);
        ++pos_;
      }
      if (q.types.empty() || q.types.size() > 2) throw SpecParseError("qt: takes one or two type digits", start);
      t = q;
    } else if (consume("even")) {
      t = SpecParity{0};
    } else if (consume("odd")) {
      t = SpecParity{1};
    } else if (consume("all")) {
      t = SpecAll{};
    } else {
      throw SpecParseError("unknown subspace term", start);
    }
    if (!word_boundary()) throw SpecParseError("unexpected character", pos_);
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string term_text(const SpecTerm& t) {
  struct Visitor {
    std::string operator()(const SpecGrade& g) const { return "grade:" + std::to_string(g.k); }
    std::string operator()(const SpecGradeRange& g) const {
      return "grade:" + std::to_string(g.lo) + ".." + std::to_string(g.hi);
    }
    std::string operator()(const SpecLambda& l) const { return "lambda:" + std::to_string(l.l); }
    std::string operator()(const SpecParity& p) const { return p.l == 0 ? "even" : "odd"; }
    std::string operator()(const SpecAll&) const { return "all"; }
    std::string operator()(const SpecQuaternionTypes& q) const {
      std::string s = "qt:";
      for (int d : q.types) s += static_cast<char>('0' + d);
      return s;
    }
  };
  return std::visit(Visitor{}, t);
}

Subspace evaluate_term(const Signature& sig, const SpecTerm& t) {
  struct Visitor {
    const Signature& sig;
    Subspace operator()(const SpecGrade& g) const { return grade_subspace(sig, g.k); }
    Subspace operator()(const SpecGradeRange& g) const { return grade_range(sig, g.lo, g.hi); }
    Subspace operator()(const SpecLambda& l) const { return lambda_subspace(sig, l.l); }
    Subspace operator()(const SpecParity& p) const { return parity_subspace(sig, p.l); }
    Subspace operator()(const SpecAll&) const { return full_algebra(sig); }
    Subspace operator()(const SpecQuaternionTypes& q) const {
      std::vector<Subspace> parts;
      for (int d : q.types) parts.push_back(quaternion_type_subspace(sig, d));
      return direct_sum(parts);
    }
  };
  return std::visit(Visitor{sig}, t);
}

}  // namespace

SubspaceSpec parse_subspace_spec(std::string_view text) { return SpecParser(text).parse(); }

Subspace evaluate_spec(const Signature& sig, const SubspaceSpec& spec) {
  std::vector<Subspace> parts;
  for (const SpecTerm& t : spec.terms) parts.push_back(evaluate_term(sig, t));
  return direct_sum(parts);
}

std::string format_spec(const SubspaceSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.terms.size(); ++i) {
    if (i) out += "+";
    out += term_text(spec.terms[i]);
  }
  return out;
}

}  // namespace cliffcent
