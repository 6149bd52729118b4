#include "cliffcent/closed_forms.hpp"

#include <initializer_list>
#include <vector>

namespace cliffcent {

namespace {

// Building blocks of the closed forms, all as subspaces of Cl(p,q,r).
class Blocks {
 public:
  explicit Blocks(const Signature& sig) : sig_(sig) {}

  int n() const { return sig_.n(); }
  int r() const { return sig_.r(); }
  bool n_odd() const { return n() % 2 == 1; }
  bool grassmann() const { return r() == n(); }

  Subspace lam(int k) const { return lambda_subspace(sig_, k); }
  Subspace lam_le(int k) const { return lambda_at_most(sig_, k); }
  Subspace lam_ge(int d) const { return lambda_at_least(sig_, d); }
  Subspace lam_all() const { return lambda_all(sig_); }
  Subspace lam_even() const { return lambda_parity(sig_, 0); }
  Subspace c(int k) const { return nondeg_grade_subspace(sig_, k); }
  // {Cl^k_{p,q,0} L}
  Subspace cl(int k, const Subspace& l) const { return product_span(c(k), l); }
  Subspace top() const { return grade_subspace(sig_, n()); }
  Subspace all() const { return full_algebra(sig_); }
  Subspace even(const Subspace& s) const { return parity_part(s, 0); }
  Subspace odd(const Subspace& s) const { return parity_part(s, 1); }
  Subspace scalars() const { return grade_subspace(sig_, 0); }
  Subspace even_algebra() const { return parity_subspace(sig_, 0); }

  // Direct sums in the tabulated forms; overlapping summands are a construction error.
  Subspace dsum(std::initializer_list<Subspace> parts) const { return direct_sum(std::vector<Subspace>(parts)); }
  // Sums whose summands may share blades.
  Subspace sum(std::initializer_list<Subspace> parts) const { return subspace_sum(std::vector<Subspace>(parts)); }

  // (+)_{k = first, first+2, ..., <= last} {Cl^k_{p,q,0} Lambda^{>= d}_r}; empty when first > last.
  Subspace stepped(int first, int last, int d) const {
    Subspace out(sig_);
    for (int k = first; k <= last; k += 2) out = subspace_sum({out, cl(k, lam_ge(d))});
    return out;
  }

  const Signature& sig() const { return sig_; }

 private:
  Signature sig_;
};

void require_plain_or_hat(CentralizerKind kind, const char* where) {
  if (kind == CentralizerKind::MixTwisted)
    throw std::invalid_argument(std::string(where) + " takes plain or hat; tilde is dispatched by closed_form_grade");
}

// tilde coincides with plain for even m and with hat for odd m.
CentralizerKind mix_branch(int m) { return m % 2 == 0 ? CentralizerKind::Plain : CentralizerKind::GradeTwisted; }

}  // namespace

Subspace center_closed_form(const Signature& sig) {
  const Blocks b(sig);
  return b.n_odd() ? b.dsum({b.lam_even(), b.top()}) : b.lam_even();
}

Subspace theorem_closed_form(const Signature& sig, int m, CentralizerKind kind) {
  require_plain_or_hat(kind, "theorem_closed_form");
  const Blocks b(sig);
  const int n = b.n();
  if (b.grassmann()) throw std::invalid_argument("theorem_closed_form requires r != n");
  if (m < 1 || m > n) throw std::invalid_argument("theorem_closed_form requires 1 <= m <= n");
  const bool plain = kind == CentralizerKind::Plain;

  if (m % 2 == 0) {
    const Subspace base = b.sum({b.lam_le(n - m - 1), b.stepped(1, m - 3, n - (m - 1)), b.stepped(0, m - 2, n - m), b.top()});
    if (plain) return base;
    const Subspace odd_extra = b.sum({b.stepped(0, m - 2, n - (m - 1)), b.stepped(1, m - 1, n - m)});
    return b.sum({b.even(base), b.odd(odd_extra)});
  }
  const Subspace base = b.sum({b.lam_le(n - m - 1), b.stepped(1, m - 2, n - (m - 1)), b.stepped(0, m - 1, n - m)});
  if (!plain) return base;
  const Subspace odd_extra = b.sum({b.stepped(0, m - 3, n - (m - 1)), b.stepped(1, m - 2, n - m), b.top()});
  return b.sum({b.even(base), b.odd(odd_extra)});
}

Subspace grassmann_closed_form(const Signature& sig, int m, CentralizerKind kind) {
  require_plain_or_hat(kind, "grassmann_closed_form");
  const Blocks b(sig);
  const int n = b.n();
  if (!b.grassmann()) throw std::invalid_argument("grassmann_closed_form requires r == n");
  if (m < 0 || m > n) throw std::invalid_argument("grassmann_closed_form requires 0 <= m <= n");
  const bool plain = kind == CentralizerKind::Plain;
  if (m == 0) return plain ? b.lam_all() : b.lam_even();
  const Subspace mixed = b.dsum({b.lam_even(), b.odd(b.lam_ge(n - m + 1))});
  if (m % 2 == 0) return plain ? b.lam_all() : mixed;
  return plain ? mixed : b.lam_all();
}

Subspace closed_form_grade(const Signature& sig, int m, CentralizerKind kind) {
  const Blocks b(sig);
  if (m < 0 || m > b.n()) return b.all();
  if (kind == CentralizerKind::MixTwisted) {
    if (m == 0) return b.all();
    kind = mix_branch(m);
  }
  if (m == 0) return kind == CentralizerKind::Plain ? b.all() : b.even_algebra();
  if (b.grassmann()) return grassmann_closed_form(sig, m, kind);
  return theorem_closed_form(sig, m, kind);
}

Subspace closed_form_small_grade(const Signature& sig, int m, CentralizerKind kind) {
  require_plain_or_hat(kind, "closed_form_small_grade");
  if (m < 1 || m > 4) throw std::invalid_argument("closed_form_small_grade requires 1 <= m <= 4");
  const Blocks b(sig);
  const int n = b.n();
  const bool r_eq_n = b.grassmann();
  const bool n_odd = b.n_odd();

  if (kind == CentralizerKind::Plain) {
    switch (m) {
      case 1:
        return n_odd ? b.dsum({b.lam_even(), b.top()}) : b.lam_even();
      case 2:
        return r_eq_n ? b.lam_all() : b.dsum({b.lam_all(), b.top()});
      case 3:
        if (n_odd)
          return b.dsum({b.lam_even(), b.lam(n - 2), b.cl(1, b.dsum({b.lam(n - 3), b.lam(n - 2)})),
                         b.cl(2, b.lam(n - 3)), b.top()});
        return b.dsum({b.lam_even(), b.lam(n - 1), b.cl(1, b.lam_ge(n - 2)), b.cl(2, b.lam(n - 2))});
      case 4:
        if (r_eq_n) return b.lam_all();
        return b.dsum({b.lam_all(), b.cl(1, b.dsum({b.lam(n - 3), b.lam(n - 2)})),
                       b.cl(2, b.dsum({b.lam(n - 4), b.lam(n - 3)})), b.top()});
    }
  }
  switch (m) {
    case 1:
      return b.lam_all();
    case 2:
      if (n_odd) return b.dsum({b.lam_even(), b.lam(n), b.cl(1, b.lam(n - 1))});
      if (!r_eq_n) return b.dsum({b.lam_even(), b.lam(n - 1), b.cl(1, b.lam(n - 2)), b.top()});
      return b.dsum({b.lam_even(), b.lam(n - 1)});
    case 3:
      return b.dsum({b.lam_all(), b.cl(1, b.lam_ge(n - 2)), b.cl(2, b.lam_ge(n - 3))});
    case 4:
      if (n_odd)
        return b.dsum({b.lam_even(), b.lam(n - 2), b.lam(n), b.cl(1, b.lam_ge(n - 3)), b.cl(2, b.lam_ge(n - 3)),
                       b.cl(3, b.lam(n - 3))});
      if (!r_eq_n)
        return b.dsum({b.lam_even(), b.lam(n - 3), b.lam(n - 1), b.cl(3, b.lam(n - 4)),
                       b.cl(2, b.dsum({b.lam(n - 4), b.lam(n - 3)})), b.top(),
                       b.cl(1, b.dsum({b.lam(n - 4), b.lam(n - 3), b.lam(n - 2)}))});
      return b.dsum({b.lam_even(), b.lam(n - 3), b.lam(n - 1)});
  }
  throw std::logic_error("closed_form_small_grade: unreachable case");
}

Subspace closed_form_nondegenerate(const Signature& sig, int m, CentralizerKind kind) {
  if (sig.r() != 0) throw std::invalid_argument("closed_form_nondegenerate requires r == 0");
  const Blocks b(sig);
  const int n = b.n();
  if (m < 0 || m > n) return b.all();
  if (kind == CentralizerKind::MixTwisted) {
    if (m == 0) return b.all();
    kind = mix_branch(m);
  }
  const bool m_even = m % 2 == 0;
  const bool n_even = n % 2 == 0;
  const Subspace zero_and_top = b.dsum({b.scalars(), b.top()});

  if (kind == CentralizerKind::Plain) {
    if (m == 0 || (m == n && !m_even)) return b.all();
    if (m == n && m_even) return b.even_algebra();
    if ((m != n && m_even) || (m != n && !m_even && !n_even)) return zero_and_top;
    if (!m_even && n_even) return b.scalars();
  } else {
    if (m == n && m_even) return b.all();
    if (m == 0 || (m == n && !m_even)) return b.even_algebra();
    if (m != n && m_even && n_even) return zero_and_top;
    if ((m != n && !m_even) || (m_even && !n_even)) return b.scalars();
  }
  throw std::logic_error("closed_form_nondegenerate: no case covers m=" + std::to_string(m) + " in " +
                         sig.to_string());
}

Subspace closed_form_qt(const Signature& sig, int type, CentralizerKind kind) {
  if (type < 0 || type > 3) throw std::invalid_argument("quaternion type must be in 0..3");
  if (kind == CentralizerKind::MixTwisted) {
    // tilde(0) = Z^4, tilde(1), tilde(3) = hat, tilde(2) = Z^2
    if (type == 0) return closed_form_grade(sig, 4, CentralizerKind::Plain);
    return closed_form_grade(sig, type, mix_branch(type));
  }
  if (type != 0) return closed_form_grade(sig, type, kind);
  const Subspace z4 = closed_form_grade(sig, 4, CentralizerKind::Plain);
  return kind == CentralizerKind::Plain ? z4 : parity_part(z4, 0);
}

Subspace even_z4_explicit(const Signature& sig) {
  const Blocks b(sig);
  const int n = b.n();
  if (b.n_odd() || b.grassmann()) return b.dsum({b.lam_even(), b.cl(1, b.lam(n - 2)), b.cl(2, b.lam(n - 3))});
  return b.dsum({b.lam_even(), b.cl(1, b.lam(n - 3)), b.cl(2, b.lam(n - 4)), b.top()});
}

Subspace qt_pair_explicit(const Signature& sig, int k, int m, CentralizerKind kind) {
  if (k > m) std::swap(k, m);
  if (k < 0 || m > 3 || k == m) throw std::invalid_argument("quaternion-type pair must be two distinct types in 0..3");
  const Blocks b(sig);
  const int n = b.n();
  const bool n_odd = b.n_odd();
  const bool r_eq_n = b.grassmann();
  const int pair = 10 * k + m;

  switch (kind) {
    case CentralizerKind::Plain:
      switch (pair) {
        case 1:
        case 12:
        case 13:
          return center_closed_form(sig);
        case 2:
          return r_eq_n ? b.lam_all() : b.dsum({b.lam_all(), b.top()});
        case 3:
          return closed_form_small_grade(sig, 3, CentralizerKind::Plain);
        case 23:
          if (n_odd) return b.dsum({b.lam_even(), b.lam(n - 2), b.top()});
          return b.dsum({b.lam_even(), b.lam(n - 1), b.cl(1, b.lam(n - 1)), b.cl(2, b.lam(n - 2))});
      }
      break;
    case CentralizerKind::GradeTwisted:
      switch (pair) {
        case 13:
          return b.lam_all();
        case 12:
          return n_odd ? b.dsum({b.lam_even(), b.lam(n)}) : b.dsum({b.lam_even(), b.lam(n - 1)});
        case 23:
          if (n_odd) return b.dsum({b.lam_even(), b.lam(n), b.cl(1, b.lam(n - 1))});
          return b.dsum({b.lam_even(), b.lam(n - 1), b.cl(1, b.lam_ge(n - 2)), b.cl(2, b.lam(n - 2))});
        case 1:
          return b.lam_even();
        case 2:
          return (n_odd || r_eq_n) ? b.lam_even() : b.dsum({b.lam_even(), b.top()});
        case 3:
          if (n_odd) return b.dsum({b.lam_even(), b.cl(1, b.lam(n - 2)), b.cl(2, b.lam(n - 3))});
          return b.dsum({b.lam_even(), b.cl(1, b.lam(n - 1)), b.cl(2, b.lam(n - 2))});
      }
      break;
    case CentralizerKind::MixTwisted:
      switch (pair) {
        case 2:
          return r_eq_n ? b.lam_all() : b.dsum({b.lam_all(), b.top()});
        case 13:
        case 1:
        case 12:
          return b.lam_all();
        case 3:
          if (r_eq_n) return b.lam_all();
          return b.dsum({b.lam_all(), b.cl(1, b.lam_ge(n - 2)), b.cl(2, b.lam_ge(n - 3))});
        case 23:
          if (r_eq_n) return b.lam_all();
          return b.dsum({b.lam_all(), b.cl(1, b.lam(n - 1)), b.cl(2, b.lam(n - 2))});
      }
      break;
  }
  throw std::logic_error("qt_pair_explicit: no tabulated form for this pair");
}

Subspace closed_form_qt_pair(const Signature& sig, int k, int m, CentralizerKind kind) {
  if (k > m) std::swap(k, m);
  if (k < 0 || m > 3 || k == m) throw std::invalid_argument("quaternion-type pair must be two distinct types in 0..3");
  // Defining intersection. For tilde the even type contributes its plain centralizer and
  // the odd type its hat centralizer, which is exactly what closed_form_qt returns.
  const Subspace by_intersection = intersect(closed_form_qt(sig, k, kind), closed_form_qt(sig, m, kind));
  const Subspace tabulated = qt_pair_explicit(sig, k, m, kind);
  if (by_intersection != tabulated)
    throw ClosedFormMismatch("pair qt:" + std::to_string(k) + std::to_string(m) + " (" + std::string(kind_name(kind)) +
                             ") in " + sig.to_string() + ": intersection " + format_subspace(by_intersection) +
                             " != tabulated " + format_subspace(tabulated));
  return tabulated;
}

}  // namespace cliffcent
