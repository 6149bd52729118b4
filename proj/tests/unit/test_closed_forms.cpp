#include <doctest.h>

#include "cliffcent/centralizer.hpp"
#include "cliffcent/closed_forms.hpp"
#include "oracles.hpp"

using namespace cliffcent;

namespace {

using K = CentralizerKind;

Subspace S(const Signature& sig, std::initializer_list<const char*> blades) {
  Subspace out(sig);
  for (const char* b : blades) out.insert(parse_blade(b));
  return out;
}

Subspace oracle_grade(const Signature& sig, int m, oracle::Kind kind) {
  return oracle::centralizer(oracle::of_grade(sig, m), kind);
}

}  // namespace

TEST_CASE("closed_form_grade examples") {
  CHECK(closed_form_grade({3, 0, 1}, 1, K::GradeTwisted) == S({3, 0, 1}, {"e[]", "e[4]"}));
  CHECK(closed_form_grade({1, 0, 1}, 2, K::Plain) == S({1, 0, 1}, {"e[]", "e[2]", "e[1,2]"}));
  CHECK(closed_form_grade({0, 0, 3}, 2, K::GradeTwisted) ==
        S({0, 0, 3}, {"e[]", "e[1,2]", "e[1,3]", "e[2,3]", "e[1,2,3]"}));
  CHECK(closed_form_grade({2, 1, 0}, 3, K::Plain) == full_algebra({2, 1, 0}));
}

TEST_CASE("closed_form_grade outside 1..n") {
  for (const Signature& sig : oracle::signatures(1, 4))
    for (K kind : kAllKinds) {
      CHECK(closed_form_grade(sig, -1, kind) == full_algebra(sig));
      CHECK(closed_form_grade(sig, sig.n() + 1, kind) == full_algebra(sig));
      CHECK(closed_form_grade(sig, 0, kind) ==
            (kind == K::GradeTwisted ? parity_subspace(sig, 0) : full_algebra(sig)));
    }
}

TEST_CASE("general formulas match the oracle where they apply") {
  for (const Signature& sig : oracle::signatures(1, 7)) {
    if (sig.r() == sig.n()) continue;
    for (int m = 1; m <= sig.n(); ++m) {
      REQUIRE(theorem_closed_form(sig, m, K::Plain) == oracle_grade(sig, m, oracle::Kind::Plain));
      REQUIRE(theorem_closed_form(sig, m, K::GradeTwisted) == oracle_grade(sig, m, oracle::Kind::Hat));
    }
  }
  CHECK_THROWS_AS(theorem_closed_form({0, 0, 3}, 1, K::Plain), std::invalid_argument);
  CHECK_THROWS_AS(theorem_closed_form({1, 0, 2}, 0, K::Plain), std::invalid_argument);
  CHECK_THROWS_AS(theorem_closed_form({1, 0, 2}, 4, K::Plain), std::invalid_argument);
  CHECK_THROWS_AS(theorem_closed_form({1, 0, 2}, 1, K::MixTwisted), std::invalid_argument);
}

TEST_CASE("the general formula's sum is not direct in Cl(2,0,2) at m = 4") {
  // The even-m plain formula adds {C^2 Lambda^{>=0}} and C^n. With p + q = 2 the first
  // term already contains e[1,2]e[3,4] = e[1,2,3,4], so a strict direct sum cannot be used.
  const Signature sig(2, 0, 2);
  const Subspace c2_lambda = product_span(nondeg_grade_subspace(sig, 2), lambda_at_least(sig, 0));
  CHECK(c2_lambda.contains(parse_blade("e[1,2,3,4]")));
  CHECK_THROWS_AS(direct_sum({c2_lambda, grade_subspace(sig, 4)}), OverlapError);
  CHECK(theorem_closed_form(sig, 4, K::Plain) == oracle_grade(sig, 4, oracle::Kind::Plain));
}

TEST_CASE("Grassmann formulas") {
  for (int n = 1; n <= 7; ++n) {
    const Signature sig(0, 0, n);
    for (int m = 0; m <= n; ++m) {
      REQUIRE(grassmann_closed_form(sig, m, K::Plain) == oracle_grade(sig, m, oracle::Kind::Plain));
      REQUIRE(grassmann_closed_form(sig, m, K::GradeTwisted) == oracle_grade(sig, m, oracle::Kind::Hat));
    }
  }
  CHECK_THROWS_AS(grassmann_closed_form({1, 0, 1}, 1, K::Plain), std::invalid_argument);
}

TEST_CASE("mixed twist follows the parity of m") {
  for (const Signature& sig : oracle::signatures(1, 7))
    for (int m = 1; m <= sig.n(); ++m) {
      const K branch = m % 2 == 0 ? K::Plain : K::GradeTwisted;
      REQUIRE(closed_form_grade(sig, m, K::MixTwisted) == closed_form_grade(sig, m, branch));
      if (sig.n() <= 6) REQUIRE(closed_form_grade(sig, m, K::MixTwisted) == oracle_grade(sig, m, oracle::Kind::Tilde));
    }
}

TEST_CASE("small-grade tables") {
  for (const Signature& sig : oracle::signatures(1, 7))
    CHECK(closed_form_small_grade(sig, 1, K::Plain) == center_closed_form(sig));

  const Signature s102(1, 0, 2);
  const Subspace expected = direct_sum(
      {lambda_all(s102), product_span(nondeg_grade_subspace(s102, 1), lambda_at_least(s102, 1))});
  CHECK(closed_form_small_grade(s102, 3, K::GradeTwisted) == expected);
  CHECK(expected == oracle_grade(s102, 3, oracle::Kind::Hat));

  CHECK(closed_form_grade({0, 0, 3}, 4, K::Plain) == full_algebra({0, 0, 3}));
  CHECK_THROWS_AS(closed_form_small_grade(s102, 5, K::Plain), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_small_grade(s102, 1, K::MixTwisted), std::invalid_argument);

  for (const Signature& sig : oracle::signatures(1, 7))
    for (int m = 1; m <= std::min(4, sig.n()); ++m)
      for (K kind : {K::Plain, K::GradeTwisted})
        REQUIRE(closed_form_small_grade(sig, m, kind) == closed_form_grade(sig, m, kind));
}

TEST_CASE("small-grade tables also give the right answer when m exceeds n") {
  // Cl^m = {0} for m > n, so the centralizer is the whole algebra. The tables are written
  // for m <= n; they collapse correctly for these m too because every term with a
  // negative Lambda grade is empty and the remaining ones cover the algebra.
  for (const Signature& sig : oracle::signatures(1, 3))
    for (int m = sig.n() + 1; m <= 4; ++m)
      for (K kind : {K::Plain, K::GradeTwisted}) {
        INFO(sig.to_string(), " m=", m, " ", kind_name(kind));
        CHECK(closed_form_small_grade(sig, m, kind) == full_algebra(sig));
      }
}

TEST_CASE("non-degenerate tables") {
  CHECK(closed_form_nondegenerate({3, 0, 0}, 3, K::Plain) == full_algebra({3, 0, 0}));
  CHECK(closed_form_nondegenerate({2, 0, 0}, 2, K::Plain) == S({2, 0, 0}, {"e[]", "e[1,2]"}));
  // m even, n odd: the twisted centralizer is the scalars.
  CHECK(closed_form_nondegenerate({2, 1, 0}, 2, K::GradeTwisted) == S({2, 1, 0}, {"e[]"}));
  CHECK(oracle_grade({2, 1, 0}, 2, oracle::Kind::Hat) == S({2, 1, 0}, {"e[]"}));
  CHECK_THROWS_AS(closed_form_nondegenerate({2, 0, 1}, 1, K::Plain), std::invalid_argument);

  for (const Signature& sig : oracle::signatures(1, 7)) {
    if (sig.r() != 0) continue;
    for (int m = 0; m <= sig.n(); ++m)
      for (K kind : kAllKinds) REQUIRE(closed_form_nondegenerate(sig, m, kind) == closed_form_grade(sig, m, kind));
  }
}

TEST_CASE("quaternion-type closed forms") {
  for (const Signature& sig : oracle::signatures(1, 6)) {
    CHECK(closed_form_qt(sig, 1, K::GradeTwisted) == lambda_all(sig));
    for (int t = 0; t < 4; ++t) {
      const Subspace target = quaternion_type_subspace(sig, t);
      REQUIRE(closed_form_qt(sig, t, K::Plain) == oracle::centralizer(target, oracle::Kind::Plain));
      REQUIRE(closed_form_qt(sig, t, K::GradeTwisted) == oracle::centralizer(target, oracle::Kind::Hat));
      REQUIRE(closed_form_qt(sig, t, K::MixTwisted) == oracle::centralizer(target, oracle::Kind::Tilde));
    }
  }
  CHECK(closed_form_qt({1, 0, 1}, 2, K::Plain) == S({1, 0, 1}, {"e[]", "e[2]", "e[1,2]"}));
  CHECK(closed_form_qt({2, 0, 0}, 0, K::GradeTwisted) == S({2, 0, 0}, {"e[]", "e[1,2]"}));
  CHECK_THROWS_AS(closed_form_qt({2, 0, 0}, 4, K::Plain), std::invalid_argument);
}

TEST_CASE("quaternion-type pair closed forms") {
  CHECK(closed_form_qt_pair({1, 0, 2}, 0, 1, K::GradeTwisted) == S({1, 0, 2}, {"e[]", "e[2,3]"}));
  CHECK(closed_form_qt_pair({3, 0, 0}, 1, 3, K::Plain) == S({3, 0, 0}, {"e[]", "e[1,2,3]"}));
  CHECK(closed_form_qt_pair({2, 0, 1}, 1, 3, K::MixTwisted) == S({2, 0, 1}, {"e[]", "e[3]"}));
  CHECK(closed_form_qt_pair({2, 0, 1}, 3, 1, K::MixTwisted) == closed_form_qt_pair({2, 0, 1}, 1, 3, K::MixTwisted));
  CHECK_THROWS_AS(closed_form_qt_pair({2, 0, 1}, 1, 1, K::Plain), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_qt_pair({2, 0, 1}, 0, 4, K::Plain), std::invalid_argument);

  for (const Signature& sig : oracle::signatures(1, 6))
    for (int k = 0; k < 4; ++k)
      for (int m = k + 1; m < 4; ++m) {
        const Subspace target = direct_sum({quaternion_type_subspace(sig, k), quaternion_type_subspace(sig, m)});
        REQUIRE(closed_form_qt_pair(sig, k, m, K::Plain) == oracle::centralizer(target, oracle::Kind::Plain));
        REQUIRE(closed_form_qt_pair(sig, k, m, K::GradeTwisted) == oracle::centralizer(target, oracle::Kind::Hat));
        REQUIRE(closed_form_qt_pair(sig, k, m, K::MixTwisted) == oracle::centralizer(target, oracle::Kind::Tilde));
      }
}

TEST_CASE("even part of Z^4 written out") {
  for (const Signature& sig : oracle::signatures(1, 7))
    REQUIRE(even_z4_explicit(sig) == parity_part(closed_form_grade(sig, 4, K::Plain), 0));
}
