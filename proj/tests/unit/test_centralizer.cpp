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

oracle::Kind to_oracle(K kind) {
  switch (kind) {
    case K::Plain:
      return oracle::Kind::Plain;
    case K::GradeTwisted:
      return oracle::Kind::Hat;
    case K::MixTwisted:
      return oracle::Kind::Tilde;
  }
  return oracle::Kind::Plain;
}

}  // namespace

TEST_CASE("kind names") {
  CHECK(kind_name(K::GradeTwisted) == "hat");
  for (K k : kAllKinds) CHECK(parse_kind(kind_name(k)) == k);
  CHECK_THROWS_AS(parse_kind("twisted"), std::invalid_argument);
}

TEST_CASE("brute force examples") {
  const Signature g2(0, 0, 2);
  CHECK(brute_force_centralizer(grade_subspace(g2, 1), K::Plain) == S(g2, {"e[]", "e[1,2]"}));
  CHECK(brute_force_centralizer(grade_subspace(g2, 1), K::GradeTwisted) == full_algebra(g2));

  const Signature s101(1, 0, 1);
  CHECK(brute_force_centralizer(grade_subspace(s101, 2), K::Plain) == S(s101, {"e[]", "e[2]", "e[1,2]"}));

  for (const Signature& sig : oracle::signatures(1, 4)) {
    CHECK(brute_force_centralizer(grade_subspace(sig, 0), K::Plain) == full_algebra(sig));
    CHECK(brute_force_centralizer(grade_subspace(sig, 0), K::GradeTwisted) == parity_subspace(sig, 0));
    CHECK(brute_force_centralizer(grade_subspace(sig, 0), K::MixTwisted) == full_algebra(sig));
  }
}

TEST_CASE("brute force agrees with the product-level oracle for n <= 6") {
  for (const Signature& sig : oracle::signatures(1, 6))
    for (K kind : kAllKinds) {
      for (int m = 0; m <= sig.n(); ++m) {
        const Subspace target = grade_subspace(sig, m);
        REQUIRE(brute_force_centralizer(target, kind) == oracle::centralizer(target, to_oracle(kind)));
      }
      for (int t = 0; t < 4; ++t) {
        const Subspace target = quaternion_type_subspace(sig, t);
        REQUIRE(brute_force_centralizer(target, kind) == oracle::centralizer(target, to_oracle(kind)));
      }
    }
}

TEST_CASE("nullspace oracle examples") {
  const Signature g2(0, 0, 2);
  NullspaceResult r = nullspace_centralizer_oracle(grade_subspace(g2, 1), K::Plain);
  CHECK(r.dimension == 2);
  CHECK(nullspace_spans(r, S(g2, {"e[]", "e[1,2]"})));

  const Signature e2(2, 0, 0);
  r = nullspace_centralizer_oracle(grade_subspace(e2, 1), K::Plain);
  CHECK(r.dimension == 1);
  CHECK(nullspace_spans(r, S(e2, {"e[]"})));

  for (const Signature& sig : oracle::signatures(1, 3))
    CHECK(nullspace_centralizer_oracle(grade_subspace(sig, 0), K::Plain).dimension == sig.blade_count());

  CHECK_THROWS_AS(nullspace_centralizer_oracle(grade_subspace(Signature(9, 0, 0), 1), K::Plain),
                  std::invalid_argument);
  CHECK_FALSE(nullspace_spans(r, S(e2, {"e[1]"})));
}

TEST_CASE("nullspace basis vectors really solve the defining equation") {
  const Signature sig(1, 1, 2);
  for (K kind : kAllKinds)
    for (int m = 1; m <= sig.n(); ++m) {
      const Subspace target = grade_subspace(sig, m);
      const NullspaceResult r = nullspace_centralizer_oracle(target, kind);
      for (const Multivector& x : r.basis)
        for (Blade vb : target.blades()) {
          const Multivector v(sig, vb);
          Multivector lhs(sig);
          if (kind == K::Plain || (kind == K::MixTwisted && vb.grade() % 2 == 0)) lhs = x * v;
          else lhs = grade_involute(x) * v;
          REQUIRE(lhs == v * x);
        }
    }
}

TEST_CASE("center examples") {
  CHECK(center_closed_form({3, 0, 0}) == S({3, 0, 0}, {"e[]", "e[1,2,3]"}));
  CHECK(center_closed_form({2, 0, 0}) == S({2, 0, 0}, {"e[]"}));
  CHECK(center_closed_form({0, 0, 2}) == S({0, 0, 2}, {"e[]", "e[1,2]"}));
  for (const Signature& sig : oracle::signatures(1, 7))
    REQUIRE(center_closed_form(sig) == oracle::centralizer(full_algebra(sig), oracle::Kind::Plain));
}
