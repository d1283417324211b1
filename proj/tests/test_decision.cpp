#include <doctest.h>

#include "helpers.hpp"
#include "ltsg/decision.hpp"

using namespace ltsg;
using ltsg::testing::cat;
using ltsg::testing::check_violation_sound;
using ltsg::testing::small_corpus;

TEST_CASE("ses identities on the named examples") {
  Semigroup const a2 = cat("a2");
  CHECK_FALSE(check_ses_identities(a2, product_chain(a2).ses).has_value());

  Semigroup const z2 = cat("cyclic", 2);
  auto const violation = check_ses_identities(z2, product_chain(z2).ses);
  REQUIRE(violation.has_value());
  CHECK(violation->identity == "x^2=x^3");
  CHECK(violation->substitution == std::vector<element_id>{1});
  check_violation_sound(z2, *violation);

  Semigroup const chain3 = cat("chain-semilattice", 3);
  CHECK_FALSE(
      check_ses_identities(chain3, product_chain(chain3).ses).has_value());
}

TEST_CASE("common unit scan on the named examples") {
  Semigroup const ul = cat("ul");
  auto const witness = common_unit_violation(ul, zero_blocks(ul, side::left));
  REQUIRE(witness.has_value());
  CHECK(witness->e == 1);
  CHECK(witness->i == 2);
  CHECK(witness->f == 0);
  CHECK(witness->block_side == side::left);

  Semigroup const a2 = cat("a2");
  CHECK_FALSE(
      common_unit_violation(a2, zero_blocks(a2, side::left)).has_value());
  CHECK_FALSE(
      common_unit_violation(a2, zero_blocks(a2, side::right)).has_value());

  Semigroup const lz = cat("leftzero", 2);
  CHECK_FALSE(
      common_unit_violation(lz, zero_blocks(lz, side::left)).has_value());
  CHECK_FALSE(
      common_unit_violation(lz, zero_blocks(lz, side::right)).has_value());
}

TEST_CASE("decision on the named examples") {
  CHECK(is_locally_testable(cat("a2")).locally_testable);

  Verdict const ul = is_locally_testable(cat("ul"));
  CHECK_FALSE(ul.locally_testable);
  REQUIRE(ul.witness.has_value());
  CHECK(std::holds_alternative<CommonUnitWitness>(*ul.witness));

  Verdict const ur = is_locally_testable(cat("ur"));
  CHECK_FALSE(ur.locally_testable);
  REQUIRE(ur.witness.has_value());
  auto const& ur_witness = std::get<CommonUnitWitness>(*ur.witness);
  CHECK(ur_witness.block_side == side::right);

  Verdict const z2 = is_locally_testable(cat("cyclic", 2));
  CHECK_FALSE(z2.locally_testable);
  REQUIRE(z2.witness.has_value());
  CHECK(std::get<NontrivialSubgroup>(*z2.witness).cycle_length == 2);
}

TEST_CASE("semilattice characterisation on the named examples") {
  Verdict const ul = is_locally_testable_semilattice(cat("ul"));
  CHECK_FALSE(ul.locally_testable);
  REQUIRE(ul.witness.has_value());
  auto const& failure = std::get<SemilatticeFailure>(*ul.witness);
  CHECK(failure.e == 0);  // u's local submonoid is all of S

  CHECK(is_locally_testable_semilattice(cat("a2")).locally_testable);
  CHECK(is_locally_testable_semilattice(cat("chain-semilattice", 4))
            .locally_testable);
  CHECK(is_locally_testable_semilattice(cat("rightzero", 3))
            .locally_testable);
}

TEST_CASE("the two decision paths agree on the small corpus") {
  for (auto const& s : small_corpus()) {
    CHECK(is_locally_testable(s).locally_testable ==
          is_locally_testable_semilattice(s).locally_testable);
  }
  for (auto const& s : enumerate_semigroups(3)) {
    CHECK(is_locally_testable(s).locally_testable ==
          is_locally_testable_semilattice(s).locally_testable);
  }
}

TEST_CASE("emitted witnesses re-check against the raw table") {
  auto check_witness = [](Semigroup const& s, Verdict const& verdict) {
    if (verdict.locally_testable) {
      CHECK_FALSE(verdict.witness.has_value());
      return;
    }
    REQUIRE(verdict.witness.has_value());
    if (auto const* v = std::get_if<IdentityViolation>(&*verdict.witness)) {
      check_violation_sound(s, *v);
    } else if (auto const* cu =
                   std::get_if<CommonUnitWitness>(&*verdict.witness)) {
      CHECK(cu->e != cu->i);
      CHECK(s.product(cu->e, cu->e) == cu->e);
      CHECK(s.product(cu->i, cu->i) == cu->i);
      CHECK(s.product(cu->f, cu->e) == cu->e);
      CHECK(s.product(cu->e, cu->f) == cu->e);
      CHECK(s.product(cu->f, cu->i) == cu->i);
      CHECK(s.product(cu->i, cu->f) == cu->i);
      auto const blocks = zero_blocks(s, cu->block_side);
      CHECK(blocks.block_of(cu->e) == blocks.block_of(cu->i));
    } else if (auto const* sub =
                   std::get_if<NontrivialSubgroup>(&*verdict.witness)) {
      CHECK(power_profile(s, sub->element).cycle_length == sub->cycle_length);
      CHECK(sub->cycle_length > 1);
    } else if (auto const* sf =
                   std::get_if<SemilatticeFailure>(&*verdict.witness)) {
      element_id const x = sf->x;
      element_id const y = sf->y;
      bool const bad_idempotent = x == y && s.product(x, x) != x;
      bool const bad_commute =
          x != y && s.product(x, y) != s.product(y, x);
      CHECK((bad_idempotent || bad_commute));
    }
  };

  for (auto const& s : small_corpus()) {
    check_witness(s, is_locally_testable(s));
    check_witness(s, is_locally_testable_semilattice(s));
  }
  for (auto const& s : enumerate_semigroups(3)) {
    check_witness(s, is_locally_testable(s));
    check_witness(s, is_locally_testable_semilattice(s));
  }
}
