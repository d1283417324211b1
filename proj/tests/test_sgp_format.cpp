#include <doctest.h>

#include "helpers.hpp"
#include "ltsg/sgp_format.hpp"

using namespace ltsg;
using ltsg::testing::cat;

namespace {

char const* kA2Text =
    "# 5-element 0-simple semigroup\n"
    "5\n"
    "0 2 2 0 4\n"
    "3 4 1 4 4\n"
    "0 4 2 4 4\n"
    "3 1 1 3 4\n"
    "4 4 4 4 4\n"
    "names: a b ab ba 0\n";

}  // namespace

TEST_CASE("parses the trivial semigroup") {
  Semigroup const s = parse_semigroup("1\n0\n");
  CHECK(s.order() == 1);
  CHECK(s.product(0, 0) == 0);
}

TEST_CASE("parses the a2 table with comments and names") {
  Semigroup const s = parse_semigroup(kA2Text);
  CHECK(s.order() == 5);
  CHECK(s.table() == cat("a2").table());
  CHECK(s.names() == std::vector<std::string>{"a", "b", "ab", "ba", "0"});
  CHECK(s.name_of(2) == "ab");
}

TEST_CASE("rejects a non-associative table with the violating triple") {
  CHECK_THROWS_WITH_AS(parse_semigroup("2\n0 0\n1 0\n"),
                       doctest::Contains("associativity fails"),
                       invalid_input);
}

TEST_CASE("reports malformed input with line numbers") {
  CHECK_THROWS_AS(parse_semigroup(""), invalid_input);
  CHECK_THROWS_AS(parse_semigroup("0\n"), invalid_input);
  CHECK_THROWS_WITH_AS(parse_semigroup("2\n0 0\n0\n"),
                       doctest::Contains("expected 2"), invalid_input);
  CHECK_THROWS_WITH_AS(parse_semigroup("2\n0 0\n0 7\n"),
                       doctest::Contains("out of range"), invalid_input);
  CHECK_THROWS_WITH_AS(parse_semigroup("2\n0 0\n0 x\n"),
                       doctest::Contains("expected an element id"),
                       invalid_input);
  CHECK_THROWS_AS(parse_semigroup("1\n0\nnames: a b\n"), invalid_input);
  CHECK_THROWS_AS(parse_semigroup("1\n0\n0\n"), invalid_input);
  CHECK_THROWS_AS(parse_semigroup("two\n0\n"), invalid_input);
}

TEST_CASE("serialisation round-trips the catalog corpus") {
  for (auto const& entry : catalog_corpus()) {
    Semigroup const parsed = parse_semigroup(to_sgp(entry.semigroup));
    CHECK(parsed.table() == entry.semigroup.table());
    CHECK(parsed.names() == entry.semigroup.names());
  }
}
