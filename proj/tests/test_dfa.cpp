#include <doctest.h>

#include "helpers.hpp"
#include "ltsg/dfa.hpp"
#include "ltsg/level.hpp"
#include "ltsg/oracle.hpp"

using namespace ltsg;

TEST_CASE("parses small automata") {
  Dfa const one = parse_dfa("states: 1\nletter a: 0\n");
  CHECK(one.state_count == 1);
  CHECK(one.letters == std::vector<std::string>{"a"});

  Dfa const swap = parse_dfa(
      "# flip-flop\n"
      "states: 2\n"
      "start: 0\n"
      "accept: 0 1\n"
      "letter a: 1 0\n");
  CHECK(swap.state_count == 2);
  CHECK(swap.transitions[0] == std::vector<std::size_t>{1, 0});
  CHECK(swap.start == 0);
  CHECK(swap.accepting.size() == 2);
}

TEST_CASE("rejects malformed automata") {
  CHECK_THROWS_WITH_AS(parse_dfa("states: 2\nletter a: 1 0 1\n"),
                       doctest::Contains("maps 3 states"), invalid_input);
  CHECK_THROWS_AS(parse_dfa("states: 2\nletter a: 1\n"), invalid_input);
  CHECK_THROWS_AS(parse_dfa("states: 2\nletter a: 2 0\n"), invalid_input);
  CHECK_THROWS_AS(
      parse_dfa("states: 2\nletter a: 1 0\nletter a: 0 1\n"),
      invalid_input);
  CHECK_THROWS_AS(parse_dfa("letter a: 0\n"), invalid_input);
  CHECK_THROWS_AS(parse_dfa("states: 1\n"), invalid_input);
  CHECK_THROWS_AS(parse_dfa("states: 0\n"), invalid_input);
}

TEST_CASE("the swap automaton yields a group") {
  Dfa const swap = parse_dfa("states: 2\nletter a: 1 0\n");
  TransformationClosure const closure = transition_semigroup(swap, 16);
  CHECK(closure.semigroup.order() == 2);

  Verdict const verdict = is_locally_testable(closure.semigroup);
  CHECK_FALSE(verdict.locally_testable);
  REQUIRE(verdict.witness.has_value());
  CHECK(std::holds_alternative<NontrivialSubgroup>(*verdict.witness));
}

TEST_CASE("the one-state automaton yields the trivial semigroup") {
  Dfa const one = parse_dfa("states: 1\nletter a: 0\n");
  TransformationClosure const closure = transition_semigroup(one, 4);
  CHECK(closure.semigroup.order() == 1);
  CHECK(is_locally_testable(closure.semigroup).locally_testable);
  CHECK(level(closure.semigroup).level == 1);
}

TEST_CASE("the degree-3 fixture matches the oracle") {
  Dfa const dfa = parse_dfa(
      "states: 3\n"
      "letter a: 0 0 1\n"
      "letter b: 1 1 0\n");
  TransformationClosure const closure = transition_semigroup(dfa, 64);
  CHECK(closure.semigroup.order() == 4);

  Verdict const verdict = is_locally_testable(closure.semigroup);
  auto const oracle = min_level(closure.semigroup, testability_sense::B, 12);
  CHECK(verdict.locally_testable == oracle.has_value());
  REQUIRE(verdict.locally_testable);
  LevelBreakdown const breakdown = level(closure.semigroup, verdict);
  CHECK(breakdown.level == *oracle);
  CHECK(breakdown.level == 2);

  // Every element is a product of letter images.
  std::vector<char> reached(closure.semigroup.order(), 0);
  std::vector<element_id> queue;
  for (auto const& [letter, image] : closure.generator_map) {
    if (!reached[image]) {
      reached[image] = 1;
      queue.push_back(image);
    }
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (auto const& [letter, image] : closure.generator_map) {
      element_id const next = closure.semigroup.product(queue[qi], image);
      if (!reached[next]) {
        reached[next] = 1;
        queue.push_back(next);
      }
    }
  }
  CHECK(queue.size() == closure.semigroup.order());

  // The word probe agrees with the computed level.
  CHECK(word_probe(closure.semigroup, closure.generator_map, breakdown.level,
                   8, testability_sense::B)
            .ok);
  CHECK_FALSE(word_probe(closure.semigroup, closure.generator_map,
                         breakdown.level - 1, 8, testability_sense::B)
                  .ok);
}
