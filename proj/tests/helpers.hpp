#ifndef LTSG_TESTS_HELPERS_HPP_
#define LTSG_TESTS_HELPERS_HPP_

#include <doctest.h>

#include <vector>

#include "ltsg/catalog.hpp"
#include "ltsg/decision.hpp"
#include "ltsg/oracle.hpp"
#include "ltsg/semigroup.hpp"

namespace ltsg::testing {

inline Semigroup cat(std::string const& key,
                     std::optional<std::size_t> size = std::nullopt) {
  return catalog(key, size).semigroup;
}

/// Catalog corpus plus every associative table of order <= 2: the small
/// sweep used by property tests (the full order-3 sweep lives in the
/// acceptance suite).
inline std::vector<Semigroup> small_corpus() {
  std::vector<Semigroup> corpus;
  for (auto const& entry : catalog_corpus()) {
    corpus.push_back(entry.semigroup);
  }
  for (std::size_t order = 1; order <= 2; ++order) {
    for (auto const& s : enumerate_semigroups(order)) {
      corpus.push_back(s);
    }
  }
  return corpus;
}

/// A witness substitution must rebuild to the stored unequal sides.
inline void check_instance_sound(Semigroup const& s,
                                 IdentityInstance const& inst) {
  auto const [lhs_word, rhs_word] = inst.words();
  CHECK(multiply_word(s, lhs_word) == inst.lhs);
  CHECK(multiply_word(s, rhs_word) == inst.rhs);
  CHECK(inst.lhs != inst.rhs);
}

inline void check_violation_sound(Semigroup const& s,
                                  IdentityViolation const& v) {
  auto const [lhs_word, rhs_word] = v.words();
  CHECK(multiply_word(s, lhs_word) == v.lhs);
  CHECK(multiply_word(s, rhs_word) == v.rhs);
  CHECK(v.lhs != v.rhs);
}

/// The degree-4 transformation closure whose right-divisor bound is the
/// unique maximum: g = [1,2,2,3] next to the constant map to 0.
inline TransformationClosure divisor_fixture() {
  return transformation_subsemigroup(4, {{1, 2, 2, 3}, {0, 0, 0, 0}}, 64);
}

}  // namespace ltsg::testing

#endif  // LTSG_TESTS_HELPERS_HPP_
