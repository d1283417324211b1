#ifndef LTSG_CATALOG_HPP_
#define LTSG_CATALOG_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ltsg/semigroup.hpp"

namespace ltsg {

/// A named example semigroup with its ground-truth verdict where one is
/// known in closed form.
struct CatalogEntry {
  std::string name;  // canonical, e.g. "leftzero(3)"
  Semigroup semigroup;
  std::optional<bool> expected_locally_testable;
  std::optional<std::size_t> expected_level;
};

/// Known keys: a2, trivial, ul, ur, leftzero, rightzero, null,
/// chain-semilattice, cyclic, monogenic. The sized families take `size`
/// (leftzero, rightzero, null, cyclic default to 2, chain-semilattice and
/// monogenic to 3).
CatalogEntry catalog(std::string const& key,
                     std::optional<std::size_t> size = std::nullopt);

std::vector<std::string> catalog_keys();

/// A fixed corpus of catalog entries used by the test suites.
std::vector<CatalogEntry> catalog_corpus();

/// Every associative table on {0..order-1}, in lexicographic table order.
/// Refuses order > 3: the naive candidate space grows as order^(order^2).
void for_each_semigroup(std::size_t order,
                        std::function<void(Semigroup const&)> const& fn);
std::vector<Semigroup> enumerate_semigroups(std::size_t order);

/// A transformation closure: the semigroup of all compositions of the
/// generator maps (left-to-right action), its Cayley table, and the
/// letter-to-element map of the generators.
struct TransformationClosure {
  Semigroup semigroup;
  std::vector<std::pair<std::string, element_id>> generator_map;
  std::vector<std::vector<std::size_t>> elements;  // maps, by element id
};

/// Closes the generator maps on {0..degree-1} under composition; throws
/// when the closure would exceed `cap` elements. Letters default to
/// a, b, c, ... when none are given.
TransformationClosure transformation_subsemigroup(
    std::size_t degree, std::vector<std::vector<std::size_t>> const& generators,
    std::size_t cap, std::vector<std::string> letters = {});

}  // namespace ltsg

#endif  // LTSG_CATALOG_HPP_
