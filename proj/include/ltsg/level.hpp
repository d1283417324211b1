#ifndef LTSG_LEVEL_HPP_
#define LTSG_LEVEL_HPP_

#include <optional>
#include <vector>

#include "ltsg/decision.hpp"
#include "ltsg/semigroup.hpp"

namespace ltsg {

/// level() refuses inputs that are not locally testable; the decision
/// witness rides along.
struct not_locally_testable : std::runtime_error {
  explicit not_locally_testable(Verdict v)
      : std::runtime_error("the semigroup is not locally testable"),
        verdict(std::move(v)) {}
  Verdict verdict;
};

/// Levels of the residue G = S \ SES: G_1 = G \ G^2 is the unique minimal
/// generating set, and G_{i+1} = (G_1 G_i) \ ((G \ G_1) G_i). The level of
/// g is the maximal number of G-factors in any factorisation of g.
struct GeneratorLevels {
  std::vector<element_id> g1;
  std::vector<std::vector<element_id>> tiers;   // tiers[i] = G_{i+1}
  std::vector<std::size_t> level_by_element;    // 0 for elements outside G

  std::size_t level_of(element_id g) const;     // throws for g outside G
};

GeneratorLevels generator_levels(Semigroup const& s, ProductChain const& chain);

/// One term of the power-identity bound: m(a)*|a| + 1 for a in G itself
/// (factorization empty), or (|b|+|c|)*m + |b| + 1 for a product a = b*c
/// with b in G and m the largest value where a^{m+1} b != a^{m+2} b. The
/// product a, and the right factor c, may lie in the ideal; a right factor
/// inside the ideal can only fail at m = 0 and contributes |b| + 1.
struct AlphaContribution {
  element_id a = 0;
  std::optional<std::pair<element_id, element_id>> factorization;
  std::size_t value = 0;

  bool operator==(AlphaContribution const&) const = default;
};

struct AlphaBound {
  std::size_t value = 0;
  std::vector<AlphaContribution> contributions;
};

/// Largest n for which the power identities fail. Requires G nonempty and
/// the semigroup aperiodic.
AlphaBound alpha_bound(Semigroup const& s, GeneratorLevels const& levels);

/// A residue element g that divides two distinct idempotents of one
/// zero block (e, i in g*S for the left side, in S*g for the right).
struct DivisorRecord {
  side block_side = side::left;
  element_id g = 0;
  element_id e = 0, i = 0;
  std::size_t value = 0;  // |g| + 1

  bool operator==(DivisorRecord const&) const = default;
};

struct DivisorBound {
  std::size_t value = 0;  // 0 when no qualifying pair exists
  std::vector<DivisorRecord> records;
};

DivisorBound divisor_bound(Semigroup const& s, GeneratorLevels const& levels,
                           IdempotentBlocks const& blocks);

struct ElementRecord {
  element_id a = 0;
  std::size_t m = 0;       // largest m with a^{m+1} != a^{m+2}
  std::size_t length = 0;  // |a|, the generator level

  bool operator==(ElementRecord const&) const = default;
};

/// The exact level of local testability and how it decomposes.
///
/// With G nonempty, level = max(n_bound, l_bound, r_bound) + 1. With G
/// empty the level is 1 when x = x^2 and xy = yx hold, else 2, and all
/// three bounds are reported as 0.
struct LevelBreakdown {
  std::size_t n_bound = 0;
  std::size_t l_bound = 0;
  std::size_t r_bound = 0;
  std::size_t level = 0;
  std::vector<ElementRecord> elements;
  std::vector<AlphaContribution> alpha_details;
  std::vector<DivisorRecord> divisor_details;

  bool operator==(LevelBreakdown const&) const = default;
};

/// Computes the exact level of a locally testable semigroup; throws
/// not_locally_testable otherwise.
LevelBreakdown level(Semigroup const& s);

/// As level(), for callers that already ran the decision.
LevelBreakdown level(Semigroup const& s, Verdict const& verdict);

}  // namespace ltsg

#endif  // LTSG_LEVEL_HPP_
