#ifndef LTSG_DECISION_HPP_
#define LTSG_DECISION_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ltsg/semigroup.hpp"

namespace ltsg {

/// A substitution that makes the two sides of a named identity evaluate to
/// different elements. `words()` rebuilds both sides from the substitution
/// so a witness can be re-checked against the raw table.
struct IdentityViolation {
  std::string identity;  // "x^2=x^3" or "xyx=xyxyx"
  std::vector<element_id> substitution;
  element_id lhs = 0, rhs = 0;

  std::pair<std::vector<element_id>, std::vector<element_id>> words() const;

  bool operator==(IdentityViolation const&) const = default;
};

/// Two distinct idempotents of one left-zero (or right-zero) block sharing
/// the unit f: fe = ef = e and fi = if = i.
struct CommonUnitWitness {
  element_id e = 0, i = 0, f = 0;
  side block_side = side::left;

  bool operator==(CommonUnitWitness const&) const = default;
};

/// An element whose power sequence cycles with period > 1.
struct NontrivialSubgroup {
  element_id element = 0;
  std::size_t cycle_length = 0;

  bool operator==(NontrivialSubgroup const&) const = default;
};

/// e*x*e is not idempotent (x == y) or two members of eSe fail to commute.
struct SemilatticeFailure {
  element_id e = 0, x = 0, y = 0;

  bool operator==(SemilatticeFailure const&) const = default;
};

using Witness = std::variant<IdentityViolation, CommonUnitWitness,
                             NontrivialSubgroup, SemilatticeFailure>;

enum class DecisionMethod { identities, semilattice };

const char* to_string(DecisionMethod m);
DecisionMethod decision_method_from_string(std::string_view text);

struct Verdict {
  bool locally_testable = false;
  DecisionMethod method = DecisionMethod::identities;
  std::optional<Witness> witness;

  bool operator==(Verdict const&) const = default;
};

/// One short human-readable line describing a witness (uses element names).
std::string describe(Semigroup const& s, Witness const& w);

/// Verifies x^2 = x^3 and xyx = xyxyx with all variables ranging over the
/// given set (intended: S*E*S). Returns the first violation in ascending
/// scan order, if any.
std::optional<IdentityViolation>
check_ses_identities(Semigroup const& s, std::span<element_id const> ses);

/// Looks for two distinct idempotents of one block that share a unit.
/// Scans units in ascending id order and candidates in block order, so the
/// returned witness is deterministic. Quadratic in |E|.
std::optional<CommonUnitWitness>
common_unit_violation(Semigroup const& s, IdempotentBlocks const& blocks);

/// The decision pipeline: power-cycle screen, then the x^2=x^3 and
/// xyx=xyxyx checks on S*E*S, then the common-unit scan on the left-zero
/// and right-zero block orderings.
Verdict is_locally_testable(Semigroup const& s);

/// Independent characterisation: e*S*e must be a commutative band for every
/// idempotent e.
Verdict is_locally_testable_semilattice(Semigroup const& s);

}  // namespace ltsg

#endif  // LTSG_DECISION_HPP_
