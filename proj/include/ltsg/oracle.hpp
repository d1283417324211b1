#ifndef LTSG_ORACLE_HPP_
#define LTSG_ORACLE_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ltsg/semigroup.hpp"

namespace ltsg {

enum class testability_sense : std::uint8_t { B, T };

const char* to_string(testability_sense s);
testability_sense sense_from_string(std::string_view text);

enum class IdentityFamily : std::uint8_t {
  alpha,           // (x1..xr)^{m+1} x1..xp = (x1..xr)^{m+2} x1..xp
  gamma,           // X y X z X = X z X y X,  X = x1..x_{n-1}
  beta,            // t1 X y X z X t2 = t1 X z X y X t2
  exchange,        // xyxzx = xzxyx
  b1_idempotent,   // x = x^2
  b1_commutative,  // xy = yx
};

const char* to_string(IdentityFamily f);

/// A fully substituted identity instance whose two sides evaluate to
/// different elements. `words()` rebuilds both sides as letter sequences
/// over the substitution, so lhs/rhs can be re-derived via multiply_word.
struct IdentityInstance {
  IdentityFamily family = IdentityFamily::alpha;
  std::size_t n = 0;
  std::size_t r = 0;  // meaningful for alpha only
  std::vector<element_id> substitution;
  element_id lhs = 0, rhs = 0;

  std::pair<std::vector<element_id>, std::vector<element_id>> words() const;

  bool operator==(IdentityInstance const&) const = default;
};

struct IdentityCheck {
  bool holds = true;
  std::optional<IdentityInstance> violation;
};

/// The power identity with r variables at level n: substitutions range over
/// exact-length product sets, which is equivalent to free substitution.
IdentityCheck holds_alpha(Semigroup const& s, ProductChain const& chain,
                          std::size_t n, std::size_t r);
IdentityCheck holds_alpha(Semigroup const& s, std::size_t n, std::size_t r);

/// The exchange identity over X in Prod_{n-1}: X y X z X = X z X y X.
IdentityCheck holds_gamma(Semigroup const& s, ProductChain const& chain,
                          std::size_t n);
IdentityCheck holds_gamma(Semigroup const& s, std::size_t n);

/// The two-sided-context version: t1 X y X z X t2 = t1 X z X y X t2.
IdentityCheck holds_beta(Semigroup const& s, ProductChain const& chain,
                         std::size_t n);
IdentityCheck holds_beta(Semigroup const& s, std::size_t n);

/// xyxzx = xzxyx with all three variables ranging over `elems`.
IdentityCheck exchange_violation(Semigroup const& s,
                                 std::span<element_id const> elems);

/// n-testability in the B sense: x = x^2 and xy = yx for n = 1; the power
/// identities for r = 1..n plus the exchange identity for n >= 2.
bool in_variety_B(Semigroup const& s, ProductChain const& chain,
                  std::size_t n);
bool in_variety_B(Semigroup const& s, std::size_t n);

/// n-testability in the T sense (n >= 2): the power identities plus the
/// two-sided-context identity.
bool in_variety_T(Semigroup const& s, ProductChain const& chain,
                  std::size_t n);
bool in_variety_T(Semigroup const& s, std::size_t n);

/// Smallest n <= cap with membership, scanning upward (membership is
/// monotone in n). Empty when no level <= cap works.
std::optional<std::size_t> min_level(Semigroup const& s, testability_sense sense,
                                     std::size_t cap);

/// The default search cap used by the CLI cross-check.
std::size_t default_level_cap(Semigroup const& s);

/// Prefix, suffix and factor-set signature of a word at level n.
/// B sense: prefix/suffix of length n-1, factors of length n; T sense uses
/// n throughout. Words shorter than the window are kept whole.
struct WordSignature {
  std::string prefix;
  std::string suffix;
  std::set<std::string> factors;

  auto operator<=>(WordSignature const&) const = default;
};

WordSignature word_signature(std::string_view word, std::size_t n,
                             testability_sense sense);

/// Two words with equal signatures but different images under the
/// generator map; letters index into the map.
struct WordViolation {
  std::vector<std::size_t> u, v;
  element_id u_image = 0, v_image = 0;
};

struct WordProbeResult {
  bool ok = true;
  std::optional<WordViolation> violation;
  std::size_t words_checked = 0;
};

/// Enumerates every word up to max_len over the mapped letters, buckets by
/// signature at level n, and reports the first bucket whose images differ.
/// A falsification probe: ok does not prove n-testability. The letter
/// images must generate the whole semigroup.
WordProbeResult word_probe(
    Semigroup const& s,
    std::vector<std::pair<std::string, element_id>> const& generator_map,
    std::size_t n, std::size_t max_len, testability_sense sense);

struct LocalIdempotencyCheck {
  bool holds = true;
  std::optional<std::pair<element_id, element_id>> witness;  // (e, x)
};

/// Whether (e x e)^2 = e x e for every idempotent e and every x.
LocalIdempotencyCheck is_locally_idempotent(Semigroup const& s);

}  // namespace ltsg

#endif  // LTSG_ORACLE_HPP_
