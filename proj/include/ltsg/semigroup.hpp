#ifndef LTSG_SEMIGROUP_HPP_
#define LTSG_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ltsg {

using element_id = std::uint32_t;

/// Malformed or mathematically invalid user input (bad file, wrong table,
/// out-of-range id, violated precondition).
struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A structural fact that is guaranteed to hold failed to hold; indicates a
/// bug in this library, never in the input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

enum class side : std::uint8_t { left, right };

const char* to_string(side s);
side side_from_string(std::string_view text);

struct associativity_failure {
  element_id i, j, m;
};

/// Scans all order^3 triples; returns the first (i, j, m) with
/// (i*j)*m != i*(j*m), if any. `table` is row-major of size order^2.
std::optional<associativity_failure>
associativity_counterexample(std::size_t order,
                             std::span<element_id const> table);

/// A finite semigroup given by its full multiplication table over element
/// ids 0..order-1. Immutable after construction.
class Semigroup {
 public:
  /// Validates entry ranges always, associativity unless `validate` is
  /// false (for tables that are associative by construction).
  Semigroup(std::size_t order, std::vector<element_id> table,
            std::vector<std::string> names = {}, bool validate = true,
            std::vector<element_id> generator_hint = {});

  std::size_t order() const noexcept { return order_; }

  element_id product(element_id a, element_id b) const {
    return table_[a * order_ + b];
  }

  std::span<element_id const> row(element_id a) const {
    return {table_.data() + a * order_, order_};
  }

  std::vector<element_id> const& table() const noexcept { return table_; }

  bool has_names() const noexcept { return !names_.empty(); }
  std::vector<std::string> const& names() const noexcept { return names_; }

  /// Display name: the stored name if any, else the decimal id.
  std::string name_of(element_id a) const;

  std::vector<element_id> const& generator_hint() const noexcept {
    return generator_hint_;
  }

  bool operator==(Semigroup const& other) const noexcept {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  std::size_t order_;
  std::vector<element_id> table_;
  std::vector<std::string> names_;
  std::vector<element_id> generator_hint_;
};

/// The anti-isomorphic semigroup: product'(a, b) = product(b, a).
Semigroup opposite(Semigroup const& s);

/// Left-to-right fold of the word through the table. Throws on an empty
/// word or an out-of-range letter.
element_id multiply_word(Semigroup const& s, std::span<element_id const> word);
element_id multiply_word(Semigroup const& s,
                         std::initializer_list<element_id> word);

/// a^exponent for exponent >= 1.
element_id power(Semigroup const& s, element_id a, std::size_t exponent);

/// All e with e*e = e, ascending.
std::vector<element_id> idempotents(Semigroup const& s);

/// Eventual behaviour of the power sequence a, a^2, a^3, ...
///
/// `entry` is the least t >= 1 such that a^t lies on the eventual cycle and
/// `cycle_length` that cycle's length. For cycle_length == 1 the sequence
/// stabilises: `index` is the least t with a^t = a^{t+1}, and `m` is
/// index - 2 when index >= 2 (the largest m with a^{m+1} != a^{m+2}).
/// A cycle_length > 1 means a generates a nontrivial cyclic subgroup; then
/// `index` and `m` are empty.
struct PowerProfile {
  element_id element = 0;
  std::size_t entry = 0;
  std::size_t cycle_length = 0;
  std::optional<std::size_t> index;
  std::optional<std::size_t> m;

  bool aperiodic() const noexcept { return cycle_length == 1; }
};

PowerProfile power_profile(Semigroup const& s, element_id a);

/// The descending chain Prod_1 = S, Prod_{m+1} = Prod_m * S of sets of
/// products of exactly m factors, kept until it stabilises, together with
/// the ideal S*E*S and its complement.
///
/// `levels[m-1]` is Prod_m (sorted), for m = 1..stable_exponent.
/// `factor_links[m-1][x]` records one pair (y, s) with y*s = x and
/// y in Prod_{m-1}, for m = 2..stable_exponent+1; used to rebuild a word of
/// a requested exact length that evaluates to a given element.
struct ProductChain {
  std::vector<std::vector<element_id>> levels;
  std::size_t stable_exponent = 0;
  std::vector<element_id> ses;
  std::vector<element_id> residue;
  std::vector<std::vector<std::pair<element_id, element_id>>> factor_links;

  /// Prod_m, clamped to the stable set for m > stable_exponent.
  std::vector<element_id> const& level_set(std::size_t m) const;
};

/// Computes the chain and, independently, S*E*S; the two must agree at the
/// stable exponent (throws internal_error otherwise).
ProductChain product_chain(Semigroup const& s);

/// A word of exactly `length` letters whose product is x, which must lie in
/// Prod_length. Reconstructed from the chain's factor links.
std::vector<element_id> witness_word(Semigroup const& s,
                                     ProductChain const& chain, element_id x,
                                     std::size_t length);

/// The idempotents of S reordered so that the maximal left-zero
/// (respectively right-zero) subsemigroups occupy consecutive index ranges.
struct IdempotentBlocks {
  side block_side = side::left;
  std::vector<element_id> ordering;
  struct range {
    std::size_t begin, end;  // half-open into `ordering`
  };
  std::vector<range> boundaries;

  /// Block index of an idempotent, or empty for a non-idempotent.
  std::optional<std::size_t> block_of(element_id e) const;
};

/// Partitions E by the equivalence e ~ f iff ef = e and fe = f (side::left;
/// dually for side::right). Quadratic in |E|.
IdempotentBlocks zero_blocks(Semigroup const& s, side which);

}  // namespace ltsg

#endif  // LTSG_SEMIGROUP_HPP_
