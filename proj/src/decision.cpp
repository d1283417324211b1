#include "ltsg/decision.hpp"

#include <algorithm>

namespace ltsg {

std::pair<std::vector<element_id>, std::vector<element_id>>
IdentityViolation::words() const {
  if (identity == "x^2=x^3") {
    element_id const x = substitution.at(0);
    return {{x, x}, {x, x, x}};
  }
  if (identity == "xyx=xyxyx") {
    element_id const x = substitution.at(0);
    element_id const y = substitution.at(1);
    return {{x, y, x}, {x, y, x, y, x}};
  }
  if (identity == "x=x^2") {
    element_id const x = substitution.at(0);
    return {{x}, {x, x}};
  }
  if (identity == "xy=yx") {
    element_id const x = substitution.at(0);
    element_id const y = substitution.at(1);
    return {{x, y}, {y, x}};
  }
  throw internal_error("unknown identity name: " + identity);
}

const char* to_string(DecisionMethod m) {
  return m == DecisionMethod::identities ? "identities" : "semilattice";
}

DecisionMethod decision_method_from_string(std::string_view text) {
  if (text == "identities") {
    return DecisionMethod::identities;
  }
  if (text == "semilattice") {
    return DecisionMethod::semilattice;
  }
  throw invalid_input("unknown decision method: " + std::string(text));
}

std::string describe(Semigroup const& s, Witness const& w) {
  return std::visit(
      [&](auto const& witness) -> std::string {
        using T = std::decay_t<decltype(witness)>;
        if constexpr (std::is_same_v<T, IdentityViolation>) {
          std::string subs;
          for (element_id x : witness.substitution) {
            subs += subs.empty() ? "" : ", ";
            subs += s.name_of(x);
          }
          return "identity " + witness.identity + " fails under [" + subs +
                 "]: " + s.name_of(witness.lhs) + " != " +
                 s.name_of(witness.rhs);
        } else if constexpr (std::is_same_v<T, CommonUnitWitness>) {
          return std::string("idempotents ") + s.name_of(witness.e) + " and " +
                 s.name_of(witness.i) + " lie in one " +
                 to_string(witness.block_side) + "-zero block and share the unit " +
                 s.name_of(witness.f);
        } else if constexpr (std::is_same_v<T, NontrivialSubgroup>) {
          return "element " + s.name_of(witness.element) +
                 " generates a cyclic subgroup of order " +
                 std::to_string(witness.cycle_length);
        } else {
          if (witness.x == witness.y) {
            return "e*S*e for e = " + s.name_of(witness.e) +
                   " contains the non-idempotent " + s.name_of(witness.x);
          }
          return "e*S*e for e = " + s.name_of(witness.e) +
                 " contains the non-commuting pair " + s.name_of(witness.x) +
                 ", " + s.name_of(witness.y);
        }
      },
      w);
}

std::optional<IdentityViolation>
check_ses_identities(Semigroup const& s, std::span<element_id const> ses) {
  for (element_id x : ses) {
    element_id const xx = s.product(x, x);
    element_id const xxx = s.product(xx, x);
    if (xx != xxx) {
      return IdentityViolation{"x^2=x^3", {x}, xx, xxx};
    }
  }
  for (element_id x : ses) {
    for (element_id y : ses) {
      element_id const xy = s.product(x, y);
      element_id const xyx = s.product(xy, x);
      element_id const xyxyx = s.product(s.product(xyx, y), x);
      if (xyx != xyxyx) {
        return IdentityViolation{"xyx=xyxyx", {x, y}, xyx, xyxyx};
      }
    }
  }
  return std::nullopt;
}

std::optional<CommonUnitWitness>
common_unit_violation(Semigroup const& s, IdempotentBlocks const& blocks) {
  auto const& order = blocks.ordering;
  std::vector<std::size_t> block_index(order.size());
  for (std::size_t b = 0; b < blocks.boundaries.size(); ++b) {
    for (std::size_t i = blocks.boundaries[b].begin;
         i < blocks.boundaries[b].end; ++i) {
      block_index[i] = b;
    }
  }

  std::vector<element_id> units = idempotents(s);
  for (element_id f : units) {
    bool have_previous = false;
    std::size_t previous_block = 0;
    element_id previous = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      element_id const e = order[i];
      if (e == f) {
        continue;  // a unit of itself never pairs with itself
      }
      if (s.product(f, e) != e || s.product(e, f) != e) {
        continue;
      }
      if (have_previous && block_index[i] == previous_block) {
        return CommonUnitWitness{previous, e, f, blocks.block_side};
      }
      have_previous = true;
      previous_block = block_index[i];
      previous = e;
    }
  }
  return std::nullopt;
}

namespace {

std::vector<element_id> ses_set(Semigroup const& s) {
  std::size_t const k = s.order();
  std::vector<char> e_mask(k, 0);
  for (element_id e : idempotents(s)) {
    e_mask[e] = 1;
  }
  std::vector<char> se(k, 0);
  for (element_id x = 0; x < k; ++x) {
    auto row = s.row(x);
    for (element_id e = 0; e < k; ++e) {
      if (e_mask[e]) {
        se[row[e]] = 1;
      }
    }
  }
  std::vector<char> ses(k, 0);
  for (element_id x = 0; x < k; ++x) {
    if (!se[x]) {
      continue;
    }
    auto row = s.row(x);
    for (element_id y = 0; y < k; ++y) {
      ses[row[y]] = 1;
    }
  }
  std::vector<element_id> out;
  for (element_id x = 0; x < k; ++x) {
    if (ses[x]) {
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace

Verdict is_locally_testable(Semigroup const& s) {
  Verdict verdict;
  verdict.method = DecisionMethod::identities;

  for (element_id a = 0; a < s.order(); ++a) {
    PowerProfile const profile = power_profile(s, a);
    if (!profile.aperiodic()) {
      verdict.locally_testable = false;
      verdict.witness = NontrivialSubgroup{a, profile.cycle_length};
      return verdict;
    }
  }

  if (auto violation = check_ses_identities(s, ses_set(s))) {
    verdict.locally_testable = false;
    verdict.witness = std::move(*violation);
    return verdict;
  }

  for (side which : {side::left, side::right}) {
    if (auto witness = common_unit_violation(s, zero_blocks(s, which))) {
      verdict.locally_testable = false;
      verdict.witness = *witness;
      return verdict;
    }
  }

  verdict.locally_testable = true;
  return verdict;
}

Verdict is_locally_testable_semilattice(Semigroup const& s) {
  Verdict verdict;
  verdict.method = DecisionMethod::semilattice;

  for (element_id e : idempotents(s)) {
    std::vector<char> in_ese(s.order(), 0);
    for (element_id x = 0; x < s.order(); ++x) {
      in_ese[s.product(s.product(e, x), e)] = 1;
    }
    std::vector<element_id> ese;
    for (element_id x = 0; x < s.order(); ++x) {
      if (in_ese[x]) {
        ese.push_back(x);
      }
    }
    for (element_id x : ese) {
      if (s.product(x, x) != x) {
        verdict.locally_testable = false;
        verdict.witness = SemilatticeFailure{e, x, x};
        return verdict;
      }
    }
    for (std::size_t i = 0; i < ese.size(); ++i) {
      for (std::size_t j = i + 1; j < ese.size(); ++j) {
        if (s.product(ese[i], ese[j]) != s.product(ese[j], ese[i])) {
          verdict.locally_testable = false;
          verdict.witness = SemilatticeFailure{e, ese[i], ese[j]};
          return verdict;
        }
      }
    }
  }

  verdict.locally_testable = true;
  return verdict;
}

}  // namespace ltsg
