#include "ltsg/semigroup.hpp"

#include <algorithm>
#include <unordered_map>

namespace ltsg {

namespace {

std::vector<element_id> mask_to_sorted(std::vector<char> const& mask) {
  std::vector<element_id> out;
  for (std::size_t x = 0; x < mask.size(); ++x) {
    if (mask[x]) {
      out.push_back(static_cast<element_id>(x));
    }
  }
  return out;
}

}  // namespace

const char* to_string(side s) { return s == side::left ? "left" : "right"; }

side side_from_string(std::string_view text) {
  if (text == "left") {
    return side::left;
  }
  if (text == "right") {
    return side::right;
  }
  throw invalid_input("unknown side: " + std::string(text));
}

std::optional<associativity_failure>
associativity_counterexample(std::size_t order,
                             std::span<element_id const> table) {
  auto at = [&](std::size_t i, std::size_t j) { return table[i * order + j]; };
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      element_id const ij = at(i, j);
      for (std::size_t m = 0; m < order; ++m) {
        if (at(ij, m) != at(i, at(j, m))) {
          return associativity_failure{static_cast<element_id>(i),
                                       static_cast<element_id>(j),
                                       static_cast<element_id>(m)};
        }
      }
    }
  }
  return std::nullopt;
}

Semigroup::Semigroup(std::size_t order, std::vector<element_id> table,
                     std::vector<std::string> names, bool validate,
                     std::vector<element_id> generator_hint)
    : order_(order),
      table_(std::move(table)),
      names_(std::move(names)),
      generator_hint_(std::move(generator_hint)) {
  if (order_ == 0) {
    throw invalid_input("semigroup order must be positive");
  }
  if (table_.size() != order_ * order_) {
    throw invalid_input("multiplication table has " +
                        std::to_string(table_.size()) + " entries, expected " +
                        std::to_string(order_ * order_));
  }
  for (std::size_t idx = 0; idx < table_.size(); ++idx) {
    if (table_[idx] >= order_) {
      throw invalid_input("table entry at row " + std::to_string(idx / order_) +
                          ", column " + std::to_string(idx % order_) +
                          " is " + std::to_string(table_[idx]) +
                          ", out of range 0.." + std::to_string(order_ - 1));
    }
  }
  if (!names_.empty() && names_.size() != order_) {
    throw invalid_input("expected " + std::to_string(order_) +
                        " element names, got " + std::to_string(names_.size()));
  }
  for (element_id g : generator_hint_) {
    if (g >= order_) {
      throw invalid_input("generator hint id out of range");
    }
  }
  if (validate) {
    if (auto bad = associativity_counterexample(order_, table_)) {
      throw invalid_input(
          "associativity fails at (" + std::to_string(bad->i) + ", " +
          std::to_string(bad->j) + ", " + std::to_string(bad->m) + "): (" +
          std::to_string(bad->i) + "*" + std::to_string(bad->j) + ")*" +
          std::to_string(bad->m) + " != " + std::to_string(bad->i) + "*(" +
          std::to_string(bad->j) + "*" + std::to_string(bad->m) + ")");
    }
  }
}

std::string Semigroup::name_of(element_id a) const {
  if (a < names_.size()) {
    return names_[a];
  }
  return std::to_string(a);
}

Semigroup opposite(Semigroup const& s) {
  std::size_t const k = s.order();
  std::vector<element_id> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      table[i * k + j] = s.product(static_cast<element_id>(j),
                                   static_cast<element_id>(i));
    }
  }
  return Semigroup(k, std::move(table), s.names(), /*validate=*/false,
                   s.generator_hint());
}

element_id multiply_word(Semigroup const& s,
                         std::span<element_id const> word) {
  if (word.empty()) {
    throw invalid_input("cannot multiply an empty word");
  }
  for (element_id x : word) {
    if (x >= s.order()) {
      throw invalid_input("word letter " + std::to_string(x) +
                          " is not an element id");
    }
  }
  element_id acc = word[0];
  for (std::size_t i = 1; i < word.size(); ++i) {
    acc = s.product(acc, word[i]);
  }
  return acc;
}

element_id multiply_word(Semigroup const& s,
                         std::initializer_list<element_id> word) {
  return multiply_word(s, std::span<element_id const>(word.begin(),
                                                      word.size()));
}

element_id power(Semigroup const& s, element_id a, std::size_t exponent) {
  if (exponent == 0) {
    throw invalid_input("power requires exponent >= 1");
  }
  element_id acc = a;
  for (std::size_t i = 1; i < exponent; ++i) {
    acc = s.product(acc, a);
  }
  return acc;
}

std::vector<element_id> idempotents(Semigroup const& s) {
  std::vector<element_id> out;
  for (element_id e = 0; e < s.order(); ++e) {
    if (s.product(e, e) == e) {
      out.push_back(e);
    }
  }
  return out;
}

PowerProfile power_profile(Semigroup const& s, element_id a) {
  if (a >= s.order()) {
    throw invalid_input("element id out of range");
  }
  PowerProfile profile;
  profile.element = a;
  // first_seen[x] = exponent t at which x first appeared as a^t, or 0.
  std::vector<std::size_t> first_seen(s.order(), 0);
  element_id current = a;
  std::size_t t = 1;
  while (first_seen[current] == 0) {
    first_seen[current] = t;
    current = s.product(current, a);
    ++t;
  }
  profile.entry = first_seen[current];
  profile.cycle_length = t - first_seen[current];
  if (profile.cycle_length == 1) {
    profile.index = profile.entry;
    if (profile.entry >= 2) {
      profile.m = profile.entry - 2;
    }
  }
  return profile;
}

ProductChain product_chain(Semigroup const& s) {
  std::size_t const k = s.order();
  ProductChain chain;

  std::vector<char> current(k, 1);  // Prod_1 = S
  chain.levels.push_back(mask_to_sorted(current));
  chain.factor_links.emplace_back();  // no links into Prod_1

  while (true) {
    std::vector<char> next(k, 0);
    std::vector<std::pair<element_id, element_id>> links(
        k, {element_id(0), element_id(0)});
    for (element_id x = 0; x < k; ++x) {
      if (!current[x]) {
        continue;
      }
      auto row = s.row(x);
      for (element_id y = 0; y < k; ++y) {
        element_id const xy = row[y];
        if (!next[xy]) {
          next[xy] = 1;
          links[xy] = {x, y};
        }
      }
    }
    chain.factor_links.push_back(std::move(links));
    if (next == current) {
      break;
    }
    chain.levels.push_back(mask_to_sorted(next));
    current = std::move(next);
  }
  chain.stable_exponent = chain.levels.size();

  // S*E*S, computed independently of the chain.
  std::vector<char> e_mask(k, 0);
  for (element_id e : idempotents(s)) {
    e_mask[e] = 1;
  }
  std::vector<char> se(k, 0);
  for (element_id x = 0; x < k; ++x) {
    for (element_id e = 0; e < k; ++e) {
      if (e_mask[e]) {
        se[s.product(x, e)] = 1;
      }
    }
  }
  std::vector<char> ses_mask(k, 0);
  for (element_id x = 0; x < k; ++x) {
    if (!se[x]) {
      continue;
    }
    for (element_id y = 0; y < k; ++y) {
      ses_mask[s.product(x, y)] = 1;
    }
  }
  chain.ses = mask_to_sorted(ses_mask);

  if (chain.ses != chain.levels.back()) {
    throw internal_error(
        "stable product set disagrees with S*E*S; the chain construction "
        "is buggy");
  }

  for (element_id x = 0; x < k; ++x) {
    if (!ses_mask[x]) {
      chain.residue.push_back(x);
    }
  }
  return chain;
}

std::vector<element_id> const&
ProductChain::level_set(std::size_t m) const {
  if (m == 0) {
    throw invalid_input("product sets start at length 1");
  }
  if (m > levels.size()) {
    return levels.back();
  }
  return levels[m - 1];
}

std::vector<element_id> witness_word(Semigroup const& s,
                                     ProductChain const& chain, element_id x,
                                     std::size_t length) {
  if (length == 0) {
    throw invalid_input("witness words have length >= 1");
  }
  auto const& target_set = chain.level_set(length);
  if (!std::binary_search(target_set.begin(), target_set.end(), x)) {
    throw invalid_input("element is not a product of the requested length");
  }
  std::vector<element_id> reversed;
  element_id current = x;
  std::size_t remaining = length;
  while (remaining > 1) {
    // For lengths beyond the stored links, Prod is stable and the last
    // link table (stable set times S) applies at every step.
    std::size_t const link_level =
        std::min(remaining, chain.factor_links.size());
    auto const& [prev, letter] = chain.factor_links[link_level - 1][current];
    reversed.push_back(letter);
    current = prev;
    --remaining;
  }
  reversed.push_back(current);
  std::reverse(reversed.begin(), reversed.end());
  return reversed;
}

std::optional<std::size_t> IdempotentBlocks::block_of(element_id e) const {
  for (std::size_t b = 0; b < boundaries.size(); ++b) {
    for (std::size_t i = boundaries[b].begin; i < boundaries[b].end; ++i) {
      if (ordering[i] == e) {
        return b;
      }
    }
  }
  return std::nullopt;
}

IdempotentBlocks zero_blocks(Semigroup const& s, side which) {
  IdempotentBlocks blocks;
  blocks.block_side = which;

  auto equivalent = [&](element_id e, element_id f) {
    if (which == side::left) {
      return s.product(e, f) == e && s.product(f, e) == f;
    }
    return s.product(e, f) == f && s.product(f, e) == e;
  };

  std::vector<std::vector<element_id>> groups;
  for (element_id e : idempotents(s)) {
    bool placed = false;
    for (auto& group : groups) {
      // Transitivity makes comparing against the representative enough.
      if (equivalent(e, group.front())) {
        group.push_back(e);
        placed = true;
        break;
      }
    }
    if (!placed) {
      groups.push_back({e});
    }
  }

  for (auto const& group : groups) {
    std::size_t const begin = blocks.ordering.size();
    blocks.ordering.insert(blocks.ordering.end(), group.begin(), group.end());
    blocks.boundaries.push_back({begin, blocks.ordering.size()});
  }
  return blocks;
}

}  // namespace ltsg
