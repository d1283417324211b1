#include "ltsg/level.hpp"

#include <algorithm>

namespace ltsg {

std::size_t GeneratorLevels::level_of(element_id g) const {
  if (g >= level_by_element.size() || level_by_element[g] == 0) {
    throw invalid_input("element " + std::to_string(g) +
                        " is not in the residue");
  }
  return level_by_element[g];
}

GeneratorLevels generator_levels(Semigroup const& s,
                                 ProductChain const& chain) {
  auto const& residue = chain.residue;
  if (residue.empty()) {
    throw invalid_input("the residue G is empty; levels are undefined");
  }
  std::size_t const k = s.order();

  std::vector<char> in_g(k, 0);
  for (element_id g : residue) {
    in_g[g] = 1;
  }

  // G^2 restricted to G; a product with a factor in the ideal never lands
  // in G, so both factors range over G.
  std::vector<char> in_g2(k, 0);
  for (element_id b : residue) {
    for (element_id c : residue) {
      element_id const bc = s.product(b, c);
      if (in_g[bc]) {
        in_g2[bc] = 1;
      }
    }
  }

  GeneratorLevels out;
  out.level_by_element.assign(k, 0);
  std::vector<char> in_g1(k, 0);
  for (element_id g : residue) {
    if (!in_g2[g]) {
      out.g1.push_back(g);
      in_g1[g] = 1;
    }
  }
  if (out.g1.empty()) {
    throw internal_error("residue without minimal generators");
  }

  std::size_t assigned = 0;
  std::vector<element_id> tier = out.g1;
  std::size_t level = 1;
  while (true) {
    for (element_id g : tier) {
      if (out.level_by_element[g] != 0) {
        throw internal_error("generator tiers overlap");
      }
      out.level_by_element[g] = level;
    }
    assigned += tier.size();
    out.tiers.push_back(tier);
    if (assigned == residue.size()) {
      break;
    }

    std::vector<char> candidate(k, 0);
    for (element_id b : out.g1) {
      for (element_id g : tier) {
        element_id const bg = s.product(b, g);
        if (in_g[bg]) {
          candidate[bg] = 1;
        }
      }
    }
    for (element_id b : residue) {
      if (in_g1[b]) {
        continue;
      }
      for (element_id g : tier) {
        candidate[s.product(b, g)] = 0;
      }
    }
    std::vector<element_id> next;
    for (element_id g : residue) {
      if (candidate[g]) {
        next.push_back(g);
      }
    }
    if (next.empty()) {
      throw internal_error("generator tier recurrence stalled before "
                           "exhausting the residue");
    }
    tier = std::move(next);
    ++level;
  }
  return out;
}

AlphaBound alpha_bound(Semigroup const& s, GeneratorLevels const& levels) {
  AlphaBound out;
  std::size_t const k = s.order();

  std::vector<element_id> residue;
  for (element_id g = 0; g < k; ++g) {
    if (g < levels.level_by_element.size() && levels.level_by_element[g] != 0) {
      residue.push_back(g);
    }
  }
  if (residue.empty()) {
    throw invalid_input("the residue G is empty; no bound to compute");
  }

  // m(a) for every element whose power sequence moves at all; empty for
  // idempotents, which admit no failing power pair.
  std::vector<std::optional<std::size_t>> m_of(k);
  for (element_id a = 0; a < k; ++a) {
    PowerProfile const profile = power_profile(s, a);
    if (!profile.aperiodic()) {
      throw invalid_input("element " + std::to_string(a) +
                          " has no stabilising power sequence");
    }
    m_of[a] = profile.m;
  }

  auto record = [&](AlphaContribution c) {
    out.value = std::max(out.value, c.value);
    out.contributions.push_back(std::move(c));
  };

  for (element_id a : residue) {
    record({a, std::nullopt, *m_of[a] * levels.level_of(a) + 1});
  }

  // A failing power pair a^{m+1} b != a^{m+2} b forces identity failures
  // up to (|b|+|c|)m + |b| + 1. The left factor b must have a finite
  // length, so b ranges over G; the product a = b*c may land anywhere,
  // including the ideal, so c ranges over all of S.
  for (element_id b : residue) {
    std::size_t const len_b = levels.level_of(b);
    for (element_id c = 0; c < k; ++c) {
      element_id const a = s.product(b, c);
      if (!m_of[a]) {
        continue;
      }
      // Largest m <= m(a) with a^{m+1} b != a^{m+2} b.
      std::optional<std::size_t> failing;
      element_id left = s.product(a, b);  // a^{m+1} b at m = 0
      element_id power_of_a = a;
      for (std::size_t m = 0; m <= *m_of[a]; ++m) {
        power_of_a = s.product(power_of_a, a);  // a^{m+2}
        element_id const right = s.product(power_of_a, b);
        if (left != right) {
          failing = m;
        }
        left = right;
      }
      if (!failing) {
        continue;
      }
      bool const c_in_residue = c < levels.level_by_element.size() &&
                                levels.level_by_element[c] != 0;
      if (c_in_residue) {
        std::size_t const value =
            (len_b + levels.level_of(c)) * *failing + len_b + 1;
        record({a, std::make_pair(b, c), value});
      } else {
        // A factor inside the ideal has unbounded word lengths; a failing
        // pair at m >= 1 would make the level infinite.
        if (*failing > 0) {
          throw internal_error(
              "a power pair over the ideal keeps failing above m = 0; "
              "the input cannot be locally testable");
        }
        record({a, std::make_pair(b, c), len_b + 1});
      }
    }
  }
  return out;
}

DivisorBound divisor_bound(Semigroup const& s, GeneratorLevels const& levels,
                           IdempotentBlocks const& blocks) {
  DivisorBound out;
  std::size_t const k = s.order();

  std::vector<std::size_t> block_of(k, static_cast<std::size_t>(-1));
  for (std::size_t b = 0; b < blocks.boundaries.size(); ++b) {
    for (std::size_t i = blocks.boundaries[b].begin;
         i < blocks.boundaries[b].end; ++i) {
      block_of[blocks.ordering[i]] = b;
    }
  }

  for (element_id g = 0; g < k; ++g) {
    if (g >= levels.level_by_element.size() ||
        levels.level_by_element[g] == 0) {
      continue;
    }
    // Idempotents divisible by g, in block order; a repeat of a block
    // means two distinct idempotents of that block share the divisor.
    std::vector<char> divisible(k, 0);
    if (blocks.block_side == side::left) {
      for (element_id x : s.row(g)) {
        divisible[x] = 1;
      }
    } else {
      for (element_id x = 0; x < k; ++x) {
        divisible[s.product(x, g)] = 1;
      }
    }
    bool have_previous = false;
    std::size_t previous_block = 0;
    element_id previous = 0;
    for (std::size_t i = 0; i < blocks.ordering.size(); ++i) {
      element_id const e = blocks.ordering[i];
      if (!divisible[e]) {
        continue;
      }
      std::size_t const b = block_of[e];
      if (have_previous && b == previous_block) {
        std::size_t const value = levels.level_of(g) + 1;
        out.records.push_back({blocks.block_side, g, previous, e, value});
        out.value = std::max(out.value, value);
        break;
      }
      have_previous = true;
      previous_block = b;
      previous = e;
    }
  }
  return out;
}

LevelBreakdown level(Semigroup const& s) {
  return level(s, is_locally_testable(s));
}

LevelBreakdown level(Semigroup const& s, Verdict const& verdict) {
  if (!verdict.locally_testable) {
    throw not_locally_testable(verdict);
  }

  LevelBreakdown breakdown;
  ProductChain const chain = product_chain(s);

  if (chain.residue.empty()) {
    bool b1 = true;
    for (element_id x = 0; x < s.order() && b1; ++x) {
      if (s.product(x, x) != x) {
        b1 = false;
      }
    }
    for (element_id x = 0; x < s.order() && b1; ++x) {
      for (element_id y = x + 1; y < s.order(); ++y) {
        if (s.product(x, y) != s.product(y, x)) {
          b1 = false;
          break;
        }
      }
    }
    breakdown.level = b1 ? 1 : 2;
    return breakdown;
  }

  GeneratorLevels const levels = generator_levels(s, chain);

  for (element_id a : chain.residue) {
    PowerProfile const profile = power_profile(s, a);
    breakdown.elements.push_back(
        {a, profile.m.value(), levels.level_of(a)});
  }

  AlphaBound alpha = alpha_bound(s, levels);
  breakdown.n_bound = alpha.value;
  breakdown.alpha_details = std::move(alpha.contributions);

  DivisorBound left = divisor_bound(s, levels, zero_blocks(s, side::left));
  breakdown.l_bound = left.value;
  DivisorBound right = divisor_bound(s, levels, zero_blocks(s, side::right));
  breakdown.r_bound = right.value;
  breakdown.divisor_details = std::move(left.records);
  breakdown.divisor_details.insert(breakdown.divisor_details.end(),
                                   right.records.begin(),
                                   right.records.end());

  breakdown.level =
      std::max({breakdown.n_bound, breakdown.l_bound, breakdown.r_bound}) + 1;
  return breakdown;
}

}  // namespace ltsg
