#include "ltsg/oracle.hpp"

#include <algorithm>
#include <map>

namespace ltsg {

const char* to_string(testability_sense s) {
  return s == testability_sense::B ? "B" : "T";
}

testability_sense sense_from_string(std::string_view text) {
  if (text == "B" || text == "b") {
    return testability_sense::B;
  }
  if (text == "T" || text == "t") {
    return testability_sense::T;
  }
  throw invalid_input("unknown sense: " + std::string(text) +
                      " (expected B or T)");
}

const char* to_string(IdentityFamily f) {
  switch (f) {
    case IdentityFamily::alpha: return "alpha";
    case IdentityFamily::gamma: return "gamma";
    case IdentityFamily::beta: return "beta";
    case IdentityFamily::exchange: return "exchange";
    case IdentityFamily::b1_idempotent: return "b1-idempotent";
    case IdentityFamily::b1_commutative: return "b1-commutative";
  }
  throw internal_error("unhandled identity family");
}

namespace {

void append_repeated(std::vector<element_id>& word,
                     std::span<element_id const> block, std::size_t times) {
  for (std::size_t i = 0; i < times; ++i) {
    word.insert(word.end(), block.begin(), block.end());
  }
}

}  // namespace

std::pair<std::vector<element_id>, std::vector<element_id>>
IdentityInstance::words() const {
  std::vector<element_id> lhs_word, rhs_word;
  switch (family) {
    case IdentityFamily::alpha: {
      std::span<element_id const> xs(substitution.data(), r);
      std::size_t const p = (n - 1) % r;
      std::size_t const m = (n - p - 1) / r;
      append_repeated(lhs_word, xs, m + 1);
      lhs_word.insert(lhs_word.end(), xs.begin(), xs.begin() + p);
      append_repeated(rhs_word, xs, m + 2);
      rhs_word.insert(rhs_word.end(), xs.begin(), xs.begin() + p);
      break;
    }
    case IdentityFamily::gamma:
    case IdentityFamily::beta: {
      bool const with_context = family == IdentityFamily::beta;
      std::span<element_id const> xs(substitution.data(), n - 1);
      element_id const y = substitution[n - 1];
      element_id const z = substitution[n];
      auto build = [&](element_id first, element_id second) {
        std::vector<element_id> w;
        if (with_context) {
          w.push_back(substitution[n + 1]);  // t1
        }
        w.insert(w.end(), xs.begin(), xs.end());
        w.push_back(first);
        w.insert(w.end(), xs.begin(), xs.end());
        w.push_back(second);
        w.insert(w.end(), xs.begin(), xs.end());
        if (with_context) {
          w.push_back(substitution[n + 2]);  // t2
        }
        return w;
      };
      lhs_word = build(y, z);
      rhs_word = build(z, y);
      break;
    }
    case IdentityFamily::exchange: {
      element_id const x = substitution.at(0);
      element_id const y = substitution.at(1);
      element_id const z = substitution.at(2);
      lhs_word = {x, y, x, z, x};
      rhs_word = {x, z, x, y, x};
      break;
    }
    case IdentityFamily::b1_idempotent: {
      element_id const x = substitution.at(0);
      lhs_word = {x};
      rhs_word = {x, x};
      break;
    }
    case IdentityFamily::b1_commutative: {
      element_id const x = substitution.at(0);
      element_id const y = substitution.at(1);
      lhs_word = {x, y};
      rhs_word = {y, x};
      break;
    }
  }
  return {lhs_word, rhs_word};
}

IdentityCheck holds_alpha(Semigroup const& s, ProductChain const& chain,
                          std::size_t n, std::size_t r) {
  if (n < 1) {
    throw invalid_input("level must be >= 1");
  }
  if (r < 1 || r > n) {
    throw invalid_input("alpha requires 1 <= r <= n");
  }
  std::size_t const p = (n - 1) % r;
  std::size_t const m = (n - p - 1) / r;

  auto make_violation = [&](element_id head, std::size_t head_len,
                            std::optional<element_id> tail,
                            std::size_t tail_len, element_id lhs,
                            element_id rhs) {
    IdentityInstance inst;
    inst.family = IdentityFamily::alpha;
    inst.n = n;
    inst.r = r;
    inst.substitution = witness_word(s, chain, head, head_len);
    if (tail) {
      auto rest = witness_word(s, chain, *tail, tail_len);
      inst.substitution.insert(inst.substitution.end(), rest.begin(),
                               rest.end());
    }
    inst.lhs = lhs;
    inst.rhs = rhs;
    return inst;
  };

  if (p == 0) {
    for (element_id a : chain.level_set(r)) {
      element_id const lhs = power(s, a, m + 1);
      element_id const rhs = s.product(lhs, a);
      if (lhs != rhs) {
        IdentityCheck out;
        out.holds = false;
        out.violation = make_violation(a, r, std::nullopt, 0, lhs, rhs);
        return out;
      }
    }
    return {};
  }

  for (element_id b : chain.level_set(p)) {
    for (element_id c : chain.level_set(r - p)) {
      element_id const a = s.product(b, c);
      element_id const am1 = power(s, a, m + 1);
      element_id const lhs = s.product(am1, b);
      element_id const rhs = s.product(s.product(am1, a), b);
      if (lhs != rhs) {
        IdentityCheck out;
        out.holds = false;
        out.violation = make_violation(b, p, c, r - p, lhs, rhs);
        return out;
      }
    }
  }
  return {};
}

IdentityCheck holds_alpha(Semigroup const& s, std::size_t n, std::size_t r) {
  return holds_alpha(s, product_chain(s), n, r);
}

namespace {

IdentityCheck exchange_over(Semigroup const& s, ProductChain const& chain,
                            std::size_t n, bool with_context) {
  if (n < 2) {
    throw invalid_input("level must be >= 2");
  }
  std::size_t const k = s.order();
  for (element_id a : chain.level_set(n - 1)) {
    // aya for each y, reused across the z loop.
    std::vector<element_id> aya(k);
    for (element_id y = 0; y < k; ++y) {
      aya[y] = s.product(s.product(a, y), a);
    }
    for (element_id y = 0; y < k; ++y) {
      for (element_id z = y + 1; z < k; ++z) {
        element_id const u = s.product(s.product(aya[y], z), a);
        element_id const v = s.product(s.product(aya[z], y), a);
        if (u == v) {
          continue;
        }
        if (!with_context) {
          IdentityInstance inst;
          inst.family = IdentityFamily::gamma;
          inst.n = n;
          inst.substitution = witness_word(s, chain, a, n - 1);
          inst.substitution.push_back(y);
          inst.substitution.push_back(z);
          inst.lhs = u;
          inst.rhs = v;
          return {false, inst};
        }
        for (element_id t1 = 0; t1 < k; ++t1) {
          element_id const t1u = s.product(t1, u);
          element_id const t1v = s.product(t1, v);
          for (element_id t2 = 0; t2 < k; ++t2) {
            element_id const lhs = s.product(t1u, t2);
            element_id const rhs = s.product(t1v, t2);
            if (lhs != rhs) {
              IdentityInstance inst;
              inst.family = IdentityFamily::beta;
              inst.n = n;
              inst.substitution = witness_word(s, chain, a, n - 1);
              inst.substitution.push_back(y);
              inst.substitution.push_back(z);
              inst.substitution.push_back(t1);
              inst.substitution.push_back(t2);
              inst.lhs = lhs;
              inst.rhs = rhs;
              return {false, inst};
            }
          }
        }
      }
    }
  }
  return {};
}

}  // namespace

IdentityCheck holds_gamma(Semigroup const& s, ProductChain const& chain,
                          std::size_t n) {
  return exchange_over(s, chain, n, /*with_context=*/false);
}

IdentityCheck holds_gamma(Semigroup const& s, std::size_t n) {
  return holds_gamma(s, product_chain(s), n);
}

IdentityCheck holds_beta(Semigroup const& s, ProductChain const& chain,
                         std::size_t n) {
  return exchange_over(s, chain, n, /*with_context=*/true);
}

IdentityCheck holds_beta(Semigroup const& s, std::size_t n) {
  return holds_beta(s, product_chain(s), n);
}

IdentityCheck exchange_violation(Semigroup const& s,
                                 std::span<element_id const> elems) {
  for (element_id x : elems) {
    for (element_id y : elems) {
      element_id const xyx = s.product(s.product(x, y), x);
      for (element_id z : elems) {
        element_id const lhs = s.product(s.product(xyx, z), x);
        element_id const xzx = s.product(s.product(x, z), x);
        element_id const rhs = s.product(s.product(xzx, y), x);
        if (lhs != rhs) {
          IdentityInstance inst;
          inst.family = IdentityFamily::exchange;
          inst.substitution = {x, y, z};
          inst.lhs = lhs;
          inst.rhs = rhs;
          return {false, inst};
        }
      }
    }
  }
  return {};
}

bool in_variety_B(Semigroup const& s, ProductChain const& chain,
                  std::size_t n) {
  if (n < 1) {
    throw invalid_input("level must be >= 1");
  }
  if (n == 1) {
    for (element_id x = 0; x < s.order(); ++x) {
      if (s.product(x, x) != x) {
        return false;
      }
    }
    for (element_id x = 0; x < s.order(); ++x) {
      for (element_id y = x + 1; y < s.order(); ++y) {
        if (s.product(x, y) != s.product(y, x)) {
          return false;
        }
      }
    }
    return true;
  }
  for (std::size_t r = 1; r <= n; ++r) {
    if (!holds_alpha(s, chain, n, r).holds) {
      return false;
    }
  }
  return holds_gamma(s, chain, n).holds;
}

bool in_variety_B(Semigroup const& s, std::size_t n) {
  return in_variety_B(s, product_chain(s), n);
}

bool in_variety_T(Semigroup const& s, ProductChain const& chain,
                  std::size_t n) {
  if (n < 2) {
    throw invalid_input("the T sense starts at level 2");
  }
  for (std::size_t r = 1; r <= n; ++r) {
    if (!holds_alpha(s, chain, n, r).holds) {
      return false;
    }
  }
  return holds_beta(s, chain, n).holds;
}

bool in_variety_T(Semigroup const& s, std::size_t n) {
  return in_variety_T(s, product_chain(s), n);
}

std::optional<std::size_t> min_level(Semigroup const& s,
                                     testability_sense sense,
                                     std::size_t cap) {
  std::size_t const start = sense == testability_sense::B ? 1 : 2;
  if (cap < start) {
    throw invalid_input("cap below the smallest level for this sense");
  }
  ProductChain const chain = product_chain(s);
  for (std::size_t n = start; n <= cap; ++n) {
    bool const member = sense == testability_sense::B
                            ? in_variety_B(s, chain, n)
                            : in_variety_T(s, chain, n);
    if (member) {
      return n;
    }
  }
  return std::nullopt;
}

std::size_t default_level_cap(Semigroup const& s) {
  return 2 * s.order() + 2;
}

WordSignature word_signature(std::string_view word, std::size_t n,
                             testability_sense sense) {
  std::size_t const edge = sense == testability_sense::B ? n - 1 : n;
  WordSignature sig;
  sig.prefix = word.substr(0, std::min(edge, word.size()));
  sig.suffix =
      word.substr(word.size() - std::min(edge, word.size()));
  if (word.size() >= n) {
    for (std::size_t i = 0; i + n <= word.size(); ++i) {
      sig.factors.insert(std::string(word.substr(i, n)));
    }
  }
  return sig;
}

WordProbeResult word_probe(
    Semigroup const& s,
    std::vector<std::pair<std::string, element_id>> const& generator_map,
    std::size_t n, std::size_t max_len, testability_sense sense) {
  if (n < 1) {
    throw invalid_input("level must be >= 1");
  }
  if (generator_map.empty()) {
    throw invalid_input("the generator map is empty");
  }
  for (auto const& [letter, image] : generator_map) {
    if (image >= s.order()) {
      throw invalid_input("generator image out of range for letter " + letter);
    }
  }
  {
    // Keep the enumeration finite in practice: ~16M words at most.
    double words = 0;
    double pow = 1;
    for (std::size_t len = 1; len <= max_len; ++len) {
      pow *= static_cast<double>(generator_map.size());
      words += pow;
    }
    if (generator_map.size() > 64 || words > double(1 << 24)) {
      throw invalid_input("the probe is bounded: shrink max_len or the "
                          "alphabet");
    }
  }

  // The images must generate the whole semigroup.
  {
    std::vector<char> reached(s.order(), 0);
    std::vector<element_id> queue;
    for (auto const& [letter, image] : generator_map) {
      if (!reached[image]) {
        reached[image] = 1;
        queue.push_back(image);
      }
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (auto const& [letter, image] : generator_map) {
        element_id const next = s.product(queue[qi], image);
        if (!reached[next]) {
          reached[next] = 1;
          queue.push_back(next);
        }
      }
    }
    if (queue.size() != s.order()) {
      throw invalid_input(
          "the generator images do not generate the semigroup");
    }
  }

  std::size_t const alphabet = generator_map.size();
  WordProbeResult result;
  // Per signature: the first word (letters as chars) and its image.
  std::map<WordSignature, std::pair<std::string, element_id>> buckets;

  std::string word;
  for (std::size_t length = 1; length <= max_len; ++length) {
    word.assign(length, char(0));
    while (true) {
      element_id image = generator_map[word[0]].second;
      for (std::size_t i = 1; i < length; ++i) {
        image = s.product(image, generator_map[word[i]].second);
      }
      ++result.words_checked;

      WordSignature sig = word_signature(word, n, sense);
      auto [it, inserted] = buckets.try_emplace(std::move(sig), word, image);
      if (!inserted && it->second.second != image) {
        WordViolation violation;
        for (char c : it->second.first) {
          violation.u.push_back(static_cast<std::size_t>(c));
        }
        for (char c : word) {
          violation.v.push_back(static_cast<std::size_t>(c));
        }
        violation.u_image = it->second.second;
        violation.v_image = image;
        result.ok = false;
        result.violation = std::move(violation);
        return result;
      }

      // Next word of this length, in lexicographic letter order.
      std::size_t pos = length;
      while (pos > 0 && word[pos - 1] == char(alphabet - 1)) {
        word[--pos] = char(0);
      }
      if (pos == 0) {
        break;
      }
      ++word[pos - 1];
    }
  }
  return result;
}

LocalIdempotencyCheck is_locally_idempotent(Semigroup const& s) {
  for (element_id e : idempotents(s)) {
    for (element_id x = 0; x < s.order(); ++x) {
      element_id const exe = s.product(s.product(e, x), e);
      if (s.product(exe, exe) != exe) {
        return {false, std::make_pair(e, x)};
      }
    }
  }
  return {};
}

}  // namespace ltsg
