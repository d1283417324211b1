#include "ltsg/catalog.hpp"

#include <algorithm>
#include <map>

namespace ltsg {

namespace {

Semigroup from_rule(std::size_t k,
                    std::function<element_id(std::size_t, std::size_t)> rule,
                    std::vector<std::string> names = {}) {
  std::vector<element_id> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      table[i * k + j] = rule(i, j);
    }
  }
  return Semigroup(k, std::move(table), std::move(names),
                   /*validate=*/false);
}

CatalogEntry make_a2() {
  // <a, b | aba=a, bab=b, aa=a, bb=0> on {a, b, ab, ba, 0}.
  std::vector<element_id> table = {
      0, 2, 2, 0, 4,  //
      3, 4, 1, 4, 4,  //
      0, 4, 2, 4, 4,  //
      3, 1, 1, 3, 4,  //
      4, 4, 4, 4, 4,  //
  };
  Semigroup s(5, std::move(table), {"a", "b", "ab", "ba", "0"},
              /*validate=*/false, {0, 1});
  return {"a2", std::move(s), true, 2};
}

CatalogEntry make_ul() {
  // Unit u over two left zeroes e, i.
  std::vector<element_id> table = {
      0, 1, 2,  //
      1, 1, 1,  //
      2, 2, 2,  //
  };
  Semigroup s(3, std::move(table), {"u", "e", "i"}, /*validate=*/false);
  return {"ul", std::move(s), false, std::nullopt};
}

CatalogEntry make_ur() {
  std::vector<element_id> table = {
      0, 1, 2,  //
      1, 1, 2,  //
      2, 1, 2,  //
  };
  Semigroup s(3, std::move(table), {"u", "e", "i"}, /*validate=*/false);
  return {"ur", std::move(s), false, std::nullopt};
}

std::size_t required_size(std::optional<std::size_t> size,
                          std::size_t fallback) {
  std::size_t const k = size.value_or(fallback);
  if (k < 1) {
    throw invalid_input("size must be >= 1");
  }
  return k;
}

}  // namespace

CatalogEntry catalog(std::string const& key,
                     std::optional<std::size_t> size) {
  if (key == "a2") {
    return make_a2();
  }
  if (key == "trivial") {
    return {"trivial", from_rule(1, [](auto, auto) { return 0; }), true, 1};
  }
  if (key == "ul") {
    return make_ul();
  }
  if (key == "ur") {
    return make_ur();
  }
  if (key == "leftzero" || key == "rightzero") {
    bool const left = key == "leftzero";
    std::size_t const k = required_size(size, 2);
    auto rule = [left](std::size_t i, std::size_t j) {
      return static_cast<element_id>(left ? i : j);
    };
    return {key + "(" + std::to_string(k) + ")", from_rule(k, rule), true,
            k >= 2 ? 2u : 1u};
  }
  if (key == "null") {
    std::size_t const k = required_size(size, 2);
    if (k < 2) {
      throw invalid_input("null needs size >= 2");
    }
    // Zero element last; every product collapses to it.
    auto rule = [k](std::size_t, std::size_t) {
      return static_cast<element_id>(k - 1);
    };
    std::vector<std::string> names;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      names.push_back("a" + std::to_string(i + 1));
    }
    names.push_back("0");
    return {"null(" + std::to_string(k) + ")", from_rule(k, rule, names),
            true, 2};
  }
  if (key == "chain-semilattice") {
    std::size_t const k = required_size(size, 3);
    auto rule = [](std::size_t i, std::size_t j) {
      return static_cast<element_id>(std::min(i, j));
    };
    return {"chain-semilattice(" + std::to_string(k) + ")",
            from_rule(k, rule), true, 1};
  }
  if (key == "cyclic") {
    std::size_t const k = required_size(size, 2);
    auto rule = [k](std::size_t i, std::size_t j) {
      return static_cast<element_id>((i + j) % k);
    };
    return {"cyclic(" + std::to_string(k) + ")", from_rule(k, rule),
            k >= 2 ? std::optional<bool>(false) : std::optional<bool>(true),
            k >= 2 ? std::nullopt : std::optional<std::size_t>(1)};
  }
  if (key == "monogenic") {
    // <a | a^{N+1} = a^N> on a, a^2, ..., a^N.
    std::size_t const n = required_size(size, 3);
    auto rule = [n](std::size_t i, std::size_t j) {
      return static_cast<element_id>(std::min(i + j + 1, n - 1));
    };
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) {
      names.push_back(i == 1 ? "a" : "a^" + std::to_string(i));
    }
    return {"monogenic(" + std::to_string(n) + ")", from_rule(n, rule, names),
            true, std::max<std::size_t>(n, 1)};
  }
  throw invalid_input("unknown catalog key: " + key);
}

std::vector<std::string> catalog_keys() {
  return {"a2",   "trivial", "ul",     "ur",
          "leftzero", "rightzero", "null", "chain-semilattice",
          "cyclic", "monogenic"};
}

std::vector<CatalogEntry> catalog_corpus() {
  std::vector<CatalogEntry> corpus;
  corpus.push_back(catalog("a2"));
  corpus.push_back(catalog("trivial"));
  corpus.push_back(catalog("ul"));
  corpus.push_back(catalog("ur"));
  for (std::size_t k = 2; k <= 5; ++k) {
    corpus.push_back(catalog("leftzero", k));
    corpus.push_back(catalog("rightzero", k));
    corpus.push_back(catalog("null", k));
    corpus.push_back(catalog("chain-semilattice", k));
    corpus.push_back(catalog("cyclic", k));
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    corpus.push_back(catalog("monogenic", n));
  }
  return corpus;
}

void for_each_semigroup(std::size_t order,
                        std::function<void(Semigroup const&)> const& fn) {
  if (order < 1) {
    throw invalid_input("order must be >= 1");
  }
  if (order > 3) {
    throw invalid_input(
        "exhaustive enumeration is limited to order <= 3; the candidate "
        "space at order 4 is 4^16");
  }
  std::size_t const cells = order * order;
  std::vector<element_id> table(cells, 0);
  while (true) {
    if (!associativity_counterexample(order, table)) {
      fn(Semigroup(order, table, {}, /*validate=*/false));
    }
    // Next table in lexicographic order (last cell varies fastest).
    std::size_t pos = cells;
    while (pos > 0 && table[pos - 1] == order - 1) {
      table[--pos] = 0;
    }
    if (pos == 0) {
      return;
    }
    ++table[pos - 1];
  }
}

std::vector<Semigroup> enumerate_semigroups(std::size_t order) {
  std::vector<Semigroup> out;
  for_each_semigroup(order, [&](Semigroup const& s) { out.push_back(s); });
  return out;
}

TransformationClosure transformation_subsemigroup(
    std::size_t degree, std::vector<std::vector<std::size_t>> const& generators,
    std::size_t cap, std::vector<std::string> letters) {
  if (degree == 0) {
    throw invalid_input("degree must be >= 1");
  }
  if (generators.empty()) {
    throw invalid_input("at least one generator map is required");
  }
  if (!letters.empty() && letters.size() != generators.size()) {
    throw invalid_input("expected one letter per generator");
  }
  for (auto const& map : generators) {
    if (map.size() != degree) {
      throw invalid_input("generator map must have exactly " +
                          std::to_string(degree) + " entries");
    }
    for (std::size_t target : map) {
      if (target >= degree) {
        throw invalid_input("generator map target out of range");
      }
    }
  }
  if (letters.empty()) {
    for (std::size_t i = 0; i < generators.size(); ++i) {
      letters.push_back(i < 26 ? std::string(1, char('a' + i))
                               : "g" + std::to_string(i));
    }
  }

  // Left-to-right action: (f*g)(x) = g(f(x)).
  auto compose = [&](std::vector<std::size_t> const& f,
                     std::vector<std::size_t> const& g) {
    std::vector<std::size_t> fg(degree);
    for (std::size_t x = 0; x < degree; ++x) {
      fg[x] = g[f[x]];
    }
    return fg;
  };

  std::vector<std::vector<std::size_t>> elements;
  std::map<std::vector<std::size_t>, element_id> ids;
  auto intern = [&](std::vector<std::size_t> const& map) {
    auto it = ids.find(map);
    if (it != ids.end()) {
      return it->second;
    }
    if (elements.size() >= cap) {
      throw invalid_input("closure exceeds cap of " + std::to_string(cap) +
                          " elements");
    }
    element_id const id = static_cast<element_id>(elements.size());
    ids.emplace(map, id);
    elements.push_back(map);
    return id;
  };

  std::vector<element_id> generator_ids;
  std::vector<std::pair<std::string, element_id>> generator_map;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    element_id const id = intern(generators[i]);
    generator_ids.push_back(id);
    generator_map.emplace_back(letters[i], id);
  }

  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (element_id g : generator_ids) {
      intern(compose(elements[next], elements[g]));
    }
  }

  std::size_t const k = elements.size();
  std::vector<element_id> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      auto it = ids.find(compose(elements[i], elements[j]));
      if (it == ids.end()) {
        throw internal_error("closure is not closed under composition");
      }
      table[i * k + j] = it->second;
    }
  }

  Semigroup semigroup(k, std::move(table), {}, /*validate=*/false,
                      generator_ids);
  return {std::move(semigroup), std::move(generator_map),
          std::move(elements)};
}

}  // namespace ltsg
