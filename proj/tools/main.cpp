#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ltsg/catalog.hpp"
#include "ltsg/dfa.hpp"
#include "ltsg/report.hpp"
#include "ltsg/sgp_format.hpp"

namespace {

using namespace ltsg;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInternalError = 2;

struct GlobalFlags {
  bool json = false;
  bool verify = false;
  std::uint64_t seed = 0;  // reserved for sampled fixture generation
};

void print_report(Semigroup const& s, Report const& report,
                  GlobalFlags const& flags) {
  if (flags.json) {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    std::cout << render_text(s, report);
  }
}

int run_analysis(Semigroup const& s, std::string const& input,
                 bool with_level, GlobalFlags const& flags) {
  AnalyzeOptions options;
  options.input = input;
  options.with_level = with_level;
  options.verify = flags.verify;
  Report const report = analyze(s, options);
  print_report(s, report, flags);
  return kExitOk;
}

int run_oracle(std::string const& path, std::string const& sense_text,
               std::size_t cap, GlobalFlags const& flags) {
  Semigroup const s = load_semigroup(path);
  testability_sense const sense = sense_from_string(sense_text);
  auto const found = min_level(s, sense, cap);
  if (flags.json) {
    nlohmann::ordered_json j;
    j["input"] = path;
    j["sense"] = to_string(sense);
    j["cap"] = cap;
    j["min_level"] =
        found ? nlohmann::ordered_json(*found) : nlohmann::ordered_json(nullptr);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "input: " << path << '\n';
    if (found) {
      std::cout << "min level (" << to_string(sense) << "-sense): " << *found
                << '\n';
    } else {
      std::cout << "no level <= " << cap << " (" << to_string(sense)
                << "-sense)\n";
    }
  }
  return kExitOk;
}

int run_dfa(std::string const& path, std::size_t cap,
            GlobalFlags const& flags) {
  Dfa const dfa = load_dfa(path);
  TransformationClosure const closure = transition_semigroup(dfa, cap);
  if (!flags.json) {
    std::cout << "transition semigroup of " << path << ": order "
              << closure.semigroup.order() << " (semigroup-level answer)\n";
  }
  return run_analysis(closure.semigroup, "dfa:" + path, /*with_level=*/true,
                      flags);
}

int run_catalog(std::string const& name, std::optional<std::size_t> size,
                bool emit, GlobalFlags const& flags) {
  CatalogEntry const entry = catalog(name, size);
  if (emit) {
    std::cout << to_sgp(entry.semigroup);
    return kExitOk;
  }
  if (!flags.json) {
    std::cout << "catalog entry " << entry.name;
    if (entry.expected_locally_testable) {
      std::cout << " (expected: "
                << (*entry.expected_locally_testable ? "locally testable"
                                                     : "not locally testable");
      if (entry.expected_level) {
        std::cout << ", level " << *entry.expected_level;
      }
      std::cout << ")";
    }
    std::cout << '\n';
  }
  return run_analysis(entry.semigroup, "catalog:" + entry.name,
                      /*with_level=*/true, flags);
}

int run_enumerate(std::size_t order, GlobalFlags const& flags) {
  std::size_t count = 0;
  std::size_t testable = 0;
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for_each_semigroup(order, [&](Semigroup const& s) {
    ++count;
    Verdict const verdict = is_locally_testable(s);
    std::optional<std::size_t> lvl;
    if (verdict.locally_testable) {
      ++testable;
      lvl = level(s, verdict).level;
    }
    if (flags.json) {
      nlohmann::ordered_json item;
      item["table"] = s.table();
      item["locally_testable"] = verdict.locally_testable;
      item["level"] = lvl ? nlohmann::ordered_json(*lvl)
                          : nlohmann::ordered_json(nullptr);
      items.push_back(std::move(item));
    } else {
      std::cout << count << ':';
      for (element_id x : s.table()) {
        std::cout << ' ' << x;
      }
      if (lvl) {
        std::cout << "  -> locally testable, level " << *lvl << '\n';
      } else {
        std::cout << "  -> not locally testable\n";
      }
    }
  });
  if (flags.json) {
    nlohmann::ordered_json j;
    j["order"] = order;
    j["count"] = count;
    j["locally_testable"] = testable;
    j["semigroups"] = std::move(items);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << count << " associative tables of order " << order << ", "
              << testable << " locally testable\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local testability analysis for finite semigroups"};
  app.require_subcommand(1);
  app.fallthrough();  // lets the global flags follow the subcommand

  GlobalFlags flags;
  app.add_flag("--json", flags.json, "emit machine-readable JSON reports");
  app.add_flag("--verify", flags.verify,
               "cross-check answers against the brute-force identity oracle "
               "(exit 2 on disagreement)");
  app.add_option("--seed", flags.seed,
                 "seed for any sampled fixture generation");

  std::string path;
  auto* check = app.add_subcommand("check", "decide local testability");
  check->add_option("file", path, ".sgp multiplication table")->required();

  auto* level_cmd =
      app.add_subcommand("level", "decide and compute the exact level");
  level_cmd->add_option("file", path, ".sgp multiplication table")->required();

  std::string sense_text = "B";
  std::size_t max_level = 8;
  auto* oracle =
      app.add_subcommand("oracle", "brute-force minimal level search");
  oracle->add_option("file", path, ".sgp multiplication table")->required();
  oracle->add_option("--sense", sense_text, "B or T")->capture_default_str();
  oracle->add_option("--max-level", max_level, "search cap")
      ->capture_default_str();

  std::size_t cap = 4096;
  auto* dfa_cmd = app.add_subcommand(
      "dfa", "analyse the transition semigroup of a complete DFA");
  dfa_cmd->add_option("file", path, ".dfa description")->required();
  dfa_cmd->add_option("--cap", cap, "closure size limit")
      ->capture_default_str();

  std::string name;
  std::optional<std::size_t> size;
  bool emit = false;
  auto* catalog_cmd =
      app.add_subcommand("catalog", "analyse or export a named example");
  catalog_cmd->add_option("name", name, "catalog key")->required();
  catalog_cmd->add_option("--size", size, "size for the sized families");
  catalog_cmd->add_flag("--emit", emit, "print the .sgp table and exit");

  std::size_t order = 2;
  auto* enumerate_cmd = app.add_subcommand(
      "enumerate", "stream every associative table of a small order");
  enumerate_cmd->add_option("--order", order, "table order (1..3)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& err) {
    return app.exit(err);
  } catch (CLI::ParseError const& err) {
    app.exit(err);
    return kExitInputError;
  }

  try {
    if (check->parsed()) {
      return run_analysis(load_semigroup(path), path, /*with_level=*/false,
                          flags);
    }
    if (level_cmd->parsed()) {
      return run_analysis(load_semigroup(path), path, /*with_level=*/true,
                          flags);
    }
    if (oracle->parsed()) {
      return run_oracle(path, sense_text, max_level, flags);
    }
    if (dfa_cmd->parsed()) {
      return run_dfa(path, cap, flags);
    }
    if (catalog_cmd->parsed()) {
      return run_catalog(name, size, emit, flags);
    }
    if (enumerate_cmd->parsed()) {
      return run_enumerate(order, flags);
    }
  } catch (invalid_input const& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitInputError;
  } catch (internal_error const& err) {
    std::cerr << "internal error: " << err.what() << '\n';
    return kExitInternalError;
  }
  return kExitOk;
}
