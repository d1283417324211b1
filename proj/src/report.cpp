#include "ltsg/report.hpp"

#include <chrono>
#include <sstream>

namespace ltsg {

namespace {

using ordered_json = nlohmann::ordered_json;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

ordered_json witness_to_json(Witness const& w) {
  return std::visit(
      [](auto const& witness) -> ordered_json {
        using T = std::decay_t<decltype(witness)>;
        ordered_json j;
        if constexpr (std::is_same_v<T, IdentityViolation>) {
          j["kind"] = "identity-violation";
          j["identity"] = witness.identity;
          j["substitution"] = witness.substitution;
          j["lhs"] = witness.lhs;
          j["rhs"] = witness.rhs;
        } else if constexpr (std::is_same_v<T, CommonUnitWitness>) {
          j["kind"] = "common-unit";
          j["e"] = witness.e;
          j["i"] = witness.i;
          j["f"] = witness.f;
          j["side"] = to_string(witness.block_side);
        } else if constexpr (std::is_same_v<T, NontrivialSubgroup>) {
          j["kind"] = "nontrivial-subgroup";
          j["element"] = witness.element;
          j["cycle_length"] = witness.cycle_length;
        } else {
          j["kind"] = "semilattice-failure";
          j["e"] = witness.e;
          j["x"] = witness.x;
          j["y"] = witness.y;
        }
        return j;
      },
      w);
}

Witness witness_from_json(ordered_json const& j) {
  std::string const kind = j.at("kind");
  if (kind == "identity-violation") {
    IdentityViolation w;
    w.identity = j.at("identity");
    w.substitution = j.at("substitution").get<std::vector<element_id>>();
    w.lhs = j.at("lhs");
    w.rhs = j.at("rhs");
    return w;
  }
  if (kind == "common-unit") {
    CommonUnitWitness w;
    w.e = j.at("e");
    w.i = j.at("i");
    w.f = j.at("f");
    w.block_side = side_from_string(j.at("side").get<std::string>());
    return w;
  }
  if (kind == "nontrivial-subgroup") {
    NontrivialSubgroup w;
    w.element = j.at("element");
    w.cycle_length = j.at("cycle_length");
    return w;
  }
  if (kind == "semilattice-failure") {
    SemilatticeFailure w;
    w.e = j.at("e");
    w.x = j.at("x");
    w.y = j.at("y");
    return w;
  }
  throw invalid_input("unknown witness kind: " + kind);
}

ordered_json breakdown_to_json(LevelBreakdown const& b) {
  ordered_json j;
  j["n_bound"] = b.n_bound;
  j["l_bound"] = b.l_bound;
  j["r_bound"] = b.r_bound;
  j["level"] = b.level;
  j["elements"] = ordered_json::array();
  for (auto const& rec : b.elements) {
    j["elements"].push_back(
        {{"element", rec.a}, {"m", rec.m}, {"length", rec.length}});
  }
  j["alpha_contributions"] = ordered_json::array();
  for (auto const& c : b.alpha_details) {
    ordered_json item;
    item["element"] = c.a;
    if (c.factorization) {
      item["factorization"] = {{"left", c.factorization->first},
                               {"right", c.factorization->second}};
    } else {
      item["factorization"] = nullptr;
    }
    item["value"] = c.value;
    j["alpha_contributions"].push_back(std::move(item));
  }
  j["divisor_records"] = ordered_json::array();
  for (auto const& rec : b.divisor_details) {
    j["divisor_records"].push_back({{"side", to_string(rec.block_side)},
                                    {"g", rec.g},
                                    {"e", rec.e},
                                    {"i", rec.i},
                                    {"value", rec.value}});
  }
  return j;
}

LevelBreakdown breakdown_from_json(ordered_json const& j) {
  LevelBreakdown b;
  b.n_bound = j.at("n_bound");
  b.l_bound = j.at("l_bound");
  b.r_bound = j.at("r_bound");
  b.level = j.at("level");
  for (auto const& item : j.at("elements")) {
    b.elements.push_back(
        {item.at("element"), item.at("m"), item.at("length")});
  }
  for (auto const& item : j.at("alpha_contributions")) {
    AlphaContribution c;
    c.a = item.at("element");
    if (!item.at("factorization").is_null()) {
      c.factorization =
          std::make_pair(item.at("factorization").at("left").get<element_id>(),
                         item.at("factorization").at("right").get<element_id>());
    }
    c.value = item.at("value");
    b.alpha_details.push_back(std::move(c));
  }
  for (auto const& item : j.at("divisor_records")) {
    DivisorRecord rec;
    rec.block_side = side_from_string(item.at("side").get<std::string>());
    rec.g = item.at("g");
    rec.e = item.at("e");
    rec.i = item.at("i");
    rec.value = item.at("value");
    b.divisor_details.push_back(rec);
  }
  return b;
}

}  // namespace

Report analyze(Semigroup const& s, AnalyzeOptions const& options) {
  Report report;
  report.input = options.input;

  auto const decision_start = std::chrono::steady_clock::now();
  report.verdict = is_locally_testable(s);
  report.timings.decision_ms = elapsed_ms(decision_start);

  ProductChain const chain = product_chain(s);
  report.sizes = {s.order(), idempotents(s).size(), chain.ses.size(),
                  chain.residue.size(), chain.stable_exponent};

  if (options.with_level && report.verdict.locally_testable) {
    auto const level_start = std::chrono::steady_clock::now();
    report.breakdown = level(s, report.verdict);
    report.timings.level_ms = elapsed_ms(level_start);
  }

  if (options.verify) {
    auto const oracle_start = std::chrono::steady_clock::now();
    OracleCheck check;
    check.sense = testability_sense::B;
    check.cap = options.verify_cap.value_or(default_level_cap(s));
    check.min_level = min_level(s, check.sense, check.cap);
    if (report.breakdown) {
      check.agrees = check.min_level.has_value() &&
                     *check.min_level == report.breakdown->level;
    } else {
      check.agrees =
          check.min_level.has_value() == report.verdict.locally_testable;
    }
    report.timings.oracle_ms = elapsed_ms(oracle_start);
    report.oracle = check;
    if (!check.agrees) {
      throw internal_error(
          "oracle cross-check disagrees with the computed answer on input " +
          report.input);
    }
  }
  return report;
}

nlohmann::ordered_json to_json(Report const& report) {
  ordered_json j;
  j["input"] = report.input;
  j["sizes"] = {{"order", report.sizes.order},
                {"idempotents", report.sizes.idempotents},
                {"ses", report.sizes.ses},
                {"residue", report.sizes.residue},
                {"stable_exponent", report.sizes.stable_exponent}};
  ordered_json verdict;
  verdict["locally_testable"] = report.verdict.locally_testable;
  verdict["method"] = to_string(report.verdict.method);
  verdict["witness"] = report.verdict.witness
                           ? witness_to_json(*report.verdict.witness)
                           : ordered_json(nullptr);
  j["verdict"] = std::move(verdict);
  j["breakdown"] = report.breakdown ? breakdown_to_json(*report.breakdown)
                                    : ordered_json(nullptr);
  if (report.oracle) {
    ordered_json oracle;
    oracle["sense"] = to_string(report.oracle->sense);
    oracle["cap"] = report.oracle->cap;
    oracle["min_level"] = report.oracle->min_level
                              ? ordered_json(*report.oracle->min_level)
                              : ordered_json(nullptr);
    oracle["agrees"] = report.oracle->agrees;
    j["oracle"] = std::move(oracle);
  } else {
    j["oracle"] = nullptr;
  }
  j["timings"] = {{"decision_ms", report.timings.decision_ms},
                  {"level_ms", report.timings.level_ms},
                  {"oracle_ms", report.timings.oracle_ms}};
  return j;
}

Report report_from_json(nlohmann::ordered_json const& j) {
  Report report;
  report.input = j.at("input");
  auto const& sizes = j.at("sizes");
  report.sizes = {sizes.at("order"), sizes.at("idempotents"), sizes.at("ses"),
                  sizes.at("residue"), sizes.at("stable_exponent")};
  auto const& verdict = j.at("verdict");
  report.verdict.locally_testable = verdict.at("locally_testable");
  report.verdict.method =
      decision_method_from_string(verdict.at("method").get<std::string>());
  if (!verdict.at("witness").is_null()) {
    report.verdict.witness = witness_from_json(verdict.at("witness"));
  }
  if (!j.at("breakdown").is_null()) {
    report.breakdown = breakdown_from_json(j.at("breakdown"));
  }
  if (!j.at("oracle").is_null()) {
    auto const& oracle = j.at("oracle");
    OracleCheck check;
    check.sense = sense_from_string(oracle.at("sense").get<std::string>());
    check.cap = oracle.at("cap");
    if (!oracle.at("min_level").is_null()) {
      check.min_level = oracle.at("min_level").get<std::size_t>();
    }
    check.agrees = oracle.at("agrees");
    report.oracle = check;
  }
  auto const& timings = j.at("timings");
  report.timings = {timings.at("decision_ms"), timings.at("level_ms"),
                    timings.at("oracle_ms")};
  return report;
}

std::string render_text(Semigroup const& s, Report const& report) {
  std::ostringstream out;
  out << "input: " << report.input << '\n';
  out << "order " << report.sizes.order << ", idempotents "
      << report.sizes.idempotents << ", |SES| " << report.sizes.ses
      << ", |G| " << report.sizes.residue << ", stable exponent "
      << report.sizes.stable_exponent << '\n';
  if (report.verdict.locally_testable) {
    out << "locally testable\n";
  } else {
    out << "not locally testable\n";
    if (report.verdict.witness) {
      out << "witness: " << describe(s, *report.verdict.witness) << '\n';
    }
  }
  if (report.breakdown) {
    auto const& b = *report.breakdown;
    out << "level: " << b.level << " (B-sense)\n";
    out << "bounds: n=" << b.n_bound << " l=" << b.l_bound
        << " r=" << b.r_bound;
    if (b.elements.empty()) {
      out << " (residue empty)";
    }
    out << '\n';
    for (auto const& rec : b.elements) {
      out << "  " << s.name_of(rec.a) << ": m=" << rec.m
          << " length=" << rec.length << '\n';
    }
    for (auto const& rec : b.divisor_details) {
      out << "  divisor " << s.name_of(rec.g) << " reaches "
          << s.name_of(rec.e) << " and " << s.name_of(rec.i) << " in one "
          << to_string(rec.block_side) << "-zero block (bound " << rec.value
          << ")\n";
    }
  }
  if (report.oracle) {
    out << "oracle (" << to_string(report.oracle->sense)
        << "-sense, cap " << report.oracle->cap << "): ";
    if (report.oracle->min_level) {
      out << "min level " << *report.oracle->min_level;
    } else {
      out << "no level <= cap";
    }
    out << (report.oracle->agrees ? ", agrees" : ", DISAGREES") << '\n';
  }
  return out.str();
}

}  // namespace ltsg
