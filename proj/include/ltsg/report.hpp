#ifndef LTSG_REPORT_HPP_
#define LTSG_REPORT_HPP_

#include <optional>
#include <string>

#include <json.hpp>

#include "ltsg/decision.hpp"
#include "ltsg/level.hpp"
#include "ltsg/oracle.hpp"
#include "ltsg/semigroup.hpp"

namespace ltsg {

struct Sizes {
  std::size_t order = 0;
  std::size_t idempotents = 0;
  std::size_t ses = 0;
  std::size_t residue = 0;
  std::size_t stable_exponent = 0;

  bool operator==(Sizes const&) const = default;
};

struct OracleCheck {
  testability_sense sense = testability_sense::B;
  std::size_t cap = 0;
  std::optional<std::size_t> min_level;
  bool agrees = false;

  bool operator==(OracleCheck const&) const = default;
};

struct Timings {
  double decision_ms = 0.0;
  double level_ms = 0.0;
  double oracle_ms = 0.0;

  bool operator==(Timings const&) const = default;
};

struct Report {
  std::string input;
  Sizes sizes;
  Verdict verdict;
  std::optional<LevelBreakdown> breakdown;
  std::optional<OracleCheck> oracle;
  Timings timings;

  bool operator==(Report const&) const = default;
};

struct AnalyzeOptions {
  std::string input = "semigroup";
  bool with_level = true;
  bool verify = false;                    // oracle cross-check
  std::optional<std::size_t> verify_cap;  // default: 2k + 2
};

/// Runs the decision, the level computation when requested and applicable,
/// and the oracle cross-check when asked for. A cross-check disagreement
/// raises internal_error: either path is wrong.
Report analyze(Semigroup const& s, AnalyzeOptions const& options = {});

nlohmann::ordered_json to_json(Report const& report);
Report report_from_json(nlohmann::ordered_json const& j);

/// Human-readable rendering used by the CLI.
std::string render_text(Semigroup const& s, Report const& report);

}  // namespace ltsg

#endif  // LTSG_REPORT_HPP_
