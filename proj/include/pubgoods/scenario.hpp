#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pubgoods/economy.hpp"
#include "pubgoods/groves.hpp"
#include "pubgoods/polecon.hpp"
#include "pubgoods/report.hpp"
#include "pubgoods/voting.hpp"

namespace pubgoods {

enum class ScenarioKind : std::uint8_t {
  Contribution,
  Lindahl,
  Mechanism,
  Vote,
  Fiscal,
};

std::string toString(ScenarioKind kind);

struct ContributionPayload {
  std::vector<Agent> agents;
  Technology technology;
  // When present (one entry per agent after the first), `efficient`
  // computes the planner optimum instead of the symmetric allocation.
  std::optional<std::vector<double>> reserved_utilities;
};

struct LindahlPayload {
  std::vector<Agent> agents;
  Technology technology;
};

struct ReportGrid {
  double min = -5.0;
  double max = 5.0;
  double step = 0.5;

  std::vector<double> values() const;
};

struct MechanismPayload {
  MechanismScenario scenario;
  // Reports submitted to the mechanism; truthful when absent.
  std::optional<std::vector<double>> reports;
  ReportGrid truth_grid;
};

struct VotePayload {
  PreferenceProfile profile;
  std::vector<std::string> voter_names;
};

struct FiscalPayload {
  FiscalModel model;
  std::vector<double> alternative_medians;
};

struct Scenario {
  std::string title;
  std::variant<ContributionPayload, LindahlPayload, MechanismPayload,
               VotePayload, FiscalPayload>
      payload;

  ScenarioKind kind() const;
};

// Parse and validate a scenario file (JSON, one scenario per file).
// Missing/unreadable files raise IoError; schema violations raise
// ValidationError naming the offending field.
Scenario loadScenario(const std::string& path);
Scenario parseScenario(const std::string& json_text);

// Which analysis a CLI verb requests. Full runs everything the scenario
// kind supports.
enum class Analysis : std::uint8_t {
  Full,
  Nash,
  Efficient,
  Lindahl,
  Mechanism,
  Vote,
  Fiscal,
};

// Deterministic report for the scenario. ValidationError when the verb
// does not apply to the scenario kind.
Report runScenario(const Scenario& scenario, Analysis analysis = Analysis::Full);

}  // namespace pubgoods
