#include "pubgoods/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <type_traits>

#include "json.hpp"
#include "pubgoods/lindahl.hpp"
#include "pubgoods/voluntary.hpp"

namespace pubgoods {

namespace {

using nlohmann::json;

[[noreturn]] void fieldError(const std::string& field, const std::string& why) {
  throw ValidationError("field '" + field + "' " + why);
}

const json& expectField(const json& obj, const std::string& field) {
  auto it = obj.find(field);
  if (it == obj.end()) {
    fieldError(field, "is required");
  }
  return *it;
}

double numberField(const json& obj, const std::string& field) {
  const json& value = expectField(obj, field);
  if (!value.is_number()) {
    fieldError(field, "must be a number");
  }
  const double v = value.get<double>();
  if (!std::isfinite(v)) {
    fieldError(field, "must be finite");
  }
  return v;
}

double numberFieldOr(const json& obj, const std::string& field,
                     double fallback) {
  return obj.contains(field) ? numberField(obj, field) : fallback;
}

std::vector<double> numberArrayField(const json& obj,
                                     const std::string& field) {
  const json& value = expectField(obj, field);
  if (!value.is_array() || value.empty()) {
    fieldError(field, "must be a non-empty array of numbers");
  }
  std::vector<double> result;
  result.reserve(value.size());
  for (const json& item : value) {
    if (!item.is_number() || !std::isfinite(item.get<double>())) {
      fieldError(field, "must contain only finite numbers");
    }
    result.push_back(item.get<double>());
  }
  return result;
}

std::string stringField(const json& obj, const std::string& field) {
  const json& value = expectField(obj, field);
  if (!value.is_string()) {
    fieldError(field, "must be a string");
  }
  return value.get<std::string>();
}

void rejectUnknownKeys(const json& obj, const std::set<std::string>& allowed,
                       const std::string& context) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw ValidationError("unknown field '" + it.key() + "' in " + context);
    }
  }
}

std::vector<Agent> parseAgents(const json& obj) {
  const json& list = expectField(obj, "agents");
  if (!list.is_array() || list.empty()) {
    fieldError("agents", "must be a non-empty array");
  }
  std::vector<Agent> agents;
  agents.reserve(list.size());
  for (const json& entry : list) {
    if (!entry.is_object()) {
      fieldError("agents", "entries must be objects");
    }
    rejectUnknownKeys(entry, {"endowment", "publicWeight"}, "agent");
    agents.emplace_back(numberField(entry, "endowment"),
                        numberField(entry, "publicWeight"));
  }
  return agents;
}

Technology parseTechnology(const json& obj) {
  if (!obj.contains("technology")) {
    return Technology{};
  }
  const json& tech = obj.at("technology");
  if (!tech.is_object()) {
    fieldError("technology", "must be an object");
  }
  rejectUnknownKeys(tech, {"publicCoeff", "privateCoeff"}, "technology");
  return Technology(numberFieldOr(tech, "publicCoeff", 1.0),
                    numberFieldOr(tech, "privateCoeff", 1.0));
}

ContributionPayload parseContribution(const json& obj) {
  rejectUnknownKeys(
      obj, {"kind", "title", "agents", "technology", "reservedUtilities"},
      "contribution scenario");
  ContributionPayload payload{parseAgents(obj), parseTechnology(obj),
                              std::nullopt};
  if (obj.contains("reservedUtilities")) {
    payload.reserved_utilities = numberArrayField(obj, "reservedUtilities");
    if (payload.reserved_utilities->size() + 1 != payload.agents.size()) {
      fieldError("reservedUtilities",
                 "must list one utility per agent after the first");
    }
  }
  return payload;
}

LindahlPayload parseLindahl(const json& obj) {
  rejectUnknownKeys(obj, {"kind", "title", "agents", "technology"},
                    "lindahl scenario");
  return LindahlPayload{parseAgents(obj), parseTechnology(obj)};
}

MechanismPayload parseMechanism(const json& obj) {
  rejectUnknownKeys(
      obj, {"kind", "title", "valuations", "cost", "convention", "reports",
            "truthGrid"},
      "mechanism scenario");
  const std::string convention_name = stringField(obj, "convention");
  TransferConvention convention;
  if (convention_name == "PAPER_LITERAL") {
    convention = TransferConvention::PaperLiteral;
  } else if (convention_name == "GROVES_ALIGNED") {
    convention = TransferConvention::GrovesAligned;
  } else {
    fieldError("convention",
               "must be 'PAPER_LITERAL' or 'GROVES_ALIGNED'");
  }
  MechanismPayload payload{
      MechanismScenario(numberArrayField(obj, "valuations"),
                        numberFieldOr(obj, "cost", 0.0), convention),
      std::nullopt,
      ReportGrid{}};
  if (obj.contains("reports")) {
    payload.reports = numberArrayField(obj, "reports");
    if (payload.reports->size() != payload.scenario.size()) {
      fieldError("reports", "must list one report per agent");
    }
  }
  if (obj.contains("truthGrid")) {
    const json& grid = obj.at("truthGrid");
    if (!grid.is_object()) {
      fieldError("truthGrid", "must be an object");
    }
    rejectUnknownKeys(grid, {"min", "max", "step"}, "truthGrid");
    payload.truth_grid.min = numberField(grid, "min");
    payload.truth_grid.max = numberField(grid, "max");
    payload.truth_grid.step = numberField(grid, "step");
    if (payload.truth_grid.step <= 0.0 ||
        payload.truth_grid.max < payload.truth_grid.min) {
      fieldError("truthGrid", "needs min <= max and a positive step");
    }
  }
  return payload;
}

VotePayload parseVote(const json& obj) {
  rejectUnknownKeys(obj, {"kind", "title", "alternatives", "voters"},
                    "vote scenario");
  const json& alternatives = expectField(obj, "alternatives");
  if (!alternatives.is_array() || alternatives.empty()) {
    fieldError("alternatives", "must be a non-empty array of names");
  }
  std::vector<std::string> names;
  for (const json& alt : alternatives) {
    if (!alt.is_string()) {
      fieldError("alternatives", "must contain strings");
    }
    names.push_back(alt.get<std::string>());
  }
  const json& voters = expectField(obj, "voters");
  if (!voters.is_array() || voters.empty()) {
    fieldError("voters", "must be a non-empty array");
  }
  std::vector<std::string> voter_names;
  std::vector<std::vector<std::string>> rankings;
  for (const json& voter : voters) {
    if (!voter.is_object()) {
      fieldError("voters", "entries must be objects");
    }
    rejectUnknownKeys(voter, {"name", "ranking"}, "voter");
    voter_names.push_back(voter.contains("name") ? stringField(voter, "name")
                                                 : "voter " + std::to_string(rankings.size() + 1));
    const json& ranking = expectField(voter, "ranking");
    if (!ranking.is_array()) {
      fieldError("ranking", "must be an array of alternative names");
    }
    std::vector<std::string> order;
    for (const json& alt : ranking) {
      if (!alt.is_string()) {
        fieldError("ranking", "must contain strings");
      }
      order.push_back(alt.get<std::string>());
    }
    rankings.push_back(std::move(order));
  }
  return VotePayload{PreferenceProfile::fromNames(names, rankings),
                     std::move(voter_names)};
}

FiscalPayload parseFiscal(const json& obj) {
  rejectUnknownKeys(obj,
                    {"kind", "title", "incomes", "benefit",
                     "alternativeMedians"},
                    "fiscal scenario");
  const json& benefit = expectField(obj, "benefit");
  if (!benefit.is_object()) {
    fieldError("benefit", "must be an object");
  }
  const std::string family_name = stringField(benefit, "family");
  BenefitFamily family;
  double param;
  if (family_name == "LOG") {
    rejectUnknownKeys(benefit, {"family", "beta"}, "benefit");
    family = BenefitFamily::Log;
    param = numberField(benefit, "beta");
  } else if (family_name == "POWER") {
    rejectUnknownKeys(benefit, {"family", "gamma"}, "benefit");
    family = BenefitFamily::Power;
    param = numberField(benefit, "gamma");
  } else {
    fieldError("family", "must be 'LOG' or 'POWER'");
  }
  FiscalPayload payload{
      FiscalModel(numberArrayField(obj, "incomes"), family, param), {}};
  if (obj.contains("alternativeMedians")) {
    payload.alternative_medians = numberArrayField(obj, "alternativeMedians");
  }
  return payload;
}

bool isCanonicalRoommates(const ContributionPayload& payload) {
  const std::size_t n = payload.agents.size();
  if (n != 2 && n != 3) {
    return false;
  }
  for (const Agent& agent : payload.agents) {
    if (std::abs(agent.endowment - 10.0) > 1e-9 ||
        std::abs(agent.public_weight - 1.0 / 3.0) > 1e-9) {
      return false;
    }
  }
  return payload.technology.public_coeff == 1.0 &&
         payload.technology.private_coeff == 1.0;
}

bool agentsIdentical(const std::vector<Agent>& agents) {
  for (const Agent& a : agents) {
    if (a.endowment != agents[0].endowment ||
        a.public_weight != agents[0].public_weight) {
      return false;
    }
  }
  return true;
}

struct ReferenceRow {
  const char* metric;
  double computed;
  double reference;
  double tolerance;  // half a unit in the reference's last printed digit
};

void appendReferenceComparison(Report& report,
                               const std::vector<ReferenceRow>& rows) {
  ReportTable table;
  table.name = "reference comparison";
  table.columns = {"metric", "computed", "reference", "flag"};
  bool any_mismatch = false;
  for (const ReferenceRow& row : rows) {
    const bool ok = std::abs(row.computed - row.reference) <= row.tolerance;
    any_mismatch = any_mismatch || !ok;
    table.rows.push_back({Cell::of(row.metric), Cell::of(row.computed),
                          Cell::of(row.reference), Cell::of(ok ? "ok" : "mismatch")});
  }
  report.tables.push_back(std::move(table));
  if (any_mismatch) {
    report.notes.push_back(
        "the published three-person worked example prints equilibrium utility "
        "6.12, efficient contribution 2.5 and efficient utility 7.5 (an 18.4% "
        "gap); those figures are mutually inconsistent. The stated preferences "
        "give equilibrium utility 6.8031, efficient contribution 3.3333 and "
        "efficient utility 7.6314 (a 10.85% gap); computed values are "
        "reported.");
  }
}

Report buildContributionReport(const Scenario& scenario,
                               const ContributionPayload& payload,
                               Analysis analysis) {
  Report report;
  report.title = scenario.title;
  report.summary.emplace_back("kind", Cell::of("contribution"));
  report.summary.emplace_back(
      "agents", Cell::of(static_cast<int>(payload.agents.size())));

  const bool identical = agentsIdentical(payload.agents);
  const bool want_nash =
      analysis == Analysis::Full || analysis == Analysis::Nash;
  const bool want_efficient =
      analysis == Analysis::Full || analysis == Analysis::Efficient;

  std::optional<ContributionProfile> nash;
  std::optional<ContributionProfile> efficient;

  if (want_nash) {
    nash = nashEquilibrium(payload.agents, payload.technology);
    if (identical) {
      report.summary.emplace_back("nash contribution each",
                                  Cell::of(nash->contributions[0]));
    }
    report.summary.emplace_back("nash public total",
                                Cell::of(nash->public_total));
    if (identical) {
      report.summary.emplace_back("nash utility each",
                                  Cell::of(nash->utilities[0]));
    }
    report.summary.emplace_back(
        "samuelson gap at nash",
        Cell::of(samuelsonResidual(payload.agents, *nash,
                                   payload.technology)));
  }

  if (want_efficient) {
    if (payload.reserved_utilities) {
      efficient = paretoEfficient(payload.agents, payload.technology,
                                  *payload.reserved_utilities);
      report.summary.emplace_back("planner lead-agent utility",
                                  Cell::of(efficient->utilities[0]));
      report.summary.emplace_back("efficient public total",
                                  Cell::of(efficient->public_total));
    } else if (identical) {
      efficient = efficientSymmetric(static_cast<int>(payload.agents.size()),
                                     payload.agents[0], payload.technology);
      report.summary.emplace_back("efficient contribution each",
                                  Cell::of(efficient->contributions[0]));
      report.summary.emplace_back("efficient public total",
                                  Cell::of(efficient->public_total));
      report.summary.emplace_back("efficient utility each",
                                  Cell::of(efficient->utilities[0]));
    } else if (analysis == Analysis::Efficient) {
      throw ValidationError(
          "efficient allocation for unequal agents needs reservedUtilities");
    } else {
      report.notes.push_back(
          "efficiency metrics skipped: agents differ and no reserved "
          "utilities were given");
    }
  }

  if (analysis == Analysis::Full && identical && nash && efficient &&
      !payload.reserved_utilities) {
    EquilibriumReport summary = inefficiencyReport(payload.agents,
                                                   payload.technology);
    report.summary.emplace_back("utility loss each",
                                Cell::of(summary.utility_loss_per_agent));
    report.summary.emplace_back("utility loss percent",
                                Cell::of(summary.utility_loss_percent));
  }

  ReportTable agents_table;
  agents_table.name = "agents";
  agents_table.columns = {"agent", "endowment", "weight"};
  if (nash) {
    agents_table.columns.insert(agents_table.columns.end(),
                                {"nash_x", "nash_y", "nash_utility"});
  }
  if (efficient) {
    agents_table.columns.insert(
        agents_table.columns.end(),
        {"efficient_x", "efficient_y", "efficient_utility"});
  }
  for (std::size_t i = 0; i < payload.agents.size(); ++i) {
    std::vector<Cell> row{Cell::of(static_cast<int>(i + 1)),
                          Cell::of(payload.agents[i].endowment),
                          Cell::of(payload.agents[i].public_weight)};
    if (nash) {
      row.push_back(Cell::of(nash->contributions[i]));
      row.push_back(Cell::of(nash->private_consumptions[i]));
      row.push_back(Cell::of(nash->utilities[i]));
    }
    if (efficient) {
      row.push_back(Cell::of(efficient->contributions[i]));
      row.push_back(Cell::of(efficient->private_consumptions[i]));
      row.push_back(Cell::of(efficient->utilities[i]));
    }
    agents_table.rows.push_back(std::move(row));
  }
  report.tables.push_back(std::move(agents_table));

  if (analysis == Analysis::Full && isCanonicalRoommates(payload) && nash &&
      efficient) {
    const double loss_percent =
        100.0 * (efficient->utilities[0] - nash->utilities[0]) /
        efficient->utilities[0];
    if (payload.agents.size() == 2) {
      appendReferenceComparison(
          report, {{"nash contribution each", nash->contributions[0], 2.0, 0.05},
                   {"nash utility each", nash->utilities[0], 6.35, 0.005},
                   {"efficient contribution each", efficient->contributions[0],
                    3.33, 0.005},
                   {"efficient utility each", efficient->utilities[0], 6.67,
                    0.005},
                   {"utility loss percent", loss_percent, 4.8, 0.05}});
    } else {
      appendReferenceComparison(
          report,
          {{"nash contribution each", nash->contributions[0], 1.43, 0.005},
           {"nash utility each", nash->utilities[0], 6.12, 0.005},
           {"efficient contribution each", efficient->contributions[0], 2.5,
            0.05},
           {"efficient utility each", efficient->utilities[0], 7.50, 0.005},
           {"utility loss percent", loss_percent, 18.4, 0.05}});
    }
  }
  return report;
}

Report buildLindahlReport(const Scenario& scenario,
                          const LindahlPayload& payload) {
  Report report;
  report.title = scenario.title;
  const LindahlSolution solution =
      lindahlEquilibrium(payload.agents, payload.technology);

  report.summary.emplace_back("kind", Cell::of("lindahl"));
  report.summary.emplace_back(
      "agents", Cell::of(static_cast<int>(payload.agents.size())));
  report.summary.emplace_back("quantity", Cell::of(solution.quantity));
  double share_sum = 0.0;
  for (double share : solution.shares) {
    share_sum += share;
  }
  report.summary.emplace_back("share sum", Cell::of(share_sum));
  if (agentsIdentical(payload.agents)) {
    const ContributionProfile efficient =
        efficientSymmetric(static_cast<int>(payload.agents.size()),
                           payload.agents[0], payload.technology);
    report.summary.emplace_back(
        "efficient quantity",
        Cell::of(payload.technology.public_coeff * efficient.public_total));
  }

  ReportTable table;
  table.name = "shares";
  table.columns = {"agent", "endowment", "share", "demand"};
  for (std::size_t i = 0; i < payload.agents.size(); ++i) {
    table.rows.push_back({Cell::of(static_cast<int>(i + 1)),
                          Cell::of(payload.agents[i].endowment),
                          Cell::of(solution.shares[i]),
                          Cell::of(solution.per_agent_demand[i])});
  }
  report.tables.push_back(std::move(table));
  return report;
}

std::string conventionName(TransferConvention convention) {
  return convention == TransferConvention::PaperLiteral ? "PAPER_LITERAL"
                                                        : "GROVES_ALIGNED";
}

Report buildMechanismReport(const Scenario& scenario,
                            const MechanismPayload& payload) {
  Report report;
  report.title = scenario.title;
  const MechanismScenario& mech = payload.scenario;
  const std::vector<double> reports =
      payload.reports ? *payload.reports : mech.valuations;
  const MechanismOutcome outcome = runMechanism(mech, reports);

  report.summary.emplace_back("kind", Cell::of("mechanism"));
  report.summary.emplace_back("agents",
                              Cell::of(static_cast<int>(mech.size())));
  report.summary.emplace_back("convention",
                              Cell::of(conventionName(mech.convention)));
  report.summary.emplace_back("cost", Cell::of(mech.cost));
  report.summary.emplace_back("truthful reports",
                              Cell::of(!payload.reports.has_value()));
  report.summary.emplace_back("implemented", Cell::of(outcome.implemented));
  report.summary.emplace_back("revenue", Cell::of(outcome.revenue));

  ReportTable table;
  table.name = "agents";
  table.columns = {"agent", "valuation", "report", "net_report", "transfer",
                   "utility"};
  for (std::size_t i = 0; i < mech.size(); ++i) {
    table.rows.push_back({Cell::of(static_cast<int>(i + 1)),
                          Cell::of(mech.valuations[i]),
                          Cell::of(outcome.reports[i]),
                          Cell::of(mech.net(outcome.reports[i])),
                          Cell::of(outcome.transfers[i]),
                          Cell::of(outcome.per_agent_utility[i])});
  }
  report.tables.push_back(std::move(table));

  if (outcome.implemented &&
      mech.convention == TransferConvention::PaperLiteral) {
    double net_sum = 0.0;
    for (double r : reports) {
      net_sum += mech.net(r);
    }
    report.notes.push_back(
        "revenue equals (n-1) times the summed net reports: " +
        formatSig(outcome.revenue, 6) + " = " +
        std::to_string(mech.size() - 1) + " x " + formatSig(net_sum, 6));
  }

  try {
    const TruthfulnessVerdict verdict =
        truthfulnessCheck(mech, payload.truth_grid.values());
    report.summary.emplace_back("truthful dominant on grid",
                                Cell::of(verdict.dominant));
    if (!verdict.dominant) {
      const Counterexample& ce = *verdict.counterexample;
      std::string opponents;
      for (std::size_t k = 0; k < ce.opponent_reports.size(); ++k) {
        if (k > 0) {
          opponents += ", ";
        }
        opponents += formatSig(ce.opponent_reports[k], 6);
      }
      report.notes.push_back(
          "truth-telling fails: agent " + std::to_string(ce.agent + 1) +
          " (value " + formatSig(ce.true_value, 6) +
          ") facing opponent reports [" + opponents + "] gains " +
          formatSig(ce.gain, 6) + " by reporting " +
          formatSig(ce.misreport, 6));
    }
  } catch (const BudgetError&) {
    report.summary.emplace_back("truthful dominant on grid",
                                Cell::of("skipped: grid too large"));
  }
  return report;
}

Report buildVoteReport(const Scenario& scenario, const VotePayload& payload) {
  Report report;
  report.title = scenario.title;
  const PreferenceProfile& profile = payload.profile;
  const MajorityMatrix matrix = pairwiseMatrix(profile);

  report.summary.emplace_back("kind", Cell::of("vote"));
  report.summary.emplace_back("voters", Cell::of(profile.voterCount()));
  std::string axis;
  for (int a = 0; a < profile.alternativeCount(); ++a) {
    if (a > 0) {
      axis += " < ";
    }
    axis += profile.alternatives[a];
  }
  report.summary.emplace_back("axis", Cell::of(axis));

  const std::optional<int> winner = condorcetWinner(matrix);
  report.summary.emplace_back(
      "condorcet winner",
      winner ? Cell::of(profile.alternatives[*winner]) : Cell::of("none"));

  std::string cycle_text = "none";
  try {
    const CycleWitness witness = hasMajorityCycle(matrix);
    if (witness.has_cycle) {
      cycle_text.clear();
      for (int alt : witness.cycle) {
        cycle_text += profile.alternatives[alt] + " -> ";
      }
      cycle_text += profile.alternatives[witness.cycle.front()];
    }
  } catch (const TieError&) {
    cycle_text = "undefined (pairwise tie)";
  }
  report.summary.emplace_back("majority cycle", Cell::of(cycle_text));

  const SinglePeakedness peaks = isSinglePeaked(profile);
  report.summary.emplace_back("single-peaked", Cell::of(peaks.overall));

  std::string median_text = "n/a";
  if (peaks.overall && profile.voterCount() % 2 == 1) {
    const MedianVoterResult median = medianVoterOutcome(profile);
    median_text = profile.alternatives[median.alternative] + " (median voter " +
                  payload.voter_names[median.median_voter] + ")";
  }
  report.summary.emplace_back("median outcome", Cell::of(median_text));

  ReportTable pairwise;
  pairwise.name = "pairwise";
  pairwise.columns = {"pair", "for", "against", "winner"};
  for (int a = 0; a < profile.alternativeCount(); ++a) {
    for (int b = a + 1; b < profile.alternativeCount(); ++b) {
      const int fa = matrix.wins[a][b];
      const int fb = matrix.wins[b][a];
      std::string verdict = "tie";
      if (fa > fb) {
        verdict = profile.alternatives[a];
      } else if (fb > fa) {
        verdict = profile.alternatives[b];
      }
      pairwise.rows.push_back(
          {Cell::of(profile.alternatives[a] + " vs " + profile.alternatives[b]),
           Cell::of(fa), Cell::of(fb), Cell::of(verdict)});
    }
  }
  report.tables.push_back(std::move(pairwise));

  ReportTable voters;
  voters.name = "voters";
  voters.columns = {"voter", "ranking", "single_peaked", "peak"};
  for (int v = 0; v < profile.voterCount(); ++v) {
    std::string ranking;
    for (std::size_t r = 0; r < profile.rankings[v].size(); ++r) {
      if (r > 0) {
        ranking += " > ";
      }
      ranking += profile.alternatives[profile.rankings[v][r]];
    }
    voters.rows.push_back({Cell::of(payload.voter_names[v]), Cell::of(ranking),
                           Cell::of(static_cast<bool>(peaks.per_voter[v])),
                           Cell::of(profile.alternatives[profile.peakOf(v)])});
  }
  report.tables.push_back(std::move(voters));

  if (!winner && cycle_text != "none") {
    report.notes.push_back("no Condorcet winner; majority cycle " + cycle_text);
  }
  if (!peaks.overall) {
    report.notes.push_back(
        "profile is not single-peaked on its axis; the median voter outcome "
        "is undefined");
  }
  return report;
}

Report buildFiscalReport(const Scenario& scenario,
                         const FiscalPayload& payload) {
  Report report;
  report.title = scenario.title;
  const FiscalModel& model = payload.model;

  report.summary.emplace_back("kind", Cell::of("fiscal"));
  report.summary.emplace_back(
      "voters", Cell::of(static_cast<int>(model.incomes.size())));
  report.summary.emplace_back(
      "benefit",
      Cell::of((model.family == BenefitFamily::Log ? "LOG beta="
                                                   : "POWER gamma=") +
               formatSig(model.param, 6)));
  report.summary.emplace_back("mean income", Cell::of(model.meanIncome()));
  report.summary.emplace_back("tax base", Cell::of(model.taxBase()));

  if (model.incomes.size() % 2 == 1) {
    const double median = model.medianIncome();
    const FiscalEquilibrium eq = equilibriumSpending(model);
    report.summary.emplace_back("median income", Cell::of(median));
    report.summary.emplace_back("equilibrium spending", Cell::of(eq.spending));
    report.summary.emplace_back("tax rate", Cell::of(eq.tax_rate));
    report.summary.emplace_back("marginal benefit",
                                Cell::of(eq.marginal_benefit));
    if (eq.at_tax_ceiling) {
      report.notes.push_back(
          "the tax rate exhausts the entire tax base (t = 1)");
    }
    const double n = static_cast<double>(model.incomes.size());
    if (median < model.meanIncome()) {
      report.notes.push_back(
          "median income below the mean: equilibrium marginal benefit " +
          formatSig(eq.marginal_benefit, 6) + " is below 1/n = " +
          formatSig(1.0 / n, 6) +
          ", so spending exceeds the equal-income benchmark");
    }
  } else {
    report.summary.emplace_back("median income",
                                Cell::of("undefined (even electorate)"));
  }

  ReportTable voters;
  voters.name = "voters";
  voters.columns = {"voter", "income", "preferred_spending"};
  for (std::size_t i = 0; i < model.incomes.size(); ++i) {
    voters.rows.push_back({Cell::of(static_cast<int>(i + 1)),
                           Cell::of(model.incomes[i]),
                           Cell::of(preferredSpending(model, model.incomes[i]))});
  }
  report.tables.push_back(std::move(voters));

  if (!payload.alternative_medians.empty()) {
    const std::vector<FiscalEquilibrium> sweep =
        skewComparativeStatics(model, payload.alternative_medians);
    ReportTable statics;
    statics.name = "comparative statics";
    statics.columns = {"median", "spending", "tax_rate"};
    for (std::size_t i = 0; i < sweep.size(); ++i) {
      statics.rows.push_back({Cell::of(payload.alternative_medians[i]),
                              Cell::of(sweep[i].spending),
                              Cell::of(sweep[i].tax_rate)});
    }
    report.tables.push_back(std::move(statics));
  }
  return report;
}

}  // namespace

std::vector<double> ReportGrid::values() const {
  std::vector<double> grid;
  for (double v = min; v <= max + 1e-12; v += step) {
    grid.push_back(v);
  }
  return grid;
}

std::string toString(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Contribution:
      return "contribution";
    case ScenarioKind::Lindahl:
      return "lindahl";
    case ScenarioKind::Mechanism:
      return "mechanism";
    case ScenarioKind::Vote:
      return "vote";
    case ScenarioKind::Fiscal:
      return "fiscal";
  }
  return "unknown";
}

ScenarioKind Scenario::kind() const {
  if (std::holds_alternative<ContributionPayload>(payload)) {
    return ScenarioKind::Contribution;
  }
  if (std::holds_alternative<LindahlPayload>(payload)) {
    return ScenarioKind::Lindahl;
  }
  if (std::holds_alternative<MechanismPayload>(payload)) {
    return ScenarioKind::Mechanism;
  }
  if (std::holds_alternative<VotePayload>(payload)) {
    return ScenarioKind::Vote;
  }
  return ScenarioKind::Fiscal;
}

Scenario parseScenario(const std::string& json_text) {
  json obj;
  try {
    obj = json::parse(json_text);
  } catch (const json::parse_error& err) {
    throw ValidationError(std::string("scenario is not valid JSON: ") +
                          err.what());
  }
  if (!obj.is_object()) {
    throw ValidationError("scenario must be a JSON object");
  }
  const std::string kind = stringField(obj, "kind");
  Scenario scenario;
  scenario.title = obj.contains("title") ? stringField(obj, "title")
                                         : kind + " scenario";
  if (kind == "contribution") {
    scenario.payload = parseContribution(obj);
  } else if (kind == "lindahl") {
    scenario.payload = parseLindahl(obj);
  } else if (kind == "mechanism") {
    scenario.payload = parseMechanism(obj);
  } else if (kind == "vote") {
    scenario.payload = parseVote(obj);
  } else if (kind == "fiscal") {
    scenario.payload = parseFiscal(obj);
  } else {
    fieldError("kind",
               "must be one of contribution, lindahl, mechanism, vote, fiscal");
  }
  return scenario;
}

Scenario loadScenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open scenario file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("cannot read scenario file: " + path);
  }
  return parseScenario(buffer.str());
}

Report runScenario(const Scenario& scenario, Analysis analysis) {
  const ScenarioKind kind = scenario.kind();
  auto mismatch = [&](const char* verb) -> ValidationError {
    return ValidationError(std::string("verb '") + verb +
                           "' does not apply to a " + toString(kind) +
                           " scenario");
  };
  switch (analysis) {
    case Analysis::Full:
      break;
    case Analysis::Nash:
    case Analysis::Efficient:
      if (kind != ScenarioKind::Contribution) {
        throw mismatch(analysis == Analysis::Nash ? "nash" : "efficient");
      }
      break;
    case Analysis::Lindahl:
      if (kind != ScenarioKind::Lindahl) {
        throw mismatch("lindahl");
      }
      break;
    case Analysis::Mechanism:
      if (kind != ScenarioKind::Mechanism) {
        throw mismatch("mechanism");
      }
      break;
    case Analysis::Vote:
      if (kind != ScenarioKind::Vote) {
        throw mismatch("vote");
      }
      break;
    case Analysis::Fiscal:
      if (kind != ScenarioKind::Fiscal) {
        throw mismatch("fiscal");
      }
      break;
  }
  return std::visit(
      [&](const auto& payload) -> Report {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, ContributionPayload>) {
          return buildContributionReport(scenario, payload, analysis);
        } else if constexpr (std::is_same_v<T, LindahlPayload>) {
          return buildLindahlReport(scenario, payload);
        } else if constexpr (std::is_same_v<T, MechanismPayload>) {
          return buildMechanismReport(scenario, payload);
        } else if constexpr (std::is_same_v<T, VotePayload>) {
          return buildVoteReport(scenario, payload);
        } else {
          return buildFiscalReport(scenario, payload);
        }
      },
      scenario.payload);
}

}  // namespace pubgoods
