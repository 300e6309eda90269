#include "pubgoods/groves.hpp"

#include <algorithm>
#include <cmath>

namespace pubgoods {

MechanismScenario::MechanismScenario(std::vector<double> valuations_,
                                     double cost_,
                                     TransferConvention convention_)
    : valuations(std::move(valuations_)), cost(cost_), convention(convention_) {
  if (valuations.empty()) {
    throw ValidationError("at least one agent required");
  }
  for (double v : valuations) {
    if (!std::isfinite(v)) {
      throw ValidationError("valuations must be finite");
    }
  }
  if (!std::isfinite(cost) || cost < 0.0) {
    throw ValidationError("cost must be non-negative");
  }
}

bool decide(const std::vector<double>& reports, double cost) {
  if (reports.empty()) {
    throw ValidationError("at least one report required");
  }
  const double share = cost / static_cast<double>(reports.size());
  double net_sum = 0.0;
  for (double r : reports) {
    net_sum += r - share;
  }
  return net_sum >= 0.0;
}

std::vector<double> transfers(const std::vector<double>& net_reports,
                              bool implemented,
                              TransferConvention convention) {
  std::vector<double> taxes(net_reports.size(), 0.0);
  if (!implemented) {
    return taxes;
  }
  for (std::size_t i = 0; i < net_reports.size(); ++i) {
    double others = 0.0;
    for (std::size_t j = 0; j < net_reports.size(); ++j) {
      if (j != i) {
        others += net_reports[j];
      }
    }
    taxes[i] =
        convention == TransferConvention::PaperLiteral ? others : -others;
  }
  return taxes;
}

MechanismOutcome runMechanism(const MechanismScenario& scenario,
                              const std::vector<double>& reports) {
  if (reports.size() != scenario.size()) {
    throw ValidationError("one report per agent required");
  }
  MechanismOutcome outcome;
  outcome.reports = reports;
  outcome.implemented = decide(reports, scenario.cost);

  std::vector<double> net_reports(reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    net_reports[i] = scenario.net(reports[i]);
  }
  outcome.transfers =
      transfers(net_reports, outcome.implemented, scenario.convention);

  outcome.revenue = 0.0;
  for (double t : outcome.transfers) {
    outcome.revenue += t;
  }

  outcome.per_agent_utility.assign(reports.size(), 0.0);
  if (outcome.implemented) {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      outcome.per_agent_utility[i] =
          scenario.net(scenario.valuations[i]) - outcome.transfers[i];
    }
  }
  return outcome;
}

double budgetReport(const MechanismScenario& scenario,
                    const std::vector<double>& reports) {
  return runMechanism(scenario, reports).revenue;
}

TruthfulnessVerdict truthfulnessCheck(const MechanismScenario& scenario,
                                      const std::vector<double>& report_grid,
                                      std::size_t evaluation_cap) {
  if (report_grid.empty()) {
    throw ValidationError("report grid must be non-empty");
  }
  std::vector<double> grid = report_grid;
  for (double value : grid) {
    if (!std::isfinite(value)) {
      throw ValidationError("report grid must be finite");
    }
  }
  std::sort(grid.begin(), grid.end());
  const std::size_t n = scenario.size();
  const std::size_t g = grid.size();

  double evaluations = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    evaluations *= static_cast<double>(g);
  }
  if (evaluations > static_cast<double>(evaluation_cap)) {
    throw BudgetError("truthfulness scan exceeds the evaluation budget");
  }

  const bool aligned = scenario.convention == TransferConvention::GrovesAligned;
  constexpr double kGainTolerance = 1e-9;

  // With transfers fixed by the opponents, agent i's realized utility only
  // depends on their own report through the implementation decision:
  //   u = [net own report + S >= 0] * (true net value -/+ S)
  // where S is the opponents' net report sum. One pass per opponent tuple
  // therefore covers every misreport cheaply.
  for (std::size_t agent = 0; agent < n; ++agent) {
    const double true_value = scenario.valuations[agent];
    const double true_net = scenario.net(true_value);

    std::vector<std::size_t> odometer(n - 1, 0);
    while (true) {
      double opponents_net = 0.0;
      for (std::size_t k = 0; k < odometer.size(); ++k) {
        opponents_net += scenario.net(grid[odometer[k]]);
      }
      const double settled = aligned ? true_net + opponents_net
                                     : true_net - opponents_net;
      const double truthful_utility =
          (true_net + opponents_net >= 0.0) ? settled : 0.0;

      for (std::size_t m = 0; m < g; ++m) {
        const double misreport = grid[m];
        const bool implemented =
            scenario.net(misreport) + opponents_net >= 0.0;
        const double mis_utility = implemented ? settled : 0.0;
        if (mis_utility - truthful_utility > kGainTolerance) {
          Counterexample ce;
          ce.agent = static_cast<int>(agent);
          ce.true_value = true_value;
          ce.misreport = misreport;
          ce.opponent_reports.reserve(odometer.size());
          for (std::size_t k = 0; k < odometer.size(); ++k) {
            ce.opponent_reports.push_back(grid[odometer[k]]);
          }
          ce.gain = mis_utility - truthful_utility;
          return TruthfulnessVerdict{false, ce};
        }
      }

      // lexicographic advance, leftmost opponent slowest
      std::size_t pos = odometer.size();
      while (pos > 0 && odometer[pos - 1] + 1 == g) {
        odometer[--pos] = 0;
      }
      if (pos == 0) {
        break;
      }
      ++odometer[pos - 1];
    }
  }
  return TruthfulnessVerdict{true, std::nullopt};
}

}  // namespace pubgoods
