#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pubgoods/errors.hpp"

namespace pubgoods {

// Two transfer sign conventions are shipped side by side. PaperLiteral
// charges t_i = sum_{j != i} w_j on net reports; GrovesAligned charges the
// negation, which makes each agent's realized utility track the decision
// rule and is the variant under which truth-telling is dominant. The
// truthfulness checker makes the difference observable.
enum class TransferConvention : std::uint8_t { PaperLiteral, GrovesAligned };

// A public project decision: true per-agent net values (may be negative),
// a non-negative cost shared equally, and the transfer convention.
struct MechanismScenario {
  std::vector<double> valuations;
  double cost = 0.0;
  TransferConvention convention = TransferConvention::GrovesAligned;

  MechanismScenario(std::vector<double> valuations_, double cost_,
                    TransferConvention convention_);

  std::size_t size() const { return valuations.size(); }
  // Net value w_i = v_i - C/n of agent i's report or valuation.
  double net(double value) const {
    return value - cost / static_cast<double>(valuations.size());
  }
};

struct MechanismOutcome {
  bool implemented = false;
  std::vector<double> reports;
  std::vector<double> transfers;   // positive = tax paid
  double revenue = 0.0;            // sum of transfers
  std::vector<double> per_agent_utility;
};

// Implement iff the net reports sum to >= 0 (equivalently, gross reports
// cover the cost). Ties implement.
bool decide(const std::vector<double>& reports, double cost);

// Transfers given net reports. All zero when the project is rejected.
std::vector<double> transfers(const std::vector<double>& net_reports,
                              bool implemented,
                              TransferConvention convention);

// Full run: decision, transfers, revenue and realized per-agent utilities
// (computed from the *true* valuations in the scenario, not the reports).
MechanismOutcome runMechanism(const MechanismScenario& scenario,
                              const std::vector<double>& reports);

double budgetReport(const MechanismScenario& scenario,
                    const std::vector<double>& reports);

struct Counterexample {
  int agent = -1;
  double true_value = 0.0;
  double misreport = 0.0;
  std::vector<double> opponent_reports;
  double gain = 0.0;
};

struct TruthfulnessVerdict {
  bool dominant = true;
  std::optional<Counterexample> counterexample;
};

// Exhaustive dominant-strategy check: for every agent, every tuple of
// opponent reports from the grid and every own misreport from the grid,
// truthful reporting must do at least as well. Scans agents in index
// order, opponent tuples lexicographically, misreports ascending, and
// returns the first violation found. Scans larger than `evaluation_cap`
// raise BudgetError.
TruthfulnessVerdict truthfulnessCheck(const MechanismScenario& scenario,
                                      const std::vector<double>& report_grid,
                                      std::size_t evaluation_cap = 10'000'000);

}  // namespace pubgoods
