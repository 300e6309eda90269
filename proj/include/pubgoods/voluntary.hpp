#pragma once

#include <vector>

#include "pubgoods/economy.hpp"

namespace pubgoods {

// Per-agent contributions (in hours) to the public good, with the derived
// totals, private consumptions and utilities. Utilities are evaluated on
// the outputs the technology produces from those hours.
struct ContributionProfile {
  std::vector<double> contributions;
  double public_total = 0.0;
  std::vector<double> private_consumptions;
  std::vector<double> utilities;

  // Game profile: every contribution must lie in [0, endowment].
  static ContributionProfile build(const std::vector<Agent>& agents,
                                   std::vector<double> contributions,
                                   const Technology& tech = {});

  // Planner allocation: private consumption may exceed own endowment via
  // transfers, so a contribution can be negative. Consumption itself and
  // the public total must still be non-negative.
  static ContributionProfile planner(const std::vector<Agent>& agents,
                                     std::vector<double> contributions,
                                     const Technology& tech = {});

  std::size_t size() const { return contributions.size(); }
};

// Nash and efficient profiles side by side with the inefficiency metrics
// for the symmetric game.
struct EquilibriumReport {
  ContributionProfile nash;
  ContributionProfile efficient;
  double utility_loss_per_agent = 0.0;
  double utility_loss_percent = 0.0;
  double samuelson_gap_at_nash = 0.0;
};

struct NashOptions {
  bool use_closed_form = true;  // symmetric fast path
  int max_iterations = 10000;
};

// Utility-maximizing own contribution against the others' total,
// max(0, a*m - (1-a)*others_total). Never exceeds the endowment.
double bestResponse(const Agent& agent, double others_total);

// Mutual-best-response profile of the voluntary contribution game.
// Identical agents take the closed-form symmetric solution; otherwise the
// aggregate is solved by bisection on the clamped consistency map and the
// active set refined to a closed form, then polished by damped best-response
// iteration until the largest contribution change is below 1e-10.
ContributionProfile nashEquilibrium(const std::vector<Agent>& agents,
                                    const Technology& tech = {},
                                    const NashOptions& options = {});

// Per-agent equilibrium contribution a*m / (1 + (1-a)(n-1)) of the game
// with n copies of `agent`. Decreasing in n, with limit 0.
double symmetricNashClosedForm(int n, const Agent& agent);

// Symmetric allocation satisfying the efficiency condition: each of the n
// copies of `agent` contributes a*m hours, independent of n.
ContributionProfile efficientSymmetric(int n, const Agent& agent,
                                       const Technology& tech = {});

// Planner optimum: maximizes agent 0's utility subject to agents 1..n-1
// reaching `reserved_utilities` and the pooled labor constraint. Private
// output may be transferred across agents. InfeasibilityError when the
// reservations cannot all be met.
ContributionProfile paretoEfficient(const std::vector<Agent>& agents,
                                    const Technology& tech,
                                    const std::vector<double>& reserved_utilities);

// Nash vs. efficient comparison for identical agents: per-agent utility
// loss, percent loss, and the Samuelson gap at the Nash allocation.
EquilibriumReport inefficiencyReport(const std::vector<Agent>& agents,
                                     const Technology& tech = {});

}  // namespace pubgoods
