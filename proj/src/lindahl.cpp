#include "pubgoods/lindahl.hpp"

#include <cmath>

namespace pubgoods {

double lindahlDemand(const Agent& agent, double share, const Technology& tech) {
  if (!std::isfinite(share) || share <= 0.0 || share > 1.0) {
    throw DomainError("cost share must lie in (0, 1]");
  }
  return agent.public_weight * agent.endowment / (share * tech.rpt());
}

LindahlSolution lindahlEquilibrium(const std::vector<Agent>& agents,
                                   const Technology& tech) {
  if (agents.empty()) {
    throw ValidationError("at least one agent required");
  }
  double weighted_endowment = 0.0;
  for (const Agent& agent : agents) {
    weighted_endowment += agent.public_weight * agent.endowment;
  }
  LindahlSolution solution;
  solution.quantity = weighted_endowment / tech.rpt();
  solution.shares.resize(agents.size());
  solution.per_agent_demand.resize(agents.size());
  for (std::size_t i = 0; i < agents.size(); ++i) {
    solution.shares[i] = agents[i].public_weight * agents[i].endowment /
                         (solution.quantity * tech.rpt());
    solution.per_agent_demand[i] =
        lindahlDemand(agents[i], solution.shares[i], tech);
  }
  return solution;
}

}  // namespace pubgoods
