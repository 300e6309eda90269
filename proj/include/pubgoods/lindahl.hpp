#pragma once

#include <vector>

#include "pubgoods/economy.hpp"

namespace pubgoods {

// Personalized cost shares summing to one, the common public-good quantity,
// and each agent's demand at their share (all equal at equilibrium).
struct LindahlSolution {
  std::vector<double> shares;
  double quantity = 0.0;
  std::vector<double> per_agent_demand;
};

// Quantity the agent demands when quoted `share` of the public good's unit
// cost: a*m / (share * RPT). Shares outside (0, 1] are DomainErrors —
// demand is unbounded as the share approaches zero.
double lindahlDemand(const Agent& agent, double share, const Technology& tech);

// Shares alpha_i = a_i*m_i / (x * RPT) at the quantity x = sum_i a_i*m_i / RPT
// where every agent demands the same amount and the shares sum to one.
LindahlSolution lindahlEquilibrium(const std::vector<Agent>& agents,
                                   const Technology& tech);

}  // namespace pubgoods
