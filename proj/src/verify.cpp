#include "pubgoods/verify.hpp"

#include <cmath>

#include "pubgoods/lindahl.hpp"

namespace pubgoods::verify {

namespace {

std::string num(double v) { return formatSig(v, 9); }

CheckResult pass(std::string name) { return CheckResult{std::move(name), true, ""}; }

CheckResult fail(std::string name, std::string detail) {
  return CheckResult{std::move(name), false, std::move(detail)};
}

}  // namespace

GridMax gridMaximize(const std::function<double(double)>& f, double lo,
                     double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) {
    throw ValidationError("grid needs lo <= hi and a positive step");
  }
  GridMax best{lo, f(lo)};
  const auto steps = static_cast<long long>(std::floor((hi - lo) / step));
  for (long long k = 1; k <= steps; ++k) {
    const double x = lo + static_cast<double>(k) * step;
    const double value = f(x);
    if (value > best.value) {
      best = GridMax{x, value};
    }
  }
  if (lo + static_cast<double>(steps) * step < hi) {
    const double value = f(hi);
    if (value > best.value) {
      best = GridMax{hi, value};
    }
  }
  return best;
}

DeviationCheck noProfitableDeviation(const std::vector<Agent>& agents,
                                     const ContributionProfile& profile,
                                     const Technology& tech, double step,
                                     double slack) {
  DeviationCheck result;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const double others = profile.public_total - profile.contributions[i];
    const double here = profile.utilities[i];
    const GridMax best = gridMaximize(
        [&](double x) {
          return utility(agents[i],
                         tech.public_coeff * (others + x),
                         tech.private_coeff * (agents[i].endowment - x));
        },
        0.0, agents[i].endowment, step);
    if (best.value - here > slack) {
      return DeviationCheck{false, static_cast<int>(i), best.arg,
                            best.value - here};
    }
  }
  return result;
}

double centralDifference(const std::function<double(double)>& f, double x,
                         double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

namespace {

void verifyContribution(const ContributionPayload& payload, double grid_step,
                        std::vector<CheckResult>& results) {
  const ContributionProfile nash =
      nashEquilibrium(payload.agents, payload.technology);
  const DeviationCheck deviation = noProfitableDeviation(
      payload.agents, nash, payload.technology, grid_step, 1e-9);
  results.push_back(
      deviation.ok
          ? pass("nash: no profitable unilateral deviation on grid")
          : fail("nash: no profitable unilateral deviation on grid",
                 "agent " + std::to_string(deviation.agent + 1) + " gains " +
                     num(deviation.gain) + " at x=" + num(deviation.deviation)));

  bool identical = true;
  for (const Agent& agent : payload.agents) {
    identical = identical && agent.endowment == payload.agents[0].endowment &&
                agent.public_weight == payload.agents[0].public_weight;
  }
  if (identical) {
    const int n = static_cast<int>(payload.agents.size());
    const ContributionProfile efficient =
        efficientSymmetric(n, payload.agents[0], payload.technology);
    // oracle: grid-search the symmetric allocation directly
    const Agent& agent = payload.agents[0];
    const GridMax best = gridMaximize(
        [&](double x) {
          return utility(agent,
                         payload.technology.public_coeff * (n * x),
                         payload.technology.private_coeff *
                             (agent.endowment - x));
        },
        0.0, agent.endowment, grid_step);
    const bool arg_ok =
        std::abs(best.arg - efficient.contributions[0]) <= grid_step;
    const bool value_ok = best.value <= efficient.utilities[0] + 1e-9;
    results.push_back(
        arg_ok && value_ok
            ? pass("efficient: symmetric grid search agrees")
            : fail("efficient: symmetric grid search agrees",
                   "grid argmax " + num(best.arg) + " value " +
                       num(best.value) + " vs closed form " +
                       num(efficient.contributions[0]) + " value " +
                       num(efficient.utilities[0])));
    const double residual =
        samuelsonResidual(payload.agents, efficient, payload.technology);
    results.push_back(std::abs(residual) <= 1e-8
                          ? pass("efficient: summed MRS equals RPT")
                          : fail("efficient: summed MRS equals RPT",
                                 "residual " + num(residual)));
  }

  if (payload.reserved_utilities) {
    const ContributionProfile planner = paretoEfficient(
        payload.agents, payload.technology, *payload.reserved_utilities);
    const double residual =
        samuelsonResidual(payload.agents, planner, payload.technology);
    results.push_back(std::abs(residual) <= 1e-6
                          ? pass("planner: summed MRS equals RPT")
                          : fail("planner: summed MRS equals RPT",
                                 "residual " + num(residual)));
  }
}

void verifyLindahl(const LindahlPayload& payload, double grid_step,
                   std::vector<CheckResult>& results) {
  const LindahlSolution solution =
      lindahlEquilibrium(payload.agents, payload.technology);
  double share_sum = 0.0;
  for (double share : solution.shares) {
    share_sum += share;
  }
  results.push_back(std::abs(share_sum - 1.0) <= 1e-10
                        ? pass("lindahl: shares sum to one")
                        : fail("lindahl: shares sum to one",
                               "sum " + num(share_sum)));

  bool demands_agree = true;
  for (double demand : solution.per_agent_demand) {
    demands_agree =
        demands_agree && std::abs(demand - solution.quantity) <= 1e-8;
  }
  results.push_back(demands_agree
                        ? pass("lindahl: all agents demand the quantity")
                        : fail("lindahl: all agents demand the quantity", ""));

  // oracle: each agent's demand maximizes utility at their personalized price
  const double rpt = payload.technology.rpt();
  bool demand_optimal = true;
  std::string detail;
  for (std::size_t i = 0; i < payload.agents.size(); ++i) {
    const Agent& agent = payload.agents[i];
    const double share = solution.shares[i];
    const double x_cap = agent.endowment / (share * rpt);
    const GridMax best = gridMaximize(
        [&](double x) {
          return utility(agent, x, agent.endowment - share * rpt * x);
        },
        0.0, x_cap, grid_step * x_cap / agent.endowment);
    if (std::abs(best.arg - solution.per_agent_demand[i]) >
        grid_step * x_cap / agent.endowment + 1e-9) {
      demand_optimal = false;
      detail = "agent " + std::to_string(i + 1) + " grid argmax " +
               num(best.arg) + " vs demand " +
               num(solution.per_agent_demand[i]);
      break;
    }
  }
  results.push_back(demand_optimal
                        ? pass("lindahl: demands maximize utility on grid")
                        : fail("lindahl: demands maximize utility on grid",
                               detail));
}

void verifyMechanism(const MechanismPayload& payload,
                     std::vector<CheckResult>& results) {
  const MechanismScenario& mech = payload.scenario;
  const std::vector<double> reports =
      payload.reports ? *payload.reports : mech.valuations;
  const MechanismOutcome outcome = runMechanism(mech, reports);

  if (outcome.implemented &&
      mech.convention == TransferConvention::PaperLiteral) {
    double net_sum = 0.0;
    for (double r : reports) {
      net_sum += mech.net(r);
    }
    const double expected =
        static_cast<double>(mech.size() - 1) * net_sum;
    results.push_back(
        outcome.revenue == expected
            ? pass("mechanism: revenue identity (n-1) x summed net reports")
            : fail("mechanism: revenue identity (n-1) x summed net reports",
                   num(outcome.revenue) + " vs " + num(expected)));
  }

  double true_net_sum = 0.0;
  for (double v : mech.valuations) {
    true_net_sum += mech.net(v);
  }
  const bool efficient_decision =
      decide(mech.valuations, mech.cost) == (true_net_sum >= 0.0);
  results.push_back(efficient_decision
                        ? pass("mechanism: decision matches summed true values")
                        : fail("mechanism: decision matches summed true values",
                               ""));

  try {
    const TruthfulnessVerdict verdict =
        truthfulnessCheck(mech, payload.truth_grid.values());
    const bool expect_dominant =
        mech.convention == TransferConvention::GrovesAligned;
    results.push_back(
        verdict.dominant == expect_dominant
            ? pass(expect_dominant
                       ? "mechanism: truth-telling dominant on grid"
                       : "mechanism: literal transfers admit a counterexample")
            : fail(expect_dominant
                       ? "mechanism: truth-telling dominant on grid"
                       : "mechanism: literal transfers admit a counterexample",
                   verdict.dominant ? "no counterexample found"
                                    : "counterexample found"));
  } catch (const BudgetError&) {
    results.push_back(pass("mechanism: truthfulness scan skipped (grid too large)"));
  }
}

void verifyVote(const VotePayload& payload,
                std::vector<CheckResult>& results) {
  const PreferenceProfile& profile = payload.profile;
  const MajorityMatrix matrix = pairwiseMatrix(profile);

  // recount every pair directly from the rankings
  bool counts_ok = true;
  for (int a = 0; a < profile.alternativeCount() && counts_ok; ++a) {
    for (int b = 0; b < profile.alternativeCount() && counts_ok; ++b) {
      if (a == b) {
        continue;
      }
      int count = 0;
      for (int v = 0; v < profile.voterCount(); ++v) {
        if (profile.rankOf(v, a) < profile.rankOf(v, b)) {
          ++count;
        }
      }
      counts_ok = counts_ok && count == matrix.wins[a][b] &&
                  matrix.wins[a][b] + matrix.wins[b][a] == matrix.voters;
    }
  }
  results.push_back(counts_ok ? pass("vote: pairwise recount agrees")
                              : fail("vote: pairwise recount agrees", ""));

  const SinglePeakedness peaks = isSinglePeaked(profile);
  if (peaks.overall && profile.voterCount() % 2 == 1) {
    const std::optional<int> winner = condorcetWinner(matrix);
    const MedianVoterResult median = medianVoterOutcome(profile);
    const bool agrees = winner && *winner == median.alternative;
    results.push_back(
        agrees ? pass("vote: Condorcet winner equals the median peak")
               : fail("vote: Condorcet winner equals the median peak",
                      winner ? profile.alternatives[*winner] + " vs " +
                                   profile.alternatives[median.alternative]
                             : "no winner"));
  }
}

void verifyFiscal(const FiscalPayload& payload, double grid_step,
                  std::vector<CheckResult>& results) {
  const FiscalModel& model = payload.model;
  const double base = model.taxBase();

  // oracle: numerically maximize a voter's objective over spending
  bool preferred_ok = true;
  std::string detail;
  for (double income : model.incomes) {
    const double closed = preferredSpending(model, income);
    const GridMax best = gridMaximize(
        [&](double g) {
          return income - income / base * g + model.benefit(g);
        },
        grid_step, base, grid_step);
    if (std::abs(best.arg - closed) > grid_step + 1e-9 && closed <= base) {
      preferred_ok = false;
      detail = "income " + num(income) + ": grid argmax " + num(best.arg) +
               " vs closed form " + num(closed);
      break;
    }
  }
  results.push_back(preferred_ok
                        ? pass("fiscal: preferred spending maximizes utility")
                        : fail("fiscal: preferred spending maximizes utility",
                               detail));

  if (model.incomes.size() % 2 == 1) {
    const FiscalEquilibrium eq = equilibriumSpending(model);
    results.push_back(eq.spending == eq.tax_rate * base
                          ? pass("fiscal: budget identity g = t * base")
                          : fail("fiscal: budget identity g = t * base",
                                 num(eq.spending) + " vs " +
                                     num(eq.tax_rate * base)));
    const double fd = centralDifference(
        [&](double g) { return model.benefit(g); }, eq.spending,
        1e-5 * std::max(1.0, eq.spending));
    const bool derivative_ok =
        std::abs(fd - eq.marginal_benefit) <=
        1e-6 * std::max(1.0, std::abs(eq.marginal_benefit));
    results.push_back(derivative_ok
                          ? pass("fiscal: marginal benefit matches finite difference")
                          : fail("fiscal: marginal benefit matches finite difference",
                                 num(fd) + " vs " + num(eq.marginal_benefit)));
  }
}

}  // namespace

std::vector<CheckResult> verifyScenario(const Scenario& scenario,
                                        double grid_step) {
  if (!(grid_step > 0.0)) {
    throw ValidationError("grid step must be positive");
  }
  std::vector<CheckResult> results;
  std::visit(
      [&](const auto& payload) {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, ContributionPayload>) {
          verifyContribution(payload, grid_step, results);
        } else if constexpr (std::is_same_v<T, LindahlPayload>) {
          verifyLindahl(payload, grid_step, results);
        } else if constexpr (std::is_same_v<T, MechanismPayload>) {
          verifyMechanism(payload, results);
        } else if constexpr (std::is_same_v<T, VotePayload>) {
          verifyVote(payload, results);
        } else {
          verifyFiscal(payload, grid_step, results);
        }
      },
      scenario.payload);
  return results;
}

}  // namespace pubgoods::verify
