#include "pubgoods/voluntary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pubgoods {

namespace {

ContributionProfile derive(const std::vector<Agent>& agents,
                           std::vector<double> contributions,
                           const Technology& tech) {
  ContributionProfile profile;
  profile.contributions = std::move(contributions);
  profile.public_total = std::accumulate(profile.contributions.begin(),
                                         profile.contributions.end(), 0.0);
  profile.private_consumptions.resize(agents.size());
  profile.utilities.resize(agents.size());
  const double public_output = tech.public_coeff * profile.public_total;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    profile.private_consumptions[i] =
        agents[i].endowment - profile.contributions[i];
    profile.utilities[i] =
        utility(agents[i], public_output,
                tech.private_coeff * profile.private_consumptions[i]);
  }
  return profile;
}

void requireMatchingSizes(const std::vector<Agent>& agents,
                          const std::vector<double>& contributions) {
  if (agents.empty()) {
    throw ValidationError("at least one agent required");
  }
  if (agents.size() != contributions.size()) {
    throw ValidationError("one contribution per agent required");
  }
}

bool allIdentical(const std::vector<Agent>& agents) {
  for (const Agent& a : agents) {
    if (a.endowment != agents[0].endowment ||
        a.public_weight != agents[0].public_weight) {
      return false;
    }
  }
  return true;
}

// Contribution consistent with agent i best-responding inside a profile
// whose total is X: x_i = clamp(m_i - ((1-a_i)/a_i) X, 0, m_i).
double consistentContribution(const Agent& agent, double total) {
  const double slope = (1.0 - agent.public_weight) / agent.public_weight;
  return std::clamp(agent.endowment - slope * total, 0.0, agent.endowment);
}

}  // namespace

ContributionProfile ContributionProfile::build(
    const std::vector<Agent>& agents, std::vector<double> contributions,
    const Technology& tech) {
  requireMatchingSizes(agents, contributions);
  for (std::size_t i = 0; i < agents.size(); ++i) {
    if (!std::isfinite(contributions[i]) || contributions[i] < 0.0 ||
        contributions[i] > agents[i].endowment) {
      throw ValidationError("contribution outside [0, endowment]");
    }
  }
  return derive(agents, std::move(contributions), tech);
}

ContributionProfile ContributionProfile::planner(
    const std::vector<Agent>& agents, std::vector<double> contributions,
    const Technology& tech) {
  requireMatchingSizes(agents, contributions);
  double total = 0.0;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    if (!std::isfinite(contributions[i])) {
      throw ValidationError("contribution must be finite");
    }
    // A transfer recipient can sit above their endowment, but nobody can
    // consume a negative amount.
    if (agents[i].endowment - contributions[i] < -1e-9) {
      throw ValidationError("private consumption cannot be negative");
    }
    contributions[i] = std::min(contributions[i], agents[i].endowment);
    total += contributions[i];
  }
  if (total < -1e-9) {
    throw ValidationError("public total cannot be negative");
  }
  return derive(agents, std::move(contributions), tech);
}

double bestResponse(const Agent& agent, double others_total) {
  if (!std::isfinite(others_total) || others_total < 0.0) {
    throw DomainError("others' total must be non-negative");
  }
  const double a = agent.public_weight;
  const double raw = a * agent.endowment - (1.0 - a) * others_total;
  return std::clamp(raw, 0.0, agent.endowment);
}

double symmetricNashClosedForm(int n, const Agent& agent) {
  if (n < 1) {
    throw ValidationError("group size must be at least 1");
  }
  const double a = agent.public_weight;
  return a * agent.endowment / (1.0 + (1.0 - a) * (n - 1));
}

ContributionProfile nashEquilibrium(const std::vector<Agent>& agents,
                                    const Technology& tech,
                                    const NashOptions& options) {
  if (agents.empty()) {
    throw ValidationError("at least one agent required");
  }
  const int n = static_cast<int>(agents.size());

  if (options.use_closed_form && allIdentical(agents)) {
    const double x = symmetricNashClosedForm(n, agents[0]);
    return ContributionProfile::build(
        agents, std::vector<double>(agents.size(), x), tech);
  }

  int budget = std::max(options.max_iterations, 0);
  const double endowment_sum =
      std::accumulate(agents.begin(), agents.end(), 0.0,
                      [](double s, const Agent& a) { return s + a.endowment; });

  auto totalAt = [&](double total) {
    double sum = 0.0;
    for (const Agent& agent : agents) {
      sum += consistentContribution(agent, total);
    }
    return sum;
  };

  // The aggregate map X -> sum_i x_i(X) is continuous and non-increasing,
  // so its unique crossing with the identity brackets between 0 and the
  // pooled endowment.
  double lo = 0.0;
  double hi = endowment_sum;
  const double tol = 1e-13 * std::max(1.0, endowment_sum);
  auto currentProfile = [&]() {
    const double mid = 0.5 * (lo + hi);
    std::vector<double> xs(agents.size());
    for (std::size_t i = 0; i < agents.size(); ++i) {
      xs[i] = consistentContribution(agents[i], mid);
    }
    return xs;
  };
  while (hi - lo > tol) {
    if (budget-- <= 0) {
      throw ConvergenceError("aggregate bisection exceeded iteration cap",
                             currentProfile());
    }
    const double mid = 0.5 * (lo + hi);
    (totalAt(mid) - mid > 0.0 ? lo : hi) = mid;
  }
  double total = 0.5 * (lo + hi);

  // Pin the total to machine precision with the closed form over the
  // active set, re-deriving the set until it stabilizes.
  for (int pass = 0; pass <= n + 1; ++pass) {
    double endowments = 0.0;
    double slopes = 0.0;
    for (const Agent& agent : agents) {
      const double slope = (1.0 - agent.public_weight) / agent.public_weight;
      if (agent.endowment - slope * total > 0.0) {
        endowments += agent.endowment;
        slopes += slope;
      }
    }
    const double refined = endowments / (1.0 + slopes);
    if (refined == total) {
      break;
    }
    total = refined;
  }

  std::vector<double> xs(agents.size());
  for (std::size_t i = 0; i < agents.size(); ++i) {
    xs[i] = consistentContribution(agents[i], total);
  }

  // Damped simultaneous best-response polish; from the active-set solution
  // this settles in one or two sweeps and doubles as verification.
  double worst_free_riding = 0.0;
  for (const Agent& agent : agents) {
    worst_free_riding = std::max(worst_free_riding, 1.0 - agent.public_weight);
  }
  const double damping = (n * worst_free_riding >= 1.0) ? 0.5 : 1.0;
  while (true) {
    if (budget-- <= 0) {
      throw ConvergenceError("best-response iteration exceeded iteration cap",
                             xs);
    }
    const double sum = std::accumulate(xs.begin(), xs.end(), 0.0);
    double max_change = 0.0;
    std::vector<double> next(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double reply = bestResponse(agents[i], std::max(0.0, sum - xs[i]));
      next[i] = xs[i] + damping * (reply - xs[i]);
      max_change = std::max(max_change, std::abs(next[i] - xs[i]));
    }
    xs = std::move(next);
    if (max_change < 1e-10) {
      break;
    }
  }

  return ContributionProfile::build(agents, std::move(xs), tech);
}

ContributionProfile efficientSymmetric(int n, const Agent& agent,
                                       const Technology& tech) {
  if (n < 1) {
    throw ValidationError("group size must be at least 1");
  }
  // Summed willingness to pay equals the transformation rate when each of
  // the n agents contributes a*m hours, independent of n.
  const double x = agent.public_weight * agent.endowment;
  return ContributionProfile::build(std::vector<Agent>(n, agent),
                                    std::vector<double>(n, x), tech);
}

ContributionProfile paretoEfficient(
    const std::vector<Agent>& agents, const Technology& tech,
    const std::vector<double>& reserved_utilities) {
  if (agents.empty()) {
    throw ValidationError("at least one agent required");
  }
  if (reserved_utilities.size() + 1 != agents.size()) {
    throw ValidationError(
        "one reserved utility per agent other than the first required");
  }
  for (double u : reserved_utilities) {
    if (!std::isfinite(u) || u < 0.0) {
      throw ValidationError("reserved utilities must be non-negative");
    }
  }

  const double pooled_hours =
      std::accumulate(agents.begin(), agents.end(), 0.0,
                      [](double s, const Agent& a) { return s + a.endowment; });
  const double kf = tech.public_coeff;
  const double kg = tech.private_coeff;

  // Private output agent j needs to hit its reservation at public output x.
  auto reservedOutput = [&](std::size_t j, double public_output) {
    const double target = reserved_utilities[j - 1];
    if (target == 0.0) {
      return 0.0;
    }
    const double a = agents[j].public_weight;
    return std::pow(target * std::pow(public_output, -a), 1.0 / (1.0 - a));
  };

  // Hours left for the distinguished agent's private output.
  auto slackHours = [&](double public_output) {
    double hours = pooled_hours - public_output / kf;
    for (std::size_t j = 1; j < agents.size(); ++j) {
      hours -= reservedOutput(j, public_output) / kg;
    }
    return hours;
  };

  auto goldenMaximize = [](const std::function<double(double)>& f, double a,
                           double b) {
    constexpr double kInvPhi = 0.6180339887498949;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < 300 && (b - a) > 1e-14 * std::max(1.0, b); ++it) {
      if (fc > fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - kInvPhi * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + kInvPhi * (b - a);
        fd = f(d);
      }
    }
    return 0.5 * (a + b);
  };

  const double x_max = kf * pooled_hours;
  const double x_eps = 1e-12 * x_max;

  // Feasible public outputs form an interval because the slack is concave.
  const double x_peak = goldenMaximize(slackHours, x_eps, x_max - x_eps);
  if (slackHours(x_peak) < -1e-9) {
    throw InfeasibilityError("reserved utilities exceed what the economy can produce");
  }
  auto feasibleEdge = [&](double inside, double outside) {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (inside + outside);
      (slackHours(mid) >= 0.0 ? inside : outside) = mid;
    }
    return inside;
  };
  const double x_lo = feasibleEdge(x_peak, x_eps);
  const double x_hi = feasibleEdge(x_peak, x_max - x_eps);

  auto objective = [&](double public_output) {
    const double slack = slackHours(public_output);
    if (slack < 0.0) {
      return -1.0;
    }
    return utility(agents[0], public_output, kg * slack);
  };

  double x_star = goldenMaximize(objective, x_lo, x_hi);

  // At an interior optimum the summed MRS equals the transformation rate;
  // the residual crosses zero there, so a sign-changing bracket around the
  // golden-section argument sharpens it to machine precision.
  auto residualAt = [&](double public_output) {
    std::vector<double> private_outputs(agents.size());
    private_outputs[0] = kg * std::max(0.0, slackHours(public_output));
    for (std::size_t j = 1; j < agents.size(); ++j) {
      private_outputs[j] = reservedOutput(j, public_output);
    }
    return samuelsonResidualAt(agents, public_output, private_outputs, tech);
  };
  {
    double lo = std::max(x_lo, x_star * (1.0 - 1e-3));
    double hi = std::min(x_hi, x_star * (1.0 + 1e-3));
    if (lo < hi && residualAt(lo) > 0.0 && residualAt(hi) < 0.0) {
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (residualAt(mid) > 0.0 ? lo : hi) = mid;
      }
      x_star = 0.5 * (lo + hi);
    }
  }

  std::vector<double> contributions(agents.size());
  const double slack = std::max(0.0, slackHours(x_star));
  contributions[0] = agents[0].endowment - slack;
  for (std::size_t j = 1; j < agents.size(); ++j) {
    contributions[j] =
        agents[j].endowment - reservedOutput(j, x_star) / kg;
  }
  return ContributionProfile::planner(agents, std::move(contributions), tech);
}

EquilibriumReport inefficiencyReport(const std::vector<Agent>& agents,
                                     const Technology& tech) {
  if (agents.empty()) {
    throw ValidationError("at least one agent required");
  }
  if (!allIdentical(agents)) {
    throw PreconditionError(
        "per-agent loss percentages need identical agents");
  }
  EquilibriumReport report;
  report.nash = nashEquilibrium(agents, tech);
  report.efficient =
      efficientSymmetric(static_cast<int>(agents.size()), agents[0], tech);
  report.utility_loss_per_agent =
      report.efficient.utilities[0] - report.nash.utilities[0];
  report.utility_loss_percent =
      100.0 * report.utility_loss_per_agent / report.efficient.utilities[0];
  report.samuelson_gap_at_nash = samuelsonResidual(agents, report.nash, tech);
  return report;
}

}  // namespace pubgoods
