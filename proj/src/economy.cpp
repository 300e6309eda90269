#include "pubgoods/economy.hpp"

#include <algorithm>
#include <cmath>

#include "pubgoods/voluntary.hpp"

namespace pubgoods {

namespace {

void requireFinite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw ValidationError(std::string(what) + " must be finite");
  }
}

}  // namespace

Agent::Agent(double endowment_, double public_weight_)
    : endowment(endowment_), public_weight(public_weight_) {
  requireFinite(endowment, "endowment");
  requireFinite(public_weight, "publicWeight");
  if (endowment <= 0.0) {
    throw ValidationError("endowment must be positive");
  }
  if (public_weight <= 0.0 || public_weight >= 1.0) {
    throw ValidationError("publicWeight must lie strictly between 0 and 1");
  }
}

Technology::Technology(double public_coeff_, double private_coeff_)
    : public_coeff(public_coeff_), private_coeff(private_coeff_) {
  requireFinite(public_coeff, "publicCoeff");
  requireFinite(private_coeff, "privateCoeff");
  if (public_coeff <= 0.0 || private_coeff <= 0.0) {
    throw ValidationError("technology coefficients must be positive");
  }
}

DemandCurve::DemandCurve(std::vector<std::pair<double, double>> points_)
    : points(std::move(points_)) {
  if (points.empty()) {
    throw ValidationError("demand curve needs at least one point");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    requireFinite(points[i].first, "demand quantity");
    requireFinite(points[i].second, "demand price");
    if (points[i].second < 0.0) {
      throw ValidationError("demand prices must be non-negative");
    }
    if (i > 0) {
      if (points[i].first <= points[i - 1].first) {
        throw ValidationError("demand quantities must be strictly increasing");
      }
      if (points[i].second > points[i - 1].second) {
        throw ValidationError("demand prices must be non-increasing");
      }
    }
  }
}

double DemandCurve::priceAt(double quantity) const {
  if (!std::isfinite(quantity) || quantity < minQuantity() ||
      quantity > maxQuantity()) {
    throw RangeError("quantity outside the tabulated demand range");
  }
  auto upper = std::lower_bound(
      points.begin(), points.end(), quantity,
      [](const std::pair<double, double>& p, double q) { return p.first < q; });
  if (upper->first == quantity) {
    return upper->second;
  }
  auto lower = upper - 1;
  const double t = (quantity - lower->first) / (upper->first - lower->first);
  return lower->second + t * (upper->second - lower->second);
}

double utility(const Agent& agent, double public_total, double private_own) {
  if (!(public_total >= 0.0) || !(private_own >= 0.0)) {
    throw DomainError("utility arguments must be non-negative");
  }
  if (public_total == 0.0 || private_own == 0.0) {
    return 0.0;
  }
  return std::pow(public_total, agent.public_weight) *
         std::pow(private_own, 1.0 - agent.public_weight);
}

double mrs(const Agent& agent, double public_total, double private_own) {
  if (public_total == 0.0) {
    throw SingularityError("MRS is unbounded at zero public quantity");
  }
  if (!(public_total > 0.0) || !(private_own > 0.0)) {
    throw DomainError("MRS requires strictly positive quantities");
  }
  return agent.mrsRatio() * (private_own / public_total);
}

double samuelsonResidualAt(const std::vector<Agent>& agents,
                           double public_output,
                           const std::vector<double>& private_outputs,
                           const Technology& tech) {
  if (agents.size() != private_outputs.size()) {
    throw ValidationError("one private quantity per agent required");
  }
  if (public_output == 0.0) {
    throw SingularityError("Samuelson residual undefined at zero public output");
  }
  if (!(public_output > 0.0)) {
    throw DomainError("public output must be positive");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    if (!(private_outputs[i] >= 0.0)) {
      throw DomainError("private quantities must be non-negative");
    }
    // Corner consumptions contribute zero willingness to pay.
    sum += agents[i].mrsRatio() * (private_outputs[i] / public_output);
  }
  return sum - tech.rpt();
}

double samuelsonResidual(const std::vector<Agent>& agents,
                         const ContributionProfile& profile,
                         const Technology& tech) {
  if (agents.size() != profile.size()) {
    throw ValidationError("profile size must match agent count");
  }
  std::vector<double> private_outputs(agents.size());
  for (std::size_t i = 0; i < agents.size(); ++i) {
    private_outputs[i] = tech.private_coeff * profile.private_consumptions[i];
  }
  return samuelsonResidualAt(agents, tech.public_coeff * profile.public_total,
                             private_outputs, tech);
}

double verticalSumDemand(const std::vector<DemandCurve>& curves,
                         double quantity) {
  if (curves.empty()) {
    throw ValidationError("vertical summation needs at least one curve");
  }
  if (!(quantity > 0.0)) {
    throw DomainError("quantity must be positive");
  }
  double total = 0.0;
  for (const DemandCurve& curve : curves) {
    total += curve.priceAt(quantity);
  }
  return total;
}

}  // namespace pubgoods
