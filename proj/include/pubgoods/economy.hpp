#pragma once

#include <utility>
#include <vector>

#include "pubgoods/errors.hpp"

namespace pubgoods {

struct ContributionProfile;  // voluntary.hpp

// A participant: labor/income endowment m > 0 and Cobb-Douglas weight
// a in (0,1) on the public good, so utility is x^a * y^(1-a).
struct Agent {
  double endowment;
  double public_weight;

  Agent(double endowment_, double public_weight_);

  // a/(1-a), the constant in the marginal rate of substitution.
  double mrsRatio() const { return public_weight / (1.0 - public_weight); }
};

// Linear production: one unit of labor yields public_coeff units of the
// public good or private_coeff units of the private good. The rate of
// product transformation (marginal cost of the public good in private-good
// units) is then constant.
struct Technology {
  double public_coeff = 1.0;
  double private_coeff = 1.0;

  Technology() = default;
  Technology(double public_coeff_, double private_coeff_);

  double rpt() const { return private_coeff / public_coeff; }
};

// Tabulated inverse demand: (quantity, price) points with strictly
// increasing quantities and non-increasing, non-negative prices. Queries
// between points interpolate linearly.
struct DemandCurve {
  std::vector<std::pair<double, double>> points;

  explicit DemandCurve(std::vector<std::pair<double, double>> points_);

  double minQuantity() const { return points.front().first; }
  double maxQuantity() const { return points.back().first; }

  // Price at `quantity`; RangeError outside the tabulated range.
  double priceAt(double quantity) const;
};

// Cobb-Douglas utility x^a * y^(1-a). Zero when either argument is zero,
// so corner allocations evaluate cleanly; negative input is a DomainError.
double utility(const Agent& agent, double public_total, double private_own);

// Marginal rate of substitution (a/(1-a)) * (y/x) at a strictly interior
// point. Zero public quantity is a SingularityError (the MRS is unbounded
// there), other nonpositive inputs are DomainErrors.
double mrs(const Agent& agent, double public_total, double private_own);

// Sum of the agents' MRS at the profile's allocation minus the rate of
// product transformation. Zero at allocations satisfying the efficiency
// condition; positive means underprovision. Quantities are the outputs the
// technology yields from the profile's hours.
double samuelsonResidual(const std::vector<Agent>& agents,
                         const ContributionProfile& profile,
                         const Technology& tech);

// Same residual evaluated on raw quantities: total public output and each
// agent's private output. Boundary private quantities (y_i = 0) contribute
// zero to the sum.
double samuelsonResidualAt(const std::vector<Agent>& agents,
                           double public_output,
                           const std::vector<double>& private_outputs,
                           const Technology& tech);

// Vertical sum of inverse demand curves at a common quantity, with linear
// interpolation inside each curve's tabulated range.
double verticalSumDemand(const std::vector<DemandCurve>& curves,
                         double quantity);

}  // namespace pubgoods
