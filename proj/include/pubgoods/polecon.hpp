#pragma once

#include <cstdint>
#include <vector>

#include "pubgoods/errors.hpp"

namespace pubgoods {

// Concave benefit families with closed-form inverse marginals:
//   Log:   f(g) = beta * ln g,   f'(g) = beta / g
//   Power: f(g) = g^gamma/gamma, f'(g) = g^(gamma-1), gamma in (0,1)
enum class BenefitFamily : std::uint8_t { Log, Power };

// Electorate with proportional income taxation funding a single public
// good: c_i = (1-t) y_i and g = t * sum(y).
struct FiscalModel {
  std::vector<double> incomes;
  BenefitFamily family = BenefitFamily::Log;
  double param = 1.0;  // beta for Log, gamma for Power

  FiscalModel(std::vector<double> incomes_, BenefitFamily family_,
              double param_);

  double benefit(double g) const;
  double marginalBenefit(double g) const;
  // g solving f'(g) = r for r > 0.
  double inverseMarginalBenefit(double r) const;

  double taxBase() const;       // n * mean income = sum of incomes
  double meanIncome() const;
  double medianIncome() const;  // AmbiguityError for even electorates
};

struct FiscalEquilibrium {
  double spending = 0.0;          // g*
  double tax_rate = 0.0;          // g* / tax base, in [0, 1]
  double marginal_benefit = 0.0;  // f'(g*)
  bool at_tax_ceiling = false;    // tax rate exactly exhausts the base
};

// The unique g with f'(g) = income / taxBase. Strictly decreasing in income.
double preferredSpending(const FiscalModel& model, double income);

// Majority-rule outcome: the median-income voter's preferred spending and
// the implied tax rate. Rates above 1 are InfeasibilityErrors, even
// electorates AmbiguityErrors.
FiscalEquilibrium equilibriumSpending(const FiscalModel& model);

// Equilibria under hypothetical median incomes, holding the tax base fixed.
// Spending is strictly decreasing in the median.
std::vector<FiscalEquilibrium> skewComparativeStatics(
    const FiscalModel& model, const std::vector<double>& alternative_medians);

// Equilibrium at an explicit median income over the model's tax base.
FiscalEquilibrium equilibriumAtMedian(const FiscalModel& model,
                                      double median_income);

}  // namespace pubgoods
