#include "pubgoods/polecon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pubgoods {

FiscalModel::FiscalModel(std::vector<double> incomes_, BenefitFamily family_,
                         double param_)
    : incomes(std::move(incomes_)), family(family_), param(param_) {
  if (incomes.empty()) {
    throw ValidationError("at least one voter required");
  }
  for (double y : incomes) {
    if (!std::isfinite(y) || y <= 0.0) {
      throw ValidationError("incomes must be positive");
    }
  }
  if (!std::isfinite(param)) {
    throw ValidationError("benefit parameter must be finite");
  }
  if (family == BenefitFamily::Log && param <= 0.0) {
    throw ValidationError("beta must be positive");
  }
  if (family == BenefitFamily::Power && (param <= 0.0 || param >= 1.0)) {
    throw ValidationError("gamma must lie strictly between 0 and 1");
  }
}

double FiscalModel::benefit(double g) const {
  if (!(g > 0.0)) {
    throw DomainError("spending must be positive");
  }
  return family == BenefitFamily::Log ? param * std::log(g)
                                      : std::pow(g, param) / param;
}

double FiscalModel::marginalBenefit(double g) const {
  if (!(g > 0.0)) {
    throw DomainError("spending must be positive");
  }
  return family == BenefitFamily::Log ? param / g : std::pow(g, param - 1.0);
}

double FiscalModel::inverseMarginalBenefit(double r) const {
  if (!(r > 0.0)) {
    throw DomainError("marginal benefit must be positive");
  }
  return family == BenefitFamily::Log ? param / r
                                      : std::pow(r, 1.0 / (param - 1.0));
}

double FiscalModel::taxBase() const {
  return std::accumulate(incomes.begin(), incomes.end(), 0.0);
}

double FiscalModel::meanIncome() const {
  return taxBase() / static_cast<double>(incomes.size());
}

double FiscalModel::medianIncome() const {
  if (incomes.size() % 2 == 0) {
    throw AmbiguityError("median income undefined for an even electorate");
  }
  std::vector<double> sorted = incomes;
  std::sort(sorted.begin(), sorted.end());
  return sorted[sorted.size() / 2];
}

double preferredSpending(const FiscalModel& model, double income) {
  if (!std::isfinite(income) || income <= 0.0) {
    throw DomainError("income must be positive");
  }
  return model.inverseMarginalBenefit(income / model.taxBase());
}

FiscalEquilibrium equilibriumAtMedian(const FiscalModel& model,
                                      double median_income) {
  const double base = model.taxBase();
  const double ideal = preferredSpending(model, median_income);
  FiscalEquilibrium eq;
  eq.tax_rate = ideal / base;
  if (eq.tax_rate > 1.0 + 1e-12) {
    throw InfeasibilityError("median voter demands more than the tax base");
  }
  eq.tax_rate = std::min(eq.tax_rate, 1.0);
  // Deriving spending back from the rate keeps the budget identity
  // g = t * base exact.
  eq.spending = eq.tax_rate * base;
  eq.marginal_benefit = model.marginalBenefit(eq.spending);
  eq.at_tax_ceiling = eq.tax_rate == 1.0;
  return eq;
}

FiscalEquilibrium equilibriumSpending(const FiscalModel& model) {
  return equilibriumAtMedian(model, model.medianIncome());
}

std::vector<FiscalEquilibrium> skewComparativeStatics(
    const FiscalModel& model, const std::vector<double>& alternative_medians) {
  std::vector<FiscalEquilibrium> sweep;
  sweep.reserve(alternative_medians.size());
  for (double median : alternative_medians) {
    sweep.push_back(equilibriumAtMedian(model, median));
  }
  return sweep;
}

}  // namespace pubgoods
