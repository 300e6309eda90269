#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pubgoods/scenario.hpp"
#include "pubgoods/voluntary.hpp"

namespace pubgoods::verify {

// Brute-force cross-checks, deliberately independent of the closed forms
// and solvers they audit. The CLI exposes them behind --verify; the test
// suites reuse them as oracles.

struct GridMax {
  double arg = 0.0;
  double value = 0.0;
};

// Exhaustive scan of f over {lo, lo+step, ..., hi} (hi always included).
// Ties keep the earliest argument.
GridMax gridMaximize(const std::function<double(double)>& f, double lo,
                     double hi, double step);

struct DeviationCheck {
  bool ok = true;
  int agent = -1;
  double deviation = 0.0;
  double gain = 0.0;
};

// Grid search for a profitable unilateral deviation from `profile`. ok when
// no agent gains more than `slack` at any grid point of [0, endowment].
DeviationCheck noProfitableDeviation(const std::vector<Agent>& agents,
                                     const ContributionProfile& profile,
                                     const Technology& tech, double step,
                                     double slack);

// Central difference (f(x+h) - f(x-h)) / 2h.
double centralDifference(const std::function<double(double)>& f, double x,
                         double h);

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

// Oracle cross-checks appropriate to the scenario kind; `grid_step` sets
// the resolution of the grid searches.
std::vector<CheckResult> verifyScenario(const Scenario& scenario,
                                        double grid_step);

}  // namespace pubgoods::verify
